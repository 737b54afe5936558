// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_KERNELS_HPP
#define CHEBTRACE_KERNELS_HPP

#include <vector>

#include "chebtrace/exact.hpp"
#include "chebtrace/graph.hpp"
#include "chebtrace/matrix.hpp"

namespace chebtrace {

// Kernels of the Laplacian Delta = (q+1) I - A of a (q+1)-regular graph.
//
//   e^{-t Delta}  = h_{0,q}(t) I + sum_{r >= 1} h_{r,q}(t) A_r
//   e^{-it Delta} = w_{0,q}(t) I + sum_{r >= 1} w_{r,q}(t) A_r
//
// with
//   h_{r,q}(t) = e^{-(q+1)t} / t   sum_k q^{-m/2} m I_m(2 sqrt(q) t)
//   w_{r,q}(t) = e^{-i(q+1)t} / t  sum_k q^{-m/2} m i^{m-1} J_m(2 sqrt(q) t)
// where m = r + 2k + 1. At t = 0 both are delta_{r0}.

double heat_coeff(int r, int q, double t);
Complex schrodinger_coeff(int r, int q, double t);

/// The printed variant
///   -(e^{-i(q+1)t} / t) sum_k q^{-m/2} (-i)^{m-1} m J_m(2 sqrt(q) t),
/// which differs from schrodinger_coeff by a sign for even r. Kept for
/// reporting; the operators use schrodinger_coeff.
Complex schrodinger_coeff_displayed(int r, int q, double t);

/// e^{-(q+1)t} [q^{-r/2} I_r - (q-1) sum_{k >= 1} q^{-(r+2k)/2} I_{r+2k}] at 2 sqrt(q) t.
double cjk_alternative_heat_coeff(int r, int q, double t);

struct CoefficientBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// L = q^{-(r+1)/2} (r+1) I_{r+1}(2 sqrt(q) t) / (t e^{(q+1)t}) and
/// U = (1 + c_q) L with c_q = (1 - 1/q)^{-2} - 1. Requires q >= 2, t > 0.
CoefficientBounds heat_coeff_bounds(int r, int q, double t);

/// h_{0,q}(t), ..., h_{R,q}(t) with R chosen so that the dropped terms of
/// the operator expansion stay below 1e-16.
std::vector<double> heat_coeffs(int q, double t);
std::vector<Complex> schrodinger_coeffs(int q, double t);

/// e^{-t Delta} (t >= 0) and e^{-it Delta} from the expansions above.
RealMatrix heat_operator(const RegularGraph& g, double t);
ComplexMatrix schrodinger_operator(const RegularGraph& g, double t);

enum class KernelKind { Heat, Schrodinger };

/// Entry of e^{-t Delta} or e^{-it Delta} on the (q+1)-regular tree between
/// vertices at distance d.
Complex tree_kernel_entry(int q, int d, double t, KernelKind kind);

/// (e^{-t Delta})_{m,n} on Z^D: e^{-2Dt} prod_k I_{|m_k - n_k|}(2t).
double lattice_heat_entry(int D, const std::vector<long>& m, const std::vector<long>& n, double t);

/// Walks of the given length from m to n on Z^D:
///   sum_{k_1 + ... + k_D = k} (d+2k)! prod_l 1 / (k_l! (k_l + |m_l - n_l|)!).
BigInt lattice_walk_count(int D, const std::vector<long>& m, const std::vector<long>& n, int length);

/// Walks of length d + 2k between vertices at distance d on the
/// (q+1)-regular tree: sum_{m <= k} (C(d+2k, m) - C(d+2k, m-1)) q^m.
BigInt tree_walk_count(int q, int d, int k);

}  // namespace chebtrace

#endif  // CHEBTRACE_KERNELS_HPP
