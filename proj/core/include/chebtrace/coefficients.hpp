// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_COEFFICIENTS_HPP
#define CHEBTRACE_COEFFICIENTS_HPP

#include <vector>

#include "chebtrace/chebyshev.hpp"
#include "chebtrace/exact.hpp"
#include "chebtrace/function_spec.hpp"

namespace chebtrace {

/// a_{0,q}(h)..a_{R,q}(h) from the contour integral on |xi| = 1:
///   a_{r,q} = (1/N) sum_j h(2 cos th_j) e^{i r th_j} (1 - e^{2i th_j}) / (1 - e^{2i th_j}/q),
/// where the factor is 1 in the Y basis. N is a power of two doubled until
/// the last coefficient moves by less than tol. Circle samples use their own
/// radius and count without refinement. Polynomials come back with finite
/// support; everything else carries a fitted decay.
/// Throws Error{NoConvergence} and Error{RadiusTooSmall} (holo_radius <= 1).
CoefficientSeries coeffs_a(const FunctionSpec& h, Basis basis, int R, double tol = 1e-12);

/// Y-basis coefficients from Taylor coefficients b_n:
///   a_{r,1} = sum_k C(2k+r, k) b_{2k+r}.
/// Needs radius > 2 (Error{RadiusTooSmall}); an infinite radius with finitely
/// many b_n gives finite support.
CoefficientSeries taylor_to_cheb(const std::vector<Complex>& b, double radius, int R);

/// Exact coefficients of x^n:
///   Y:    x^n = sum_{0 <= k <= n/2} C(n, k) Y_{n-2k}       (Y_0 = 1)
///   Xinf: x^n = sum_{0 <= k <= n/2} (C(n, k) - C(n, k-1)) X_{n-2k}
///   Xq:   re-expansion of the Xinf form, a_{r,q} = sum_j q^{-j} a_{r+2j,inf}.
std::vector<Rational> power_coeffs(int n, Basis basis);

/// Exact coefficients wrapped as a finitely supported series.
CoefficientSeries exact_series(const std::vector<Rational>& coeffs, Basis basis);

/// Closed forms for exp(z x):
///   a_{r,1} = I_r(2z),  a_{r,inf} = (r+1) I_{r+1}(2z) / z,
///   a_{r,q} = (1/z) sum_k q^{-k} (r+2k+1) I_{r+2k+1}(2z).
/// R < 0 picks R so the last coefficient is below 1e-16 of the largest.
/// Throws Error{ZeroArgument} at z = 0 outside the Y basis.
CoefficientSeries exp_coeffs(Complex z, Basis basis, int R = -1);

/// Closed forms for exp(i s x) written with J:
///   a_{r,1} = i^r J_r(2s),  a_{r,inf} = (r+1) i^r J_{r+1}(2s) / s,
///   a_{r,q} = (1/s) sum_k q^{-k} (r+2k+1) i^{r+2k} J_{r+2k+1}(2s).
CoefficientSeries wave_coeffs(double s, Basis basis, int R = -1);

/// log(1 - x t + t^2) = sum_{r >= 1} w_r t^r Y_r(x) with w_r = -1/r.
struct LogKernel {
  std::vector<Rational> weights;  // w_0 = 0, w_r = -1/r

  /// Y-basis series at a fixed t.
  CoefficientSeries at(double t) const;
};
LogKernel log_kernel_coeffs(int R);

}  // namespace chebtrace

#endif  // CHEBTRACE_COEFFICIENTS_HPP
