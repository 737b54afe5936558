// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_ZETA_HPP
#define CHEBTRACE_ZETA_HPP

#include <optional>
#include <vector>

#include "chebtrace/exact.hpp"
#include "chebtrace/graph.hpp"
#include "chebtrace/matrix.hpp"

namespace chebtrace {

/// 1 / zeta_G(t) = (1 - t^2)^{(q-1)|V|/2} det(I - tA + q t^2 I), with the
/// determinant taken as prod_k (1 - t lambda_k + q t^2).
Complex zeta_reciprocal(const RegularGraph& g, Complex t);

/// Coefficients p_0..p_n of det(x I - M), by Faddeev-LeVerrier in exact arithmetic.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& m);

/// det(I - tA + q t^2 I) as an integer polynomial in t (degree 2|V|).
std::vector<BigInt> determinant_polynomial(const RegularGraph& g);

/// Taylor coefficients of 1 / zeta_G through t^R, exact.
RationalSeries zeta_reciprocal_series(const RegularGraph& g, int R);

/// Same series from the Euler product prod_gamma (1 - t^{l_gamma}) over the
/// prime classes of length <= R.
RationalSeries euler_product_series(const RegularGraph& g, int R);

/// log zeta_G(t) = sum_{r >= 1} c_r t^r / r: returns c_r / r for r = 0..R.
std::vector<Rational> zeta_log_series(const RegularGraph& g, int R);

/// -log of zeta_reciprocal_series through t^R. Equal to zeta_log_series.
std::vector<Rational> determinant_log_series(const RegularGraph& g, int R);

struct RamanujanReport {
  bool ramanujan = false;
  bool bipartite = false;
  double bound = 0.0;              // 2 sqrt(q)
  std::optional<double> witness;   // nontrivial eigenvalue of largest modulus
};

/// Every eigenvalue other than q+1 (and -(q+1) for bipartite G) lies in
/// [-2 sqrt(q), 2 sqrt(q)].
RamanujanReport ramanujan_check(const RegularGraph& g);

bool is_bipartite(const RegularGraph& g);

}  // namespace chebtrace

#endif  // CHEBTRACE_ZETA_HPP
