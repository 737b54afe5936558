// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_RADIAL_HPP
#define CHEBTRACE_RADIAL_HPP

#include <vector>

#include "chebtrace/chebyshev.hpp"
#include "chebtrace/exact.hpp"

namespace chebtrace {

/// Radial function on the (q+1)-regular tree: values[r] on the sphere of
/// radius r around the root, zero beyond values.size() - 1.
struct RadialFunction {
  int q = 2;
  std::vector<Rational> values;

  Rational operator()(std::size_t r) const { return r < values.size() ? values[r] : Rational(0); }
};

/// Hf(n) = f(|n|) + (q-1) sum_{j >= 1} q^{j-1} f(|n| + 2j) for n = 0..N.
/// Hf is even in n, so only n >= 0 is returned.
std::vector<Rational> horocycle_transform(const RadialFunction& f);

/// f(n) = Hf(n) - (q-1) sum_{j >= 1} Hf(n + 2j).
RadialFunction inverse_horocycle(const std::vector<Rational>& hf, int q);

/// h = sum_{n >= 0} Hf(n) q^{n/2} Y_n, the function whose value at
/// q^{s-1/2} + q^{1/2-s} is the spherical transform of f.
CoefficientSeries spherical_transform_series(const RadialFunction& f);

/// Phi(f) = f(0) + (1 + 1/q)^{-1} sum_{r >= 1} f(r) q^{r/2} X_{r,q}.
CoefficientSeries radial_embedding(const RadialFunction& f);

/// f(0) g(0) + (1 + 1/q)^{-1} sum_{r >= 1} f(r) g(r) q^r, the value that
/// <Phi f, Phi g> takes in L^2(mu_q).
Rational radial_embedding_pairing(const RadialFunction& f, const RadialFunction& g);

}  // namespace chebtrace

#endif  // CHEBTRACE_RADIAL_HPP
