// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/radial.hpp"

#include <algorithm>
#include <cmath>

#include "chebtrace/error.hpp"

namespace chebtrace {

namespace {

void check_q(int q) {
  if (q < 1) throw Error(ErrorCode::InvalidParameter, "branching number must be >= 1");
}

}  // namespace

std::vector<Rational> horocycle_transform(const RadialFunction& f) {
  check_q(f.q);
  const std::size_t n = f.values.size();
  std::vector<Rational> hf(n, Rational(0));
  for (std::size_t m = 0; m < n; ++m) {
    Rational acc = f(m);
    Rational qp = 1;  // q^{j-1}
    for (std::size_t j = 1; m + 2 * j < n; ++j) {
      acc += (f.q - 1) * qp * f(m + 2 * j);
      qp *= f.q;
    }
    hf[m] = acc;
  }
  return hf;
}

RadialFunction inverse_horocycle(const std::vector<Rational>& hf, int q) {
  check_q(q);
  RadialFunction f;
  f.q = q;
  f.values.assign(hf.size(), Rational(0));
  for (std::size_t m = 0; m < hf.size(); ++m) {
    Rational acc = hf[m];
    for (std::size_t k = m + 2; k < hf.size(); k += 2) acc -= (q - 1) * hf[k];
    f.values[m] = acc;
  }
  return f;
}

CoefficientSeries spherical_transform_series(const RadialFunction& f) {
  const auto hf = horocycle_transform(f);
  CoefficientSeries s;
  s.basis = Basis::Y();
  s.finite_support = true;
  for (std::size_t n = 0; n < hf.size(); ++n) {
    s.coeffs.emplace_back(to_double(hf[n]) * std::pow(static_cast<double>(f.q), n / 2.0), 0.0);
  }
  return s;
}

CoefficientSeries radial_embedding(const RadialFunction& f) {
  check_q(f.q);
  CoefficientSeries s;
  s.basis = Basis::Xq(f.q);
  s.finite_support = true;
  const double c = 1.0 / (1.0 + 1.0 / f.q);
  for (std::size_t r = 0; r < f.values.size(); ++r) {
    const double v = to_double(f.values[r]);
    s.coeffs.emplace_back(r == 0 ? v : c * v * std::pow(static_cast<double>(f.q), r / 2.0), 0.0);
  }
  return s;
}

Rational radial_embedding_pairing(const RadialFunction& f, const RadialFunction& g) {
  if (f.q != g.q) throw Error(ErrorCode::InvalidParameter, "radial functions live on different trees");
  const Rational c = Rational(f.q, f.q + 1);
  Rational acc = f(0) * g(0);
  Rational qr = 1;
  const std::size_t n = std::max(f.values.size(), g.values.size());
  for (std::size_t r = 1; r < n; ++r) {
    qr *= f.q;
    acc += c * f(r) * g(r) * qr;
  }
  return acc;
}

}  // namespace chebtrace
