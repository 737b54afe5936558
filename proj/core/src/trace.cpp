// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>

#include "chebtrace/coefficients.hpp"
#include "chebtrace/eigen_solver.hpp"
#include "chebtrace/error.hpp"
#include "chebtrace/nbw.hpp"
#include "chebtrace/spectral.hpp"

namespace chebtrace {

namespace {

// Neumaier summation on both components.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(re_, cre_, x.real());
    add_part(im_, cim_, x.imag());
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  double re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

Complex km_integral(const FunctionSpec& h, int q) {
  if (std::holds_alternative<CircleSamples>(h.variant())) return coeffs_a(h, Basis::Xq(q), 0)[0];
  return km_integrate(Basis::Xq(q), [&](double x) { return h(x); }, 1e-14);
}

Basis graph_basis(const RegularGraph& g) { return Basis::Xq(g.q()); }

}  // namespace

int truncation_radius(const CoefficientSeries& s, int q, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidParameter, "tolerance must be positive");
  if (s.finite_support) {
    int last = 0;
    for (std::size_t r = 0; r < s.size(); ++r)
      if (s.coeffs[r] != Complex{}) last = static_cast<int>(r);
    return last;
  }
  if (!s.decay) throw Error(ErrorCode::MissingDecay, "series has no decay model");
  const double x = s.decay->ratio * std::sqrt(static_cast<double>(q));
  if (x >= 1.0) throw Error(ErrorCode::DivergentSeries, "decay ratio times sqrt(q) is not below 1");
  const double c = s.decay->constant * (1.0 + 1.0 / q);
  if (c == 0.0 || x == 0.0) return 0;
  // Tail after R: c x^{R+1} / (1 - x).
  int R = 0;
  while (c * std::pow(x, R + 1) / (1.0 - x) >= tol) {
    if (++R > 100000) throw Error(ErrorCode::DivergentSeries, "truncation radius out of range");
  }
  return R;
}

CoefficientSeries truncated_coefficients(const FunctionSpec& h, Basis basis, int q, double tol) {
  int want = 24;
  for (int attempt = 0; attempt < 6; ++attempt) {
    CoefficientSeries s = coeffs_a(h, basis, want);
    const int R = truncation_radius(s, q, tol);
    if (R < static_cast<int>(s.size())) {
      s.coeffs.resize(static_cast<std::size_t>(R) + 1);
      return s;
    }
    want = R + 8;
  }
  throw Error(ErrorCode::NoConvergence, "coefficient truncation did not stabilise");
}

ComplexMatrix functional_calculus(const RegularGraph& g, const FunctionSpec& h, double tol) {
  const int q = g.q();
  const auto s = truncated_coefficients(h, graph_basis(g), q, tol);
  const int R = static_cast<int>(s.size()) - 1;
  const auto mats = nbw_matrices_real(g, std::max(R, 1));
  const auto n = static_cast<Eigen::Index>(g.vertex_count());

  ComplexMatrix out = km_integral(h, q) * ComplexMatrix::Identity(n, n);
  for (int r = 1; r <= R; ++r) {
    if (s.coeffs[r] == Complex{}) continue;
    out += (std::pow(static_cast<double>(q), -r / 2.0) * s.coeffs[r]) * mats[r].cast<Complex>();
  }
  return out;
}

ComplexMatrix functional_calculus_oracle(const RegularGraph& g, const FunctionSpec& h) {
  return graph_spectrum(g, true).apply(h);
}

TraceCheck pretrace(const RegularGraph& g, Vertex v, const FunctionSpec& h, double tol) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  const int q = g.q();
  const auto s = truncated_coefficients(h, graph_basis(g), q, tol);
  const int R = static_cast<int>(s.size()) - 1;
  const auto mats = nbw_matrices_real(g, std::max(R, 1));
  const auto vi = static_cast<Eigen::Index>(v);

  TraceCheck out;
  out.lhs = vertex_integral(g, v, h);
  CompensatedSum rhs;
  rhs.add(km_integral(h, q));
  for (int r = 1; r <= R; ++r) {
    const double f = mats[r](vi, vi);
    if (f != 0.0) rhs.add(std::pow(static_cast<double>(q), -r / 2.0) * s.coeffs[r] * f);
  }
  out.rhs = rhs.value();
  out.residual = std::abs(out.lhs - out.rhs);
  out.terms = R;
  return out;
}

namespace {

Complex spectral_side(const RegularGraph& g, const FunctionSpec& h) {
  const double sc = 1.0 / std::sqrt(static_cast<double>(g.q()));
  CompensatedSum lhs;
  for (double l : eigenvalues_symmetric(adjacency_matrix(g))) lhs.add(h(sc * l));
  return lhs.value();
}

}  // namespace

TraceCheck trace_formula(const RegularGraph& g, const FunctionSpec& h, double tol) {
  const int q = g.q();
  const double n = static_cast<double>(g.vertex_count());
  // c_r <= |V| (q+1) q^{r-1}: the truncation bound scales with |V|.
  const auto s = truncated_coefficients(h, Basis::Y(), q, tol / n);
  const int R = static_cast<int>(s.size()) - 1;
  const auto table = circuit_counts(g, std::max(R, 1), CircuitRoute::Combinatorial);

  TraceCheck out;
  out.lhs = spectral_side(g, h);
  CompensatedSum rhs;
  rhs.add(n * km_integral(h, q));
  for (int r = 1; r <= R; ++r) {
    if (table.c[r] != 0) rhs.add(std::pow(static_cast<double>(q), -r / 2.0) * s.coeffs[r] * static_cast<double>(table.c[r]));
  }
  out.rhs = rhs.value();
  out.residual = std::abs(out.lhs - out.rhs);
  out.terms = R;
  return out;
}

PrimeTraceCheck trace_formula_prime(const RegularGraph& g, const FunctionSpec& h, double tol, int L) {
  const int q = g.q();
  const double qd = q;
  const double n = static_cast<double>(g.vertex_count());
  auto s = truncated_coefficients(h, Basis::Y(), q, tol / n);
  int R = static_cast<int>(s.size()) - 1;

  // Bound on sum_{L < r <= R} q^{-r/2} |a_{r,1}| c_r; beyond R the
  // coefficient truncation already keeps the sum below tol.
  auto tail_after = [&](int horizon) {
    double t = 0.0;
    for (int r = horizon + 1; r <= R; ++r) {
      t += std::pow(qd, -r / 2.0) * std::abs(s.coeffs[r]) * n * (qd + 1.0) * std::pow(qd, r - 1);
    }
    return t;
  };

  if (L < 0) {
    L = 1;
    while (L < R && tail_after(L) > tol / 2.0) ++L;
  }
  if (L < 1) throw Error(ErrorCode::InvalidParameter, "prime circuit horizon must be >= 1");

  PrimeTraceCheck out;
  out.L = L;
  out.lhs = spectral_side(g, h);
  out.tail_bound = tail_after(L);

  const auto classes = prime_circuit_classes(g, L);
  out.classes = classes.size();
  CompensatedSum rhs;
  rhs.add(n * km_integral(h, q));
  for (const auto& c : classes) {
    const int l = static_cast<int>(c.length());
    for (int m = l; m <= R; m += l) {
      rhs.add(static_cast<double>(l) * s[static_cast<std::size_t>(m)] * std::pow(qd, -m / 2.0));
    }
  }
  out.rhs = rhs.value();
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace chebtrace
