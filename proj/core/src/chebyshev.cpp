// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/chebyshev.hpp"

#include <algorithm>
#include <limits>

namespace chebtrace {

namespace {

// X_0..X_R, then X_{r,q} = X_r - X_{r-2}/q in place (descending so X_{r-2}
// is still the undeformed value when read).
template <class T>
std::vector<T> eval_all(Basis basis, int R, T x) {
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "polynomial index must be >= 0");
  std::vector<T> v(static_cast<std::size_t>(R) + 1);
  v[0] = T(1);
  if (R >= 1) v[1] = x;
  for (int r = 1; r < R; ++r) v[r + 1] = x * v[r] - v[r - 1];
  const double iq = basis.inverse_q();
  if (iq != 0.0) {
    for (int r = R; r >= 2; --r) v[r] -= iq * v[r - 2];
  }
  return v;
}

}  // namespace

double cheb_eval(Basis basis, int r, double x) { return eval_all(basis, r, x).back(); }
Complex cheb_eval(Basis basis, int r, Complex x) { return eval_all(basis, r, x).back(); }
std::vector<double> cheb_eval_all(Basis basis, int R, double x) { return eval_all(basis, R, x); }
std::vector<Complex> cheb_eval_all(Basis basis, int R, Complex x) { return eval_all(basis, R, x); }

std::vector<Rational> cheb_coefficients(Basis basis, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidParameter, "polynomial index must be >= 0");
  // Monomial coefficients of X_0..X_r.
  std::vector<std::vector<Rational>> x(static_cast<std::size_t>(r) + 1);
  x[0] = {Rational(1)};
  if (r >= 1) x[1] = {Rational(0), Rational(1)};
  for (int k = 1; k < r; ++k) {
    std::vector<Rational> next(static_cast<std::size_t>(k) + 2, Rational(0));
    for (std::size_t i = 0; i < x[k].size(); ++i) next[i + 1] += x[k][i];
    for (std::size_t i = 0; i < x[k - 1].size(); ++i) next[i] -= x[k - 1][i];
    x[k + 1] = std::move(next);
  }
  std::vector<Rational> out = x[r];
  if (r >= 2) {
    const Rational iq = basis.inverse_q_exact();
    for (std::size_t i = 0; i < x[r - 2].size(); ++i) out[i] -= iq * x[r - 2][i];
  }
  return out;
}

double km_density(Basis q, double x) {
  const double ax = std::abs(x);
  if (ax > 2.0) return 0.0;
  constexpr double pi = std::numbers::pi;
  if (q.is_y()) {
    if (ax == 2.0) throw Error(ErrorCode::SingularEndpoint, "q = 1 density diverges at |x| = 2");
    return 1.0 / (pi * std::sqrt(4.0 - x * x));
  }
  const double s = std::sqrt(4.0 - x * x);
  if (q.is_infinite()) return s / (2.0 * pi);
  const double qq = q.q();
  const double c = 1.0 / std::sqrt(qq) + std::sqrt(qq);
  return (qq + 1.0) * s / (2.0 * pi * (c * c - x * x));
}

double km_theta_weight(Basis q, double theta) {
  constexpr double pi = std::numbers::pi;
  if (q.is_y()) return 1.0 / pi;
  const double s = std::sin(theta);
  if (q.is_infinite()) return 2.0 * s * s / pi;
  const double qq = q.q();
  const double c = 1.0 / std::sqrt(qq) + std::sqrt(qq);
  const double x = 2.0 * std::cos(theta);
  return (qq + 1.0) * 2.0 * s * s / (pi * (c * c - x * x));
}

Complex CoefficientSeries::evaluate(Complex x) const {
  if (coeffs.empty()) return {};
  const auto v = cheb_eval_all(basis, static_cast<int>(coeffs.size()) - 1, x);
  Complex s{};
  for (std::size_t r = 0; r < coeffs.size(); ++r) s += coeffs[r] * v[r];
  return s;
}

double CoefficientSeries::tail_bound_on_support() const {
  if (finite_support) return 0.0;
  if (!decay) return std::numeric_limits<double>::infinity();
  const double tau = decay->ratio;
  if (tau >= 1.0) return std::numeric_limits<double>::infinity();
  // |X_{r,q}| <= (r + 1) + (r - 1)/q <= 2 (r + 1) on [-2, 2].
  double total = 0.0;
  for (std::size_t r = coeffs.size();; ++r) {
    const double term = decay->constant * std::pow(tau, static_cast<double>(r)) * 2.0 * (r + 1.0);
    total += term;
    if (term <= 1e-18 * total || term == 0.0 || r > coeffs.size() + 100000) break;
  }
  return total;
}

Decay fit_decay(const std::vector<Complex>& coeffs, double noise_floor) {
  double peak = 0.0;
  for (const auto& c : coeffs) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return {0.0, 0.0};
  const double floor = noise_floor * peak;

  std::vector<std::size_t> idx;
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    if (std::abs(coeffs[r]) > floor) idx.push_back(r);
  if (idx.size() < 2 || idx.back() == 0) return {0.0, std::abs(coeffs[0])};
  if (idx.size() > 8) idx.erase(idx.begin(), idx.end() - 8);

  // Least-squares slope of log|a_r| against r.
  double sr = 0, sl = 0, srr = 0, srl = 0;
  for (auto r : idx) {
    const double l = std::log(std::abs(coeffs[r]));
    sr += r;
    sl += l;
    srr += static_cast<double>(r) * r;
    srl += r * l;
  }
  const double m = static_cast<double>(idx.size());
  const double den = m * srr - sr * sr;
  const double tau = den > 0 ? std::exp((m * srl - sr * sl) / den) : 1.0;

  double C = 0.0;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    const double a = std::abs(coeffs[r]);
    if (a <= floor) continue;
    C = std::max(C, a / std::pow(tau, static_cast<double>(r)));
  }
  return {tau, C};
}

namespace {

CoefficientSeries to_xinf(const CoefficientSeries& s) {
  CoefficientSeries out;
  out.basis = Basis::Xinf();
  out.finite_support = s.finite_support;
  const double iq = s.basis.inverse_q();
  const std::size_t n = s.size();
  const std::size_t m = s.finite_support ? n : (n >= 2 ? n - 2 : 0);
  out.coeffs.resize(m);
  for (std::size_t r = 0; r < m; ++r) out.coeffs[r] = s[r] - iq * s[r + 2];
  if (s.decay) {
    const double t = s.decay->ratio;
    out.decay = Decay{t, s.decay->constant * (1.0 + iq * t * t)};
  }
  return out;
}

CoefficientSeries from_xinf(const CoefficientSeries& s, Basis target, double tol) {
  CoefficientSeries out;
  out.basis = target;
  out.finite_support = s.finite_support;
  const double iq = target.inverse_q();
  const std::size_t n = s.size();

  if (!s.finite_support) {
    if (!s.decay) throw Error(ErrorCode::MissingDecay, "series has no declared decay for the infinite re-expansion");
    const double t = s.decay->ratio;
    if (t >= 1.0) throw Error(ErrorCode::NoConvergence, "declared decay ratio is not below 1");
    const double dropped = s.decay->constant * std::pow(t, static_cast<double>(n)) / (1.0 - t);
    if (dropped > tol) {
      throw Error(ErrorCode::NoConvergence, "stored coefficients too short for the requested tolerance");
    }
    out.decay = Decay{t, s.decay->constant / (1.0 - iq * t * t)};
  }

  out.coeffs.assign(n, Complex{});
  // Backward accumulation: a_{r,q} = a_{r,inf} + a_{r+2,q}/q.
  for (std::size_t k = n; k-- > 0;) {
    out.coeffs[k] = s[k] + (k + 2 < n ? iq * out.coeffs[k + 2] : Complex{});
  }
  return out;
}

}  // namespace

CoefficientSeries basis_convert(const CoefficientSeries& s, Basis target, double tol) {
  if (s.basis == target) return s;
  CoefficientSeries mid = s.basis.is_infinite() ? s : to_xinf(s);
  if (target.is_infinite()) return mid;
  return from_xinf(mid, target, tol);
}

}  // namespace chebtrace
