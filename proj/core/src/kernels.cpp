// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "chebtrace/bessel.hpp"
#include "chebtrace/error.hpp"
#include "chebtrace/nbw.hpp"

namespace chebtrace {

namespace {

void check_q(int q) {
  if (q < 1) throw Error(ErrorCode::InvalidParameter, "branching number must be >= 1");
}

Complex ipow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Highest Bessel order worth keeping: (q|t|)^m / m! bounds the size of the
// order-m contribution to the operator expansion.
int order_cutoff(int q, double t, int at_least) {
  const double a = q * std::abs(t);
  int m = static_cast<int>(std::ceil(std::max(std::exp(1.0) * a, q * t * t))) + 20;
  const double target = std::log(1e-18) - std::log(q + 1.0);
  while (a > 0 && m * std::log(a) - std::lgamma(m + 1.0) >= target) m += 4;
  return std::max(m, at_least + 2);
}

// v[m] = q^{-m/2} m B_m(2 sqrt(q) t) times the phase of the kind.
std::vector<Complex> scaled_orders(int q, double t, int M, KernelKind kind) {
  const double x = 2.0 * std::sqrt(static_cast<double>(q)) * t;
  std::vector<Complex> v(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) {
    const double s = std::pow(static_cast<double>(q), -m / 2.0) * m;
    v[m] = kind == KernelKind::Heat ? Complex(s * bessel_i(m, x)) : s * ipow(m - 1) * bessel_j(m, x);
  }
  return v;
}

// out[r] = sum_k v[r + 2k + 1] for r = 0..R.
std::vector<Complex> suffix_sums(const std::vector<Complex>& v, int R) {
  const int M = static_cast<int>(v.size()) - 1;
  std::vector<Complex> s(static_cast<std::size_t>(M) + 2, Complex{});
  for (int r = M - 1; r >= 0; --r) s[r] = v[r + 1] + (r + 2 <= M ? s[r + 2] : Complex{});
  s.resize(static_cast<std::size_t>(R) + 1);
  return s;
}

std::vector<Complex> kernel_coeffs(int q, double t, int R, KernelKind kind) {
  check_q(q);
  std::vector<Complex> out(static_cast<std::size_t>(R) + 1, Complex{});
  if (t == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const int M = order_cutoff(q, t, R);
  auto s = suffix_sums(scaled_orders(q, t, M, kind), R);
  const Complex pre = kind == KernelKind::Heat ? Complex(std::exp(-(q + 1.0) * t) / t)
                                               : std::polar(1.0 / t, -(q + 1.0) * t);
  for (int r = 0; r <= R; ++r) out[r] = pre * s[r];
  return out;
}

// Operator expansion length: past the Bessel peak, stop once (q t)^r / r!
// times the largest A_r entry is negligible.
int operator_radius(int q, double t) {
  const double a = q * std::abs(t);
  int r = static_cast<int>(std::ceil(std::exp(1.0) * a)) + 2;
  while (a > 0 && r * std::log(a) - std::lgamma(r + 1.0) + std::log(q + 1.0) >= std::log(1e-17)) ++r;
  return r;
}

}  // namespace

double heat_coeff(int r, int q, double t) {
  if (r < 0) throw Error(ErrorCode::InvalidParameter, "r must be >= 0");
  if (t < 0) throw Error(ErrorCode::InvalidParameter, "heat kernel needs t >= 0");
  return kernel_coeffs(q, t, r, KernelKind::Heat)[r].real();
}

Complex schrodinger_coeff(int r, int q, double t) {
  if (r < 0) throw Error(ErrorCode::InvalidParameter, "r must be >= 0");
  return kernel_coeffs(q, t, r, KernelKind::Schrodinger)[r];
}

Complex schrodinger_coeff_displayed(int r, int q, double t) {
  if (r < 0) throw Error(ErrorCode::InvalidParameter, "r must be >= 0");
  check_q(q);
  if (t == 0.0) return r == 0 ? Complex(1.0) : Complex{};
  const int M = order_cutoff(q, t, r);
  const double x = 2.0 * std::sqrt(static_cast<double>(q)) * t;
  Complex s{};
  for (int m = r + 1; m <= M; m += 2) {
    s += std::pow(static_cast<double>(q), -m / 2.0) * ipow(-(m - 1)) * static_cast<double>(m) * bessel_j(m, x);
  }
  return -std::polar(1.0 / t, -(q + 1.0) * t) * s;
}

double cjk_alternative_heat_coeff(int r, int q, double t) {
  if (r < 0) throw Error(ErrorCode::InvalidParameter, "r must be >= 0");
  if (t < 0) throw Error(ErrorCode::InvalidParameter, "heat kernel needs t >= 0");
  check_q(q);
  if (t == 0.0) return r == 0 ? 1.0 : 0.0;
  const double qd = q;
  const double x = 2.0 * std::sqrt(qd) * t;
  double tail = 0.0;
  if (q > 1) {
    const int M = order_cutoff(q, t, r);
    for (int m = r + 2; m <= M; m += 2) tail += std::pow(qd, -m / 2.0) * bessel_i(m, x);
  }
  return std::exp(-(qd + 1.0) * t) * (std::pow(qd, -r / 2.0) * bessel_i(r, x) - (qd - 1.0) * tail);
}

CoefficientBounds heat_coeff_bounds(int r, int q, double t) {
  if (q < 2) throw Error(ErrorCode::InvalidParameter, "bounds need q >= 2");
  if (!(t > 0)) throw Error(ErrorCode::InvalidParameter, "bounds need t > 0");
  if (r < 0) throw Error(ErrorCode::InvalidParameter, "r must be >= 0");
  const double qd = q;
  const double lower = std::pow(qd, -(r + 1) / 2.0) * (r + 1) * bessel_i(r + 1, 2.0 * std::sqrt(qd) * t) /
                       (t * std::exp((qd + 1.0) * t));
  const double cq = 1.0 / ((1.0 - 1.0 / qd) * (1.0 - 1.0 / qd)) - 1.0;
  return {lower, (1.0 + cq) * lower};
}

std::vector<double> heat_coeffs(int q, double t) {
  if (t < 0) throw Error(ErrorCode::InvalidParameter, "heat kernel needs t >= 0");
  check_q(q);
  const auto c = kernel_coeffs(q, t, operator_radius(q, t), KernelKind::Heat);
  std::vector<double> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.real());
  return out;
}

std::vector<Complex> schrodinger_coeffs(int q, double t) {
  check_q(q);
  return kernel_coeffs(q, t, operator_radius(q, t), KernelKind::Schrodinger);
}

RealMatrix heat_operator(const RegularGraph& g, double t) {
  const auto h = heat_coeffs(g.q(), t);
  const int R = static_cast<int>(h.size()) - 1;
  const auto mats = nbw_matrices_real(g, std::max(R, 1));
  RealMatrix out = RealMatrix::Zero(mats[0].rows(), mats[0].cols());
  for (int r = R; r >= 0; --r) out += h[r] * mats[r];
  return out;
}

ComplexMatrix schrodinger_operator(const RegularGraph& g, double t) {
  const auto w = schrodinger_coeffs(g.q(), t);
  const int R = static_cast<int>(w.size()) - 1;
  const auto mats = nbw_matrices_real(g, std::max(R, 1));
  ComplexMatrix out = ComplexMatrix::Zero(mats[0].rows(), mats[0].cols());
  for (int r = R; r >= 0; --r) out += w[r] * mats[r].cast<Complex>();
  return out;
}

Complex tree_kernel_entry(int q, int d, double t, KernelKind kind) {
  if (d < 0) throw Error(ErrorCode::InvalidParameter, "distance must be >= 0");
  return kind == KernelKind::Heat ? Complex(heat_coeff(d, q, t)) : schrodinger_coeff(d, q, t);
}

namespace {

std::vector<long> displacement(int D, const std::vector<long>& m, const std::vector<long>& n) {
  if (D < 1) throw Error(ErrorCode::InvalidParameter, "lattice dimension must be >= 1");
  if (m.size() != static_cast<std::size_t>(D) || n.size() != static_cast<std::size_t>(D)) {
    throw Error(ErrorCode::InvalidParameter, "lattice points must have D coordinates");
  }
  std::vector<long> d(static_cast<std::size_t>(D));
  for (int k = 0; k < D; ++k) d[k] = std::labs(m[k] - n[k]);
  return d;
}

}  // namespace

double lattice_heat_entry(int D, const std::vector<long>& m, const std::vector<long>& n, double t) {
  const auto d = displacement(D, m, n);
  if (t < 0) throw Error(ErrorCode::InvalidParameter, "heat kernel needs t >= 0");
  double v = std::exp(-2.0 * D * t);
  for (long dk : d) v *= bessel_i(static_cast<int>(dk), 2.0 * t);
  return v;
}

BigInt lattice_walk_count(int D, const std::vector<long>& m, const std::vector<long>& n, int length) {
  const auto d = displacement(D, m, n);
  long dist = 0;
  for (long dk : d) dist += dk;
  if (length < dist || (length - dist) % 2 != 0) return 0;
  const long k = (length - dist) / 2;

  // Sum over compositions k_1 + ... + k_D = k of prod 1 / (k_l! (k_l + d_l)!).
  Rational total = 0;
  std::vector<long> parts(static_cast<std::size_t>(D), 0);
  auto recurse = [&](auto&& self, int axis, long left, Rational acc) -> void {
    if (axis == D - 1) {
      total += acc / Rational(factorial(left) * factorial(left + d[axis]));
      return;
    }
    for (long kl = 0; kl <= left; ++kl) {
      self(self, axis + 1, left - kl, acc / Rational(factorial(kl) * factorial(kl + d[axis])));
    }
  };
  recurse(recurse, 0, k, Rational(1));
  const Rational w = total * Rational(factorial(length));
  if (denominator(w) != 1) throw Error(ErrorCode::Overflow, "walk count is not an integer");
  return numerator(w);
}

BigInt tree_walk_count(int q, int d, int k) {
  check_q(q);
  if (d < 0 || k < 0) throw Error(ErrorCode::InvalidParameter, "d and k must be >= 0");
  const long n = d + 2L * k;
  BigInt total = 0;
  BigInt qm = 1;
  for (long m = 0; m <= k; ++m) {
    total += (binomial(n, m) - binomial(n, m - 1)) * qm;
    qm *= q;
  }
  return total;
}

}  // namespace chebtrace
