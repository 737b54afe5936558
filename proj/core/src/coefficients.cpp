// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebtrace/bessel.hpp"
#include "chebtrace/error.hpp"

namespace chebtrace {

namespace {

// Contour kernel factor (1 - xi^2) / (1 - xi^2 / q).
Complex basis_factor(Basis basis, Complex xi) {
  if (basis.is_y()) return 1.0;
  const Complex x2 = xi * xi;
  return (1.0 - x2) / (1.0 - basis.inverse_q() * x2);
}

// (1/N) sum_j v_j xi_j^r factor(xi_j) for r = 0..R, xi_j = tau e^{2 pi i j / N}.
std::vector<Complex> contour_sums(const std::vector<Complex>& values, double tau, Basis basis, int R) {
  const std::size_t n = values.size();
  std::vector<Complex> out(static_cast<std::size_t>(R) + 1, Complex{});
  for (std::size_t j = 0; j < n; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const Complex xi = std::polar(tau, th);
    Complex w = values[j] * basis_factor(basis, xi);
    for (int r = 0; r <= R; ++r) {
      out[r] += w;
      w *= xi;
    }
  }
  for (auto& c : out) c /= static_cast<double>(n);
  return out;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void check_basis(Basis basis) {
  if (!basis.is_infinite() && !basis.is_y() && basis.q() < 2) {
    throw Error(ErrorCode::InvalidParameter, "unsupported basis");
  }
}

}  // namespace

CoefficientSeries coeffs_a(const FunctionSpec& h, Basis basis, int R, double tol) {
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "R must be >= 0");
  check_basis(basis);
  CoefficientSeries out;
  out.basis = basis;

  if (const auto* cs = std::get_if<CircleSamples>(&h.variant())) {
    if (!basis.is_infinite() && !basis.is_y() && cs->tau * cs->tau >= basis.q()) {
      throw Error(ErrorCode::PoleOnSupport, "sample circle reaches the kernel pole");
    }
    out.coeffs = contour_sums(cs->values, cs->tau, basis, R);
    out.decay = fit_decay(out.coeffs);
    return out;
  }

  if (!(h.holo_radius() > 1.0)) throw Error(ErrorCode::RadiusTooSmall, "h is not holomorphic on any Omega(rho), rho > 1");

  const auto degree = h.polynomial_degree();
  const int want = degree ? std::min(R, *degree) : R;
  auto sample = [&](std::size_t n) {
    std::vector<Complex> v(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      v[j] = h(2.0 * std::cos(th));
    }
    return v;
  };

  std::size_t n = std::max<std::size_t>(64, next_pow2(4 * (static_cast<std::size_t>(want) + 2)));
  if (degree) n = std::max(n, next_pow2(2 * (static_cast<std::size_t>(*degree) + 4)));
  std::vector<Complex> prev = contour_sums(sample(n), 1.0, basis, want);
  constexpr std::size_t kMaxNodes = std::size_t{1} << 20;
  for (;;) {
    if (2 * n > kMaxNodes) throw Error(ErrorCode::NoConvergence, "contour coefficients did not settle");
    n *= 2;
    std::vector<Complex> cur = contour_sums(sample(n), 1.0, basis, want);
    double scale = 1.0, change = 0.0;
    for (std::size_t r = 0; r < cur.size(); ++r) {
      scale = std::max(scale, std::abs(cur[r]));
      change = std::max(change, std::abs(cur[r] - prev[r]));
    }
    prev = std::move(cur);
    if (change < tol * scale) break;
  }
  out.coeffs = std::move(prev);
  if (degree && R >= *degree) {
    out.finite_support = true;
  } else {
    out.decay = fit_decay(out.coeffs);
  }
  return out;
}

CoefficientSeries taylor_to_cheb(const std::vector<Complex>& b, double radius, int R) {
  if (!(radius > 2.0)) throw Error(ErrorCode::RadiusTooSmall, "Taylor radius must exceed 2");
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "R must be >= 0");
  CoefficientSeries out;
  out.basis = Basis::Y();
  int last = -1;
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
    if (b[i] != Complex{}) {
      last = i;
      break;
    }
  }
  const bool poly = std::isinf(radius);
  const int top = poly ? std::min(R, std::max(last, 0)) : R;
  out.coeffs.assign(static_cast<std::size_t>(top) + 1, Complex{});
  for (int r = 0; r <= top; ++r) {
    for (int k = 0; 2 * k + r < static_cast<int>(b.size()); ++k) {
      out.coeffs[r] += to_double(Rational(binomial(2 * k + r, k))) * b[2 * k + r];
    }
  }
  if (poly && R >= last) {
    out.finite_support = true;
  } else {
    out.decay = fit_decay(out.coeffs);
  }
  return out;
}

std::vector<Rational> power_coeffs(int n, Basis basis) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "power must be >= 0");
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
  if (basis.is_y()) {
    for (int k = 0; 2 * k <= n; ++k) a[n - 2 * k] = Rational(binomial(n, k));
    return a;
  }
  for (int k = 0; 2 * k <= n; ++k) a[n - 2 * k] = Rational(binomial(n, k) - binomial(n, k - 1));
  if (basis.is_infinite()) return a;
  const Rational iq = basis.inverse_q_exact();
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t r = a.size(); r-- > 0;) out[r] = a[r] + (r + 2 < a.size() ? iq * out[r + 2] : Rational(0));
  return out;
}

CoefficientSeries exact_series(const std::vector<Rational>& coeffs, Basis basis) {
  CoefficientSeries s;
  s.basis = basis;
  s.finite_support = true;
  for (const auto& c : coeffs) s.coeffs.emplace_back(to_double(c), 0.0);
  return s;
}

namespace {

int auto_radius(double magnitude) {
  const double peak = bessel_i(0, 2.0 * magnitude);
  int r = 1;
  while (bessel_i(r, 2.0 * magnitude) >= 1e-16 * peak) ++r;
  return r;
}

// sum_{k >= 0} iq^k term(r + 2k + 1), stopping once terms are negligible.
template <class Term>
Complex deformed_sum(double iq, int r, Term&& term) {
  Complex s{};
  double w = 1.0;
  for (int k = 0; k < 10000; ++k) {
    const Complex t = w * term(r + 2 * k + 1);
    s += t;
    if (iq == 0.0) return s;
    if (std::abs(t) <= 1e-18 * std::abs(s) || (std::abs(t) == 0.0 && k > 4)) return s;
    w *= iq;
  }
  throw Error(ErrorCode::NoConvergence, "deformed Bessel sum did not converge");
}

}  // namespace

CoefficientSeries exp_coeffs(Complex z, Basis basis, int R) {
  check_basis(basis);
  if (R < 0) R = auto_radius(std::abs(z));
  CoefficientSeries out;
  out.basis = basis;
  if (basis.is_y()) {
    for (int r = 0; r <= R; ++r) out.coeffs.push_back(bessel_i(r, 2.0 * z));
  } else {
    if (z == Complex{}) throw Error(ErrorCode::ZeroArgument, "the (1/z) forms are undefined at z = 0");
    const double iq = basis.inverse_q();
    for (int r = 0; r <= R; ++r) {
      out.coeffs.push_back(deformed_sum(iq, r, [&](int m) { return static_cast<double>(m) * bessel_i(m, 2.0 * z); }) / z);
    }
  }
  if (z == Complex{}) {
    out.finite_support = true;
    out.coeffs.resize(1);
  } else {
    out.decay = fit_decay(out.coeffs);
  }
  return out;
}

CoefficientSeries wave_coeffs(double s, Basis basis, int R) {
  check_basis(basis);
  if (R < 0) R = auto_radius(std::abs(s));
  CoefficientSeries out;
  out.basis = basis;
  auto ipow = [](int m) {
    switch (((m % 4) + 4) % 4) {
      case 0: return Complex(1, 0);
      case 1: return Complex(0, 1);
      case 2: return Complex(-1, 0);
      default: return Complex(0, -1);
    }
  };
  if (basis.is_y()) {
    for (int r = 0; r <= R; ++r) out.coeffs.push_back(ipow(r) * bessel_j(r, 2.0 * s));
  } else {
    if (s == 0.0) throw Error(ErrorCode::ZeroArgument, "the (1/s) forms are undefined at s = 0");
    const double iq = basis.inverse_q();
    for (int r = 0; r <= R; ++r) {
      out.coeffs.push_back(
          deformed_sum(iq, r, [&](int m) { return static_cast<double>(m) * ipow(m - 1) * bessel_j(m, 2.0 * s); }) / s);
    }
  }
  if (s == 0.0) {
    out.finite_support = true;
    out.coeffs.resize(1);
  } else {
    out.decay = fit_decay(out.coeffs);
  }
  return out;
}

CoefficientSeries LogKernel::at(double t) const {
  CoefficientSeries s;
  s.basis = Basis::Y();
  double tp = 1.0;
  for (const auto& w : weights) {
    s.coeffs.emplace_back(to_double(w) * tp, 0.0);
    tp *= t;
  }
  s.decay = Decay{std::abs(t), 1.0};
  return s;
}

LogKernel log_kernel_coeffs(int R) {
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "R must be >= 0");
  LogKernel k;
  k.weights.push_back(Rational(0));
  for (int r = 1; r <= R; ++r) k.weights.push_back(Rational(-1, r));
  return k;
}

}  // namespace chebtrace
