// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/bessel.hpp"

#include <complex>
#include <cstdlib>

#include "chebtrace/error.hpp"

namespace chebtrace {

namespace {

using LComplex = std::complex<long double>;

// sum_k sign^k (z/2)^{2k+n} / (k! (k+n)!), n >= 0.
Complex series(int n, Complex z, double tol, long double sign) {
  const LComplex h = LComplex(z.real(), z.imag()) / 2.0L;
  LComplex term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= h / static_cast<long double>(k);
  const LComplex h2 = sign * h * h;
  LComplex sum = term;
  const long double peak = std::abs(h);
  for (int k = 1; k < 10000; ++k) {
    term *= h2 / (static_cast<long double>(k) * static_cast<long double>(k + n));
    sum += term;
    if (k > peak && std::abs(term) <= tol * std::abs(sum)) {
      return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    if (term == 0.0L) return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
  }
  throw Error(ErrorCode::NoConvergence, "Bessel series did not converge");
}

}  // namespace

Complex bessel_i(int n, Complex z, double tol) { return series(std::abs(n), z, tol, 1.0L); }

Complex bessel_j(int n, Complex z, double tol) {
  const Complex v = series(std::abs(n), z, tol, -1.0L);
  return (n < 0 && (-n) % 2 == 1) ? -v : v;
}

std::vector<Complex> bessel_i_all(int N, Complex z) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) out.push_back(bessel_i(n, z));
  return out;
}

}  // namespace chebtrace
