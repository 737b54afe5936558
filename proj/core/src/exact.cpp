// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/exact.hpp"

#include <algorithm>

#include "chebtrace/error.hpp"

namespace chebtrace {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RationalSeries RationalSeries::derivative() const {
  std::vector<Rational> d(c_.size(), Rational(0));
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RationalSeries(std::move(d));
}

RationalSeries RationalSeries::operator*(const RationalSeries& other) const {
  const std::size_t n = std::min(size(), other.size());
  std::vector<Rational> p(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) p[i + j] += c_[i] * other.c_[j];
  return RationalSeries(std::move(p));
}

RationalSeries RationalSeries::divided_by(const RationalSeries& divisor) const {
  if (divisor.size() == 0 || divisor[0] == 0) {
    throw Error(ErrorCode::InvalidParameter, "series divisor has zero constant term");
  }
  const std::size_t n = std::min(size(), divisor.size());
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = c_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= divisor[j] * out[k - j];
    out[k] = acc / divisor[0];
  }
  return RationalSeries(std::move(out));
}

RationalSeries RationalSeries::log() const {
  if (size() == 0 || c_[0] != 1) {
    throw Error(ErrorCode::InvalidParameter, "log needs constant term 1");
  }
  // (log f)' = f' / f, then integrate termwise.
  const RationalSeries q = derivative().divided_by(*this);
  std::vector<Rational> out(size(), Rational(0));
  for (std::size_t k = 1; k < size(); ++k) out[k] = q[k - 1] / static_cast<long>(k);
  return RationalSeries(std::move(out));
}

}  // namespace chebtrace
