// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_EXACT_HPP
#define CHEBTRACE_EXACT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chebtrace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// n! as an exact integer.
BigInt factorial(long n);

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& x);

/// Truncated formal power series with exact rational coefficients.
/// All operations keep terms of degree < size().
class RationalSeries {
 public:
  RationalSeries() = default;
  explicit RationalSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  std::size_t size() const noexcept { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  RationalSeries derivative() const;
  RationalSeries operator*(const RationalSeries& other) const;

  /// Power series quotient; requires (*this)[0] != 0 for the divisor.
  RationalSeries divided_by(const RationalSeries& divisor) const;

  /// log of a series with constant term one.
  RationalSeries log() const;

 private:
  std::vector<Rational> c_;
};

}  // namespace chebtrace

#endif  // CHEBTRACE_EXACT_HPP
