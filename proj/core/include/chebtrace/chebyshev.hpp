// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_CHEBYSHEV_HPP
#define CHEBTRACE_CHEBYSHEV_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "chebtrace/error.hpp"
#include "chebtrace/exact.hpp"
#include "chebtrace/matrix.hpp"

namespace chebtrace {

/// A branching number q >= 1 or q = infinity. Doubles as the basis tag of a
/// coefficient sequence: q = 1 is the Y basis, q = infinity the X basis, and
/// anything else the deformed X_{., q} basis.
class Basis {
 public:
  static Basis Y() { return Basis(1); }
  static Basis Xinf() { return Basis(0); }
  static Basis Xq(int q) {
    if (q < 1) throw Error(ErrorCode::InvalidParameter, "branching number must be >= 1");
    return Basis(q);
  }

  bool is_infinite() const noexcept { return q_ == 0; }
  bool is_y() const noexcept { return q_ == 1; }
  /// Finite branching number; throws for infinity.
  int q() const {
    if (q_ == 0) throw Error(ErrorCode::InvalidParameter, "branching number is infinite");
    return q_;
  }
  /// 1/q, with 1/infinity = 0.
  double inverse_q() const noexcept { return q_ == 0 ? 0.0 : 1.0 / q_; }
  Rational inverse_q_exact() const { return q_ == 0 ? Rational(0) : Rational(1, q_); }
  std::string name() const { return q_ == 0 ? "Xinf" : q_ == 1 ? "Y" : "Xq(" + std::to_string(q_) + ")"; }

  friend bool operator==(Basis a, Basis b) noexcept { return a.q_ == b.q_; }

 private:
  explicit Basis(int q) : q_(q) {}
  int q_;
};

/// X_{r,q}(x) through the three-term recurrence for X_r.
double cheb_eval(Basis basis, int r, double x);
Complex cheb_eval(Basis basis, int r, Complex x);

/// X_{0,q}(x), ..., X_{R,q}(x).
std::vector<double> cheb_eval_all(Basis basis, int R, double x);
std::vector<Complex> cheb_eval_all(Basis basis, int R, Complex x);

/// Monomial coefficients c_0..c_r of X_{r,q}, exact.
std::vector<Rational> cheb_coefficients(Basis basis, int r);

/// Kesten-McKay density of the (q+1)-regular tree at x. Zero for |x| > 2.
/// Throws Error{SingularEndpoint} for q = 1 at |x| = 2.
double km_density(Basis q, double x);

/// Density against d(theta) on [0, pi] after x = 2 cos(theta). Bounded for
/// every q, so quadrature never touches the q = 1 endpoint singularity.
double km_theta_weight(Basis q, double theta);

/// Integral of f against the Kesten-McKay measure. Trapezoid rule over the
/// full theta circle; the node count doubles from 32 until two successive
/// estimates differ by at most tol * max(1, |I|).
template <class F>
auto km_integrate(Basis q, F&& f, double tol = 1e-12, std::size_t max_nodes = std::size_t{1} << 22)
    -> std::decay_t<decltype(f(0.0))> {
  using T = std::decay_t<decltype(f(0.0))>;
  if (!(tol > 0)) throw Error(ErrorCode::InvalidParameter, "tolerance must be positive");
  constexpr double pi = std::numbers::pi;
  auto node = [&](std::size_t j, std::size_t n) -> T {
    const double th = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
    return km_theta_weight(q, th) * f(2.0 * std::cos(th));
  };

  std::size_t n = 16;
  T sum{};
  for (std::size_t j = 0; j < n; ++j) sum += node(j, n);
  T prev = sum * (pi / static_cast<double>(n));
  while (2 * n <= max_nodes) {
    for (std::size_t j = 1; j < 2 * n; j += 2) sum += node(j, 2 * n);
    n *= 2;
    const T cur = sum * (pi / static_cast<double>(n));
    if (n >= 32 && std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw Error(ErrorCode::NoConvergence, "Kesten-McKay quadrature did not settle");
}

/// Tail model |a_r| <= constant * ratio^r.
struct Decay {
  double ratio = 0.0;
  double constant = 0.0;
};

/// Expansion coefficients a_0..a_R of some h in one basis.
///
/// When finite_support is set the stored coefficients are the whole series.
/// Otherwise decay, when present, bounds the unseen tail.
struct CoefficientSeries {
  Basis basis = Basis::Y();
  std::vector<Complex> coeffs;
  std::optional<Decay> decay;
  bool finite_support = false;

  std::size_t size() const noexcept { return coeffs.size(); }
  Complex operator[](std::size_t r) const { return r < coeffs.size() ? coeffs[r] : Complex{}; }

  /// Partial sum of a_r X_{r,q}(x) over the stored coefficients.
  Complex evaluate(Complex x) const;

  /// Bound on |sum_{r > last} a_r X_{r,q}(x)| for x in [-2, 2]; zero for
  /// finite support and infinity without a decay model.
  double tail_bound_on_support() const;
};

/// Fits |a_r| <= C tau^r from the last eight coefficients above
/// noise_floor * max|a|. C is the smallest constant that makes the bound hold
/// on every stored coefficient above the floor.
Decay fit_decay(const std::vector<Complex>& coeffs, double noise_floor = 1e-14);

/// Re-expands s in the target basis.
///
/// Xq -> Xinf uses a_{m,inf} = a_{m,q} - a_{m+2,q}/q and drops the last two
/// indices unless s has finite support. Xinf -> Xq uses
/// a_{r,q} = sum_k q^{-k} a_{r+2k,inf}; without finite support this needs
/// s.decay (Error{MissingDecay}) and throws Error{NoConvergence} when the
/// decay bound on the dropped tail exceeds tol.
CoefficientSeries basis_convert(const CoefficientSeries& s, Basis target, double tol = 1e-13);

}  // namespace chebtrace

#endif  // CHEBTRACE_CHEBYSHEV_HPP
