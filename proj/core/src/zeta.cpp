// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "chebtrace/eigen_solver.hpp"
#include "chebtrace/error.hpp"
#include "chebtrace/nbw.hpp"

namespace chebtrace {

namespace {

constexpr double kEigenTol = 1e-9;

RationalSeries polynomial_series(const std::vector<BigInt>& p, int R) {
  std::vector<Rational> c(static_cast<std::size_t>(R) + 1, Rational(0));
  for (std::size_t k = 0; k < p.size() && k <= static_cast<std::size_t>(R); ++k) c[k] = Rational(p[k]);
  return RationalSeries(std::move(c));
}

// (1 - t^2)^e through t^R.
RationalSeries one_minus_t2_power(long e, int R) {
  std::vector<Rational> c(static_cast<std::size_t>(R) + 1, Rational(0));
  for (long j = 0; 2 * j <= R && j <= e; ++j) {
    c[2 * j] = Rational(binomial(e, j) * (j % 2 == 0 ? 1 : -1));
  }
  return RationalSeries(std::move(c));
}

long background_exponent(const RegularGraph& g) {
  const long twice = static_cast<long>(g.q() - 1) * static_cast<long>(g.vertex_count());
  return twice / 2;
}

}  // namespace

Complex zeta_reciprocal(const RegularGraph& g, Complex t) {
  const double q = g.q();
  Complex det = 1.0;
  for (double l : eigenvalues_symmetric(adjacency_matrix(g))) det *= 1.0 - t * l + q * t * t;
  const long twice = static_cast<long>(g.q() - 1) * static_cast<long>(g.vertex_count());
  const Complex base = 1.0 - t * t;
  const Complex bg = twice % 2 == 0 ? std::pow(base, static_cast<int>(twice / 2)) : std::pow(base, twice / 2.0);
  return bg * det;
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  if (m.cols() != m.rows()) throw Error(ErrorCode::InvalidParameter, "matrix must be square");
  using Mat = std::vector<std::vector<BigInt>>;
  Mat a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));

  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Mat mk(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    mk = std::move(next);
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    if (tr % static_cast<long>(k) != 0) throw Error(ErrorCode::Overflow, "non-integral Faddeev-LeVerrier step");
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::vector<BigInt> determinant_polynomial(const RegularGraph& g) {
  // det((1 + q t^2) I - t A) = sum_k p_k (1 + q t^2)^k t^{n-k}.
  const auto p = characteristic_polynomial(adjacency_int(g));
  const std::size_t n = g.vertex_count();
  std::vector<BigInt> out(2 * n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    if (p[k] == 0) continue;
    BigInt qj = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      out[n - k + 2 * j] += p[k] * binomial(static_cast<long>(k), static_cast<long>(j)) * qj;
      qj *= g.q();
    }
  }
  return out;
}

RationalSeries zeta_reciprocal_series(const RegularGraph& g, int R) {
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "R must be >= 0");
  const long twice = static_cast<long>(g.q() - 1) * static_cast<long>(g.vertex_count());
  if (twice % 2 != 0) throw Error(ErrorCode::InvalidParameter, "half-integer background exponent");
  return polynomial_series(determinant_polynomial(g), R) * one_minus_t2_power(background_exponent(g), R);
}

RationalSeries euler_product_series(const RegularGraph& g, int R) {
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "R must be >= 0");
  std::vector<Rational> one(static_cast<std::size_t>(R) + 1, Rational(0));
  one[0] = 1;
  RationalSeries acc(one);
  if (R == 0) return acc;
  for (const auto& c : prime_circuit_classes(g, R)) {
    std::vector<Rational> f(static_cast<std::size_t>(R) + 1, Rational(0));
    f[0] = 1;
    f[c.length()] = -1;
    acc = acc * RationalSeries(std::move(f));
  }
  return acc;
}

std::vector<Rational> zeta_log_series(const RegularGraph& g, int R) {
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "R must be >= 0");
  const auto table = circuit_counts(g, std::max(R, 1), CircuitRoute::Combinatorial);
  std::vector<Rational> out(static_cast<std::size_t>(R) + 1, Rational(0));
  for (int r = 1; r <= R; ++r) out[r] = Rational(table.c[r], r);
  return out;
}

std::vector<Rational> determinant_log_series(const RegularGraph& g, int R) {
  auto l = zeta_reciprocal_series(g, R).log().coefficients();
  for (auto& x : l) x = -x;
  return l;
}

bool is_bipartite(const RegularGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> todo;
    todo.push(s);
    while (!todo.empty()) {
      const Vertex v = todo.front();
      todo.pop();
      for (DirectedEdge e : g.out_edges(v)) {
        const Vertex w = g.terminus(e);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          todo.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

RamanujanReport ramanujan_check(const RegularGraph& g) {
  RamanujanReport rep;
  rep.bipartite = is_bipartite(g);
  rep.bound = 2.0 * std::sqrt(static_cast<double>(g.q()));
  auto ev = eigenvalues_symmetric(adjacency_matrix(g));
  const double d = g.degree();
  auto drop = [&](double target) {
    auto it = std::find_if(ev.begin(), ev.end(), [&](double x) { return std::abs(x - target) < kEigenTol; });
    if (it != ev.end()) ev.erase(it);
  };
  drop(d);
  if (rep.bipartite) drop(-d);
  rep.ramanujan = true;
  for (double x : ev) {
    if (!rep.witness || std::abs(x) > std::abs(*rep.witness)) rep.witness = x;
    if (std::abs(x) > rep.bound + kEigenTol) rep.ramanujan = false;
  }
  return rep;
}

}  // namespace chebtrace
