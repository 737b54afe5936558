// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/nbw.hpp"

#include <algorithm>
#include <cmath>

#include "chebtrace/chebyshev.hpp"
#include "chebtrace/eigen_solver.hpp"
#include "chebtrace/error.hpp"

namespace chebtrace {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "count exceeds int64");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "count exceeds int64");
  return r;
}

// a * b - s * c with every step checked.
IntMatrix step(const IntMatrix& a, const IntMatrix& b, std::int64_t s, const IntMatrix& c) {
  const Eigen::Index n = a.rows();
  IntMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      std::int64_t acc = checked_mul(-s, c(i, j));
      for (Eigen::Index k = 0; k < n; ++k) {
        if (a(i, k) != 0 && b(k, j) != 0) acc = checked_add(acc, checked_mul(a(i, k), b(k, j)));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

std::vector<IntMatrix> nbw_matrices_int(const RegularGraph& g, int R) {
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "walk length must be >= 0");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const std::int64_t q = g.q();
  const IntMatrix a = adjacency_int(g);
  const IntMatrix id = IntMatrix::Identity(n, n);

  std::vector<IntMatrix> out;
  out.reserve(static_cast<std::size_t>(R) + 1);
  out.push_back(id);
  if (R >= 1) out.push_back(a);
  if (R >= 2) out.push_back(step(a, a, q + 1, id));
  for (int r = 2; r < R; ++r) out.push_back(step(a, out[r], q, out[r - 1]));
  return out;
}

IntMatrix nbw_matrix_int(const RegularGraph& g, int r) { return nbw_matrices_int(g, r).back(); }

DenseSymmetricMatrix nbw_matrix(const RegularGraph& g, int r) {
  return DenseSymmetricMatrix(nbw_matrix_int(g, r).cast<double>());
}

std::vector<RealMatrix> nbw_matrices_real(const RegularGraph& g, int R) {
  if (R < 0) throw Error(ErrorCode::InvalidParameter, "walk length must be >= 0");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const double q = g.q();
  const RealMatrix a = adjacency_int(g).cast<double>();
  std::vector<RealMatrix> out;
  out.reserve(static_cast<std::size_t>(R) + 1);
  out.push_back(RealMatrix::Identity(n, n));
  if (R >= 1) out.push_back(a);
  if (R >= 2) out.push_back(a * a - (q + 1.0) * RealMatrix::Identity(n, n));
  for (int r = 2; r < R; ++r) out.push_back(a * out[r] - q * out[r - 1]);
  return out;
}

std::vector<std::uint64_t> enumerate_nbw_from(const RegularGraph& g, Vertex a, int r, std::uint64_t budget) {
  if (a >= g.vertex_count()) throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  if (r < 0) throw Error(ErrorCode::InvalidParameter, "walk length must be >= 0");
  std::vector<std::uint64_t> counts(g.vertex_count(), 0);
  if (r == 0) {
    counts[a] = 1;
    return counts;
  }

  std::uint64_t visited = 0;
  // Explicit stack of (directed edge, depth).
  std::vector<std::pair<DirectedEdge, int>> stack;
  for (DirectedEdge e : g.out_edges(a)) stack.emplace_back(e, 1);
  while (!stack.empty()) {
    const auto [e, depth] = stack.back();
    stack.pop_back();
    if (++visited > budget) throw Error(ErrorCode::BudgetExceeded, "walk enumeration budget exhausted");
    const Vertex v = g.terminus(e);
    if (depth == r) {
      ++counts[v];
      continue;
    }
    const DirectedEdge back = RegularGraph::inverse(e);
    for (DirectedEdge next : g.out_edges(v))
      if (next != back) stack.emplace_back(next, depth + 1);
  }
  return counts;
}

std::uint64_t enumerate_nbw(const RegularGraph& g, Vertex a, Vertex b, int r, std::uint64_t budget) {
  if (b >= g.vertex_count()) throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  return enumerate_nbw_from(g, a, r, budget)[b];
}

NbwCountTable closed_nbw_counts(const RegularGraph& g, int R) {
  NbwCountTable t;
  t.graph = g.name();
  t.R = R;
  const auto mats = nbw_matrices_int(g, R);
  for (const auto& m : mats) {
    std::vector<std::int64_t> diag(g.vertex_count());
    std::int64_t tr = 0;
    for (std::size_t v = 0; v < diag.size(); ++v) {
      diag[v] = m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v));
      tr = checked_add(tr, diag[v]);
    }
    t.f.push_back(tr);
    t.f_vertex.push_back(std::move(diag));
  }
  return t;
}

std::vector<std::int64_t> circuits_from_closed(const std::vector<std::int64_t>& f, int q) {
  std::vector<std::int64_t> c(f.size(), 0);
  for (std::size_t r = 1; r < f.size(); ++r) {
    std::int64_t acc = 0;
    std::int64_t qp = 1;  // q^{i-1}
    for (std::size_t i = 1; 2 * i < r; ++i) {
      acc = checked_add(acc, checked_mul(qp, c[r - 2 * i]));
      qp = checked_mul(qp, q);
    }
    c[r] = checked_add(f[r], -checked_mul(q - 1, acc));
  }
  return c;
}

double km_y_moment(int q, int r) {
  if (r == 0) return 1.0;
  if (r % 2 == 1) return 0.0;
  return std::pow(static_cast<double>(q), -r / 2.0) - std::pow(static_cast<double>(q), -(r - 2) / 2.0);
}

double spectral_circuit_value(const std::vector<double>& eigenvalues, int q, int r) {
  const double s = 1.0 / std::sqrt(static_cast<double>(q));
  double mean = 0.0;
  for (double l : eigenvalues) mean += cheb_eval(Basis::Y(), r, s * l);
  const double n = static_cast<double>(eigenvalues.size());
  mean /= n;
  return n * std::pow(static_cast<double>(q), r / 2.0) * (mean - km_y_moment(q, r));
}

NbwCountTable circuit_counts(const RegularGraph& g, int R, CircuitRoute route) {
  if (R < 1) throw Error(ErrorCode::InvalidParameter, "circuit counts need R >= 1");
  NbwCountTable t;
  std::vector<std::int64_t> combinatorial;
  if (route != CircuitRoute::Spectral) {
    t = closed_nbw_counts(g, R);
    combinatorial = circuits_from_closed(t.f, g.q());
  } else {
    t.graph = g.name();
    t.R = R;
  }
  if (route == CircuitRoute::Combinatorial) {
    t.c = std::move(combinatorial);
    return t;
  }

  const auto eig = eigenvalues_symmetric(adjacency_matrix(g));
  std::vector<std::int64_t> spectral(static_cast<std::size_t>(R) + 1, 0);
  const double n = static_cast<double>(g.vertex_count());
  for (int r = 1; r <= R; ++r) {
    const double v = spectral_circuit_value(eig, g.q(), r);
    const double rounded = std::round(v);
    // Rounding error of the moment sum grows with |V| q^r.
    const double tol = 1e-6 + 1e-12 * n * std::pow(static_cast<double>(g.q()), r);
    if (std::abs(v - rounded) > tol) {
      throw Error(ErrorCode::RouteMismatch, "spectral circuit count for r = " + std::to_string(r) +
                                                " is not near an integer: " + std::to_string(v));
    }
    spectral[r] = static_cast<std::int64_t>(rounded);
  }
  if (route == CircuitRoute::Spectral) {
    t.c = std::move(spectral);
    return t;
  }
  for (int r = 1; r <= R; ++r) {
    if (spectral[r] != combinatorial[r]) {
      throw Error(ErrorCode::RouteMismatch, "c_" + std::to_string(r) + ": combinatorial " +
                                                std::to_string(combinatorial[r]) + " vs spectral " +
                                                std::to_string(spectral[r]));
    }
  }
  t.c = std::move(combinatorial);
  return t;
}

namespace {

bool is_least_primitive_rotation(const std::vector<DirectedEdge>& s) {
  const std::size_t n = s.size();
  for (std::size_t k = 1; k < n; ++k) {
    // Compare rotation by k against s.
    for (std::size_t i = 0; i < n; ++i) {
      const DirectedEdge a = s[(i + k) % n];
      if (a < s[i]) return false;
      if (a > s[i]) goto next;
    }
    return false;  // equal rotation: s is a proper power
  next:;
  }
  return true;
}

}  // namespace

std::vector<PrimeCircuitClass> prime_circuit_classes(const RegularGraph& g, int L, std::uint64_t budget) {
  if (L < 1) throw Error(ErrorCode::InvalidParameter, "prime circuit horizon must be >= 1");
  std::vector<PrimeCircuitClass> out;
  std::uint64_t visited = 0;
  std::vector<DirectedEdge> path;
  path.reserve(static_cast<std::size_t>(L));

  for (DirectedEdge e0 = 0; e0 < g.directed_edge_count(); ++e0) {
    const Vertex start = g.origin(e0);
    // Depth-first over continuations that never use an index below e0.
    auto dfs = [&](auto&& self, DirectedEdge last) -> void {
      if (++visited > budget) throw Error(ErrorCode::BudgetExceeded, "prime circuit enumeration budget exhausted");
      const Vertex v = g.terminus(last);
      if (v == start && last != RegularGraph::inverse(e0) && is_least_primitive_rotation(path)) {
        out.push_back({path});
      }
      if (static_cast<int>(path.size()) == L) return;
      const DirectedEdge back = RegularGraph::inverse(last);
      for (DirectedEdge next : g.out_edges(v)) {
        if (next == back || next < e0) continue;
        path.push_back(next);
        self(self, next);
        path.pop_back();
      }
    };
    path.assign(1, e0);
    dfs(dfs, e0);
  }
  std::sort(out.begin(), out.end(), [](const PrimeCircuitClass& a, const PrimeCircuitClass& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.edges < b.edges;
  });
  return out;
}

int girth(const RegularGraph& g) {
  // A_r trace in floating point; entries are counts, so tr > 0.5 means f_r > 0.
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const double q = g.q();
  const RealMatrix a = adjacency_int(g).cast<double>();
  RealMatrix prev = RealMatrix::Identity(n, n);
  RealMatrix cur = a;
  if (cur.trace() > 0.5) return 1;
  const int bound = static_cast<int>(2 * g.edge_count()) + 1;
  for (int r = 1; r < bound; ++r) {
    RealMatrix next = a * cur - (r == 1 ? (q + 1.0) : q) * prev;
    prev = std::move(cur);
    cur = std::move(next);
    if (cur.trace() > 0.5) return r + 1;
  }
  throw Error(ErrorCode::InvalidParameter, "no closed non-backtracking walk found");
}

BigInt walk_count(const RegularGraph& g, Vertex a, Vertex b, int n) {
  if (a >= g.vertex_count() || b >= g.vertex_count()) throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "walk length must be >= 0");
  const std::size_t nv = g.vertex_count();
  const long q = g.q();

  // Row a of A_0..A_n in big integers: v_{r+1} = v_r A - q v_{r-1} (q+1 at r = 1).
  std::vector<std::vector<BigInt>> rows;
  rows.emplace_back(nv, BigInt(0));
  rows[0][a] = 1;
  auto times_a = [&](const std::vector<BigInt>& v) {
    std::vector<BigInt> w(nv, BigInt(0));
    for (const auto& [x, y] : g.edges()) {
      if (x == y) {
        w[x] += 2 * v[x];
      } else {
        w[y] += v[x];
        w[x] += v[y];
      }
    }
    return w;
  };
  for (int r = 0; r < n; ++r) {
    std::vector<BigInt> next = times_a(rows[r]);
    if (r >= 1) {
      const long s = r == 1 ? q + 1 : q;
      for (std::size_t i = 0; i < nv; ++i) next[i] -= s * rows[r - 1][i];
    }
    rows.push_back(std::move(next));
  }

  BigInt total = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    BigInt weight = 0;
    BigInt qm = 1;
    for (int m = 0; m <= k; ++m) {
      weight += (binomial(n, m) - binomial(n, m - 1)) * qm;
      qm *= q;
    }
    total += weight * rows[n - 2 * k][b];
  }
  return total;
}

BigInt walk_count_matrix_power(const RegularGraph& g, Vertex a, Vertex b, int n) {
  if (a >= g.vertex_count() || b >= g.vertex_count()) throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  const IntMatrix adj = adjacency_int(g);
  const std::size_t nv = g.vertex_count();
  std::vector<BigInt> v(nv, BigInt(0));
  v[a] = 1;
  for (int r = 0; r < n; ++r) {
    std::vector<BigInt> w(nv, BigInt(0));
    for (std::size_t i = 0; i < nv; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < nv; ++j) {
        const auto e = adj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (e != 0) w[j] += v[i] * e;
      }
    }
    v = std::move(w);
  }
  return v[b];
}

}  // namespace chebtrace
