// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

// Independent reference computations shared by the unit and acceptance
// tests. Nothing here goes through the non-backtracking machinery.

#ifndef CHEBTRACE_TESTS_ORACLES_HPP
#define CHEBTRACE_TESTS_ORACLES_HPP

#include <Eigen/Eigenvalues>
#include <cstdint>
#include <vector>

#include "chebtrace/exact.hpp"
#include "chebtrace/graph.hpp"
#include "chebtrace/matrix.hpp"

namespace chebtrace::oracle {

/// Standard graph set used across the suites.
inline std::vector<RegularGraph> standard_graphs() {
  return {cycle(3), cycle(5), complete(4), petersen(), torus(4, 2)};
}

/// Laplacian (q+1) I - A as a dense matrix.
inline RealMatrix laplacian(const RegularGraph& g) {
  const RealMatrix a = adjacency_matrix(g).matrix();
  return static_cast<double>(g.degree()) * RealMatrix::Identity(a.rows(), a.cols()) - a;
}

/// e^{-t Delta} through Eigen's self-adjoint solver.
inline RealMatrix heat_oracle(const RegularGraph& g, double t) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(laplacian(g));
  const Eigen::VectorXd d = (-t * es.eigenvalues().array()).exp();
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

/// e^{-i t Delta} through Eigen's self-adjoint solver.
inline ComplexMatrix schrodinger_oracle(const RegularGraph& g, double t) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(laplacian(g));
  Eigen::VectorXcd d(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = std::polar(1.0, -t * es.eigenvalues()(k));
  const ComplexMatrix v = es.eigenvectors().cast<Complex>();
  return v * d.asDiagonal() * v.adjoint();
}

/// Adjacency lists of the ball of the given radius in the (q+1)-regular
/// tree, root 0. Vertices are numbered breadth first.
struct TruncatedTree {
  std::vector<std::vector<std::size_t>> adj;
  std::vector<int> depth;
};

inline TruncatedTree truncated_tree(int q, int radius) {
  TruncatedTree t;
  t.adj.emplace_back();
  t.depth.push_back(0);
  std::size_t begin = 0;
  for (int level = 0; level < radius; ++level) {
    const std::size_t end = t.adj.size();
    for (std::size_t v = begin; v < end; ++v) {
      const int children = level == 0 ? q + 1 : q;
      for (int c = 0; c < children; ++c) {
        const std::size_t w = t.adj.size();
        t.adj.emplace_back();
        t.depth.push_back(level + 1);
        t.adj[v].push_back(w);
        t.adj[w].push_back(v);
      }
    }
    begin = end;
  }
  return t;
}

/// Walk counts of the given length from `from` to every vertex, by dynamic
/// programming over explicit adjacency lists.
inline std::vector<BigInt> walks_from(const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
                                      int length) {
  std::vector<BigInt> cur(adj.size(), 0);
  cur[from] = 1;
  for (int s = 0; s < length; ++s) {
    std::vector<BigInt> next(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (cur[v] == 0) continue;
      for (std::size_t w : adj[v]) next[w] += cur[v];
    }
    cur = std::move(next);
  }
  return cur;
}

inline std::vector<std::vector<std::size_t>> adjacency_lists(const RegularGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

}  // namespace chebtrace::oracle

#endif  // CHEBTRACE_TESTS_ORACLES_HPP
