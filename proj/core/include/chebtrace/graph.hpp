// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_GRAPH_HPP
#define CHEBTRACE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chebtrace/matrix.hpp"

namespace chebtrace {

using Vertex = std::size_t;
using DirectedEdge = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite (q+1)-regular multigraph with its directed-edge structure.
///
/// Undirected edge i yields directed edges 2i (first -> second) and 2i+1
/// (second -> first), so the inverse of e is e ^ 1. A loop at v contributes
/// two directed edges v -> v and adds 2 to the degree of v. Instances are
/// immutable once built.
class RegularGraph {
 public:
  /// Validates degrees and builds the directed-edge structure.
  /// Throws Error{EmptyGraph} for n == 0 or no edges, Error{NonRegular} when
  /// some vertex degree differs from expected_q + 1, and
  /// Error{InvalidParameter} for out-of-range vertices or expected_q < 1.
  static RegularGraph build(std::size_t n, std::span<const Edge> edges, int expected_q,
                            std::string name = "graph");

  /// Same, with n taken as one past the largest vertex index.
  static RegularGraph build(std::span<const Edge> edges, int expected_q,
                            std::string name = "graph");

  std::size_t vertex_count() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  int degree() const noexcept { return q_ + 1; }
  const std::string& name() const noexcept { return name_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t directed_edge_count() const noexcept { return 2 * edges_.size(); }

  Vertex origin(DirectedEdge e) const { return (e & 1U) == 0 ? edges_[e / 2].first : edges_[e / 2].second; }
  Vertex terminus(DirectedEdge e) const { return (e & 1U) == 0 ? edges_[e / 2].second : edges_[e / 2].first; }
  static DirectedEdge inverse(DirectedEdge e) noexcept { return e ^ 1U; }

  /// Directed edges leaving v, in increasing index order; always degree() of them.
  std::span<const DirectedEdge> out_edges(Vertex v) const {
    return {out_.data() + static_cast<std::size_t>(degree()) * v, static_cast<std::size_t>(degree())};
  }

  bool has_loops() const noexcept;

 private:
  RegularGraph() = default;

  std::size_t n_ = 0;
  int q_ = 0;
  std::string name_;
  std::vector<Edge> edges_;
  std::vector<DirectedEdge> out_;
};

/// Standard families. Each throws Error{InvalidParameter} when the
/// parameters do not give a regular graph with q >= 1.
RegularGraph cycle(std::size_t n);               // n >= 3, q = 1
RegularGraph complete(std::size_t n);            // n >= 3, q = n - 2
RegularGraph complete_bipartite(std::size_t k);  // K_{k,k}, k >= 2, q = k - 1
RegularGraph petersen();
/// Configuration model; keeps loops and multi-edges. n*d must be even, d >= 2.
RegularGraph random_regular(std::size_t n, int d, std::uint64_t seed);
/// n^D vertices, degree 2D, row-major coordinates; n >= 3, D >= 1.
RegularGraph torus(std::size_t n, int dims);

/// Parses "cycle:5", "complete:4", "complete_bipartite:3", "petersen",
/// "random_regular:20,3", "torus:4,2". The seed feeds random_regular only.
RegularGraph generate(std::string_view family, std::uint64_t seed = 0);

/// Vertex (i, j) of the product maps to i * n2 + j, so the adjacency matrix
/// is A1 (x) I + I (x) A2 exactly.
RegularGraph cartesian_product(const RegularGraph& g1, const RegularGraph& g2);

/// Entry (a, b) counts edges joining a and b; a loop adds 2 on the diagonal.
DenseSymmetricMatrix adjacency_matrix(const RegularGraph& g);
IntMatrix adjacency_int(const RegularGraph& g);

/// Edge-list text format: a header line "n q", then one "u v" per edge.
/// Blank lines and lines starting with '#' are ignored on input.
RegularGraph read_edge_list(std::istream& in, std::string name = "graph");
void write_edge_list(std::ostream& out, const RegularGraph& g);

}  // namespace chebtrace

#endif  // CHEBTRACE_GRAPH_HPP
