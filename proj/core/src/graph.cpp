// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "chebtrace/error.hpp"

namespace chebtrace {

RegularGraph RegularGraph::build(std::size_t n, std::span<const Edge> edges, int expected_q,
                                 std::string name) {
  if (expected_q < 1) throw Error(ErrorCode::InvalidParameter, "expected_q must be >= 1");
  if (n == 0 || edges.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices or no edges");

  std::vector<int> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::InvalidParameter,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
    ++deg[u];
    ++deg[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] != expected_q + 1) {
      throw Error(ErrorCode::NonRegular, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(deg[v]) + ", expected " +
                                             std::to_string(expected_q + 1));
    }
  }

  RegularGraph g;
  g.n_ = n;
  g.q_ = expected_q;
  g.name_ = std::move(name);
  g.edges_.assign(edges.begin(), edges.end());

  const auto d = static_cast<std::size_t>(expected_q + 1);
  g.out_.assign(n * d, 0);
  std::vector<std::size_t> fill(n, 0);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const auto [u, v] = g.edges_[i];
    g.out_[u * d + fill[u]++] = 2 * i;
    g.out_[v * d + fill[v]++] = 2 * i + 1;
  }
  return g;
}

RegularGraph RegularGraph::build(std::span<const Edge> edges, int expected_q, std::string name) {
  std::size_t n = 0;
  for (const auto& [u, v] : edges) n = std::max({n, u + 1, v + 1});
  return build(n, edges, expected_q, std::move(name));
}

bool RegularGraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
}

RegularGraph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return RegularGraph::build(n, e, 1, "cycle:" + std::to_string(n));
}

RegularGraph complete(std::size_t n) {
  // n = 2 would give q = 0.
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "complete needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return RegularGraph::build(n, e, static_cast<int>(n) - 2, "complete:" + std::to_string(n));
}

RegularGraph complete_bipartite(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidParameter, "complete_bipartite needs k >= 2");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) e.emplace_back(i, k + j);
  return RegularGraph::build(2 * k, e, static_cast<int>(k) - 1,
                             "complete_bipartite:" + std::to_string(k));
}

RegularGraph petersen() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer pentagon
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return RegularGraph::build(10, e, 2, "petersen");
}

RegularGraph random_regular(std::size_t n, int d, std::uint64_t seed) {
  if (n == 0 || d < 2 || (n * static_cast<std::size_t>(d)) % 2 != 0) {
    throw Error(ErrorCode::InvalidParameter, "random_regular needs n >= 1, d >= 2 and n*d even");
  }
  std::vector<Vertex> stubs;
  stubs.reserve(n * static_cast<std::size_t>(d));
  for (std::size_t v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs.push_back(v);

  std::mt19937_64 rng(seed);
  std::shuffle(stubs.begin(), stubs.end(), rng);

  std::vector<Edge> e;
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    e.emplace_back(std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1]));
  }
  return RegularGraph::build(n, e, d - 1,
                             "random_regular:" + std::to_string(n) + "," + std::to_string(d));
}

RegularGraph torus(std::size_t n, int dims) {
  if (n < 3 || dims < 1) throw Error(ErrorCode::InvalidParameter, "torus needs n >= 3 and D >= 1");
  RegularGraph g = cycle(n);
  for (int k = 1; k < dims; ++k) g = cartesian_product(g, cycle(n));
  std::vector<Edge> e = g.edges();
  return RegularGraph::build(g.vertex_count(), e, g.q(),
                             "torus:" + std::to_string(n) + "," + std::to_string(dims));
}

namespace {

std::vector<long> parse_args(std::string_view s, std::string_view family) {
  std::vector<long> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto tok = s.substr(0, comma);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError, "bad argument '" + std::string(tok) + "' for " + std::string(family));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t as_size(long v) {
  if (v < 0) throw Error(ErrorCode::InvalidParameter, "negative size");
  return static_cast<std::size_t>(v);
}

}  // namespace

RegularGraph generate(std::string_view family, std::uint64_t seed) {
  const auto colon = family.find(':');
  const std::string_view head = family.substr(0, colon);
  const std::vector<long> a =
      colon == std::string_view::npos ? std::vector<long>{} : parse_args(family.substr(colon + 1), head);

  auto need = [&](std::size_t k) {
    if (a.size() != k) {
      throw Error(ErrorCode::ParseError,
                  std::string(head) + " takes " + std::to_string(k) + " argument(s)");
    }
  };

  if (head == "cycle") { need(1); return cycle(as_size(a[0])); }
  if (head == "complete") { need(1); return complete(as_size(a[0])); }
  if (head == "complete_bipartite") { need(1); return complete_bipartite(as_size(a[0])); }
  if (head == "petersen") { need(0); return petersen(); }
  if (head == "random_regular") { need(2); return random_regular(as_size(a[0]), static_cast<int>(a[1]), seed); }
  if (head == "torus") { need(2); return torus(as_size(a[0]), static_cast<int>(a[1])); }
  throw Error(ErrorCode::ParseError,
              "unknown family '" + std::string(head) +
                  "' (known: cycle, complete, complete_bipartite, petersen, random_regular, torus)");
}

RegularGraph cartesian_product(const RegularGraph& g1, const RegularGraph& g2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  std::vector<Edge> e;
  e.reserve(g1.edge_count() * n2 + g2.edge_count() * n1);
  for (const auto& [u, v] : g1.edges())
    for (std::size_t j = 0; j < n2; ++j) e.emplace_back(u * n2 + j, v * n2 + j);
  for (std::size_t i = 0; i < n1; ++i)
    for (const auto& [u, v] : g2.edges()) e.emplace_back(i * n2 + u, i * n2 + v);
  // Degree (q1 + 1) + (q2 + 1) = q + 1.
  return RegularGraph::build(n1 * n2, e, g1.q() + g2.q() + 1, g1.name() + "x" + g2.name());
}

IntMatrix adjacency_int(const RegularGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    const auto i = static_cast<Eigen::Index>(u);
    const auto j = static_cast<Eigen::Index>(v);
    if (i == j) {
      a(i, i) += 2;
    } else {
      a(i, j) += 1;
      a(j, i) += 1;
    }
  }
  return a;
}

DenseSymmetricMatrix adjacency_matrix(const RegularGraph& g) {
  return DenseSymmetricMatrix(adjacency_int(g).cast<double>());
}

RegularGraph read_edge_list(std::istream& in, std::string name) {
  std::string line;
  bool have_header = false;
  std::size_t n = 0;
  long q = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long a = 0, b = 0;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected two nonnegative integers");
    }
    if (!have_header) {
      n = static_cast<std::size_t>(a);
      q = b;
      have_header = true;
    } else {
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'n q' header line");
  return RegularGraph::build(n, edges, static_cast<int>(q), std::move(name));
}

void write_edge_list(std::ostream& out, const RegularGraph& g) {
  out << g.vertex_count() << ' ' << g.q() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

DenseSymmetricMatrix::DenseSymmetricMatrix(RealMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::InvalidParameter, "matrix is not square");
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw Error(ErrorCode::InvalidParameter, "matrix is not symmetric");
}

}  // namespace chebtrace
