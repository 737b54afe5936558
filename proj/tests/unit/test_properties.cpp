// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

// Invariants checked over seeded random regular graphs.

#include <doctest.h>

#include <cstdint>

#include "chebtrace/function_spec.hpp"
#include "chebtrace/kernels.hpp"
#include "chebtrace/nbw.hpp"
#include "chebtrace/trace.hpp"
#include "chebtrace/zeta.hpp"
#include "oracles.hpp"

using namespace chebtrace;

namespace {

struct Case {
  std::size_t n;
  int d;
  std::uint64_t seed;
};

const Case kCases[] = {{8, 3, 1}, {10, 3, 7}, {12, 4, 11}, {14, 3, 23}, {9, 4, 42}, {16, 5, 5}};

}  // namespace

TEST_CASE("property: adjacency structure") {
  for (const auto& c : kCases) {
    const auto g = random_regular(c.n, c.d, c.seed);
    CHECK(g.vertex_count() == c.n);
    const IntMatrix a = adjacency_int(g);
    CHECK((a.rowwise().sum().array() == c.d).all());
    CHECK(a == a.transpose());
    // Configuration-model loops count twice on the diagonal.
    CHECK(a.diagonal().unaryExpr([](std::int64_t x) { return x % 2; }).isZero());
  }
}

TEST_CASE("property: NBW matrices match enumeration and the recursion") {
  for (const auto& c : kCases) {
    const auto g = random_regular(c.n, c.d, c.seed);
    const auto mats = nbw_matrices_int(g, 6);
    for (int r = 1; r <= 6; ++r) {
      const auto row = enumerate_nbw_from(g, 0, r);
      for (std::size_t b = 0; b < g.vertex_count(); ++b) {
        CHECK(static_cast<std::int64_t>(row[b]) == mats[r](0, static_cast<Eigen::Index>(b)));
      }
      CHECK(mats[r] == mats[r].transpose());
    }
    const auto t = circuit_counts(g, 8, CircuitRoute::Both);
    CHECK(t.c == circuits_from_closed(t.f, g.q()));
  }
}

TEST_CASE("property: trace formulas close") {
  const auto h = parse_function("exp:z=0.5");
  for (const auto& c : kCases) {
    const auto g = random_regular(c.n, c.d, c.seed);
    CHECK(trace_formula(g, h).residual < 1e-9);
    CHECK(pretrace(g, 0, h).residual < 1e-9);
  }
}

TEST_CASE("property: heat operator is a symmetric Markov kernel") {
  for (const auto& c : kCases) {
    const auto g = random_regular(c.n, c.d, c.seed);
    const RealMatrix h = heat_operator(g, 0.8);
    CHECK(((h.rowwise().sum().array() - 1.0).abs() < 1e-12).all());
    CHECK((h.array() >= -1e-15).all());
    CHECK(max_abs_diff(h, RealMatrix(h.transpose())) < 1e-14);
    CHECK(max_abs_diff(h, oracle::heat_oracle(g, 0.8)) < 1e-8);
  }
}

TEST_CASE("property: Euler product equals determinant series") {
  for (const auto& c : {kCases[0], kCases[1], kCases[4]}) {
    const auto g = random_regular(c.n, c.d, c.seed);
    CHECK(euler_product_series(g, 7).coefficients() == zeta_reciprocal_series(g, 7).coefficients());
  }
}
