// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_NBW_HPP
#define CHEBTRACE_NBW_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chebtrace/exact.hpp"
#include "chebtrace/graph.hpp"
#include "chebtrace/matrix.hpp"

namespace chebtrace {

/// Non-backtracking matrices A_0..A_R from
///   A_0 = I, A_1 = A, A_2 = A^2 - (q+1) I, A_{r+1} = A A_r - q A_{r-1}.
/// Integer arithmetic; throws Error{Overflow} if an entry leaves int64.
std::vector<IntMatrix> nbw_matrices_int(const RegularGraph& g, int R);

/// A_r alone, as an exact integer matrix and as a symmetric real matrix.
IntMatrix nbw_matrix_int(const RegularGraph& g, int r);
DenseSymmetricMatrix nbw_matrix(const RegularGraph& g, int r);

/// Same recurrence in floating point; entries are exact while below 2^53.
/// Used where overflow is irrelevant (functional calculus, kernels).
std::vector<RealMatrix> nbw_matrices_real(const RegularGraph& g, int R);

inline constexpr std::uint64_t kDefaultWalkBudget = 200'000'000;

/// Counts non-backtracking walks of length r from a, grouped by endpoint,
/// by depth-first search over directed edges. Throws Error{BudgetExceeded}
/// once more than `budget` search nodes have been visited.
std::vector<std::uint64_t> enumerate_nbw_from(const RegularGraph& g, Vertex a, int r,
                                              std::uint64_t budget = kDefaultWalkBudget);
std::uint64_t enumerate_nbw(const RegularGraph& g, Vertex a, Vertex b, int r,
                            std::uint64_t budget = kDefaultWalkBudget);

struct NbwCountTable {
  std::string graph;
  int R = 0;
  std::vector<std::int64_t> f;                    // f_r(G), r = 0..R
  std::vector<std::vector<std::int64_t>> f_vertex;  // f_vertex[r][v] = f_r(v; G)
  std::vector<std::int64_t> c;                    // c_r(G); empty until filled
};

/// f_r(G) = tr A_r and f_r(v; G) = (A_r)_{vv} for r = 0..R.
NbwCountTable closed_nbw_counts(const RegularGraph& g, int R);

enum class CircuitRoute {
  Both,           // combinatorial and spectral, cross-checked
  Combinatorial,  // recursive inversion of the f_r / c_r relation
  Spectral,       // rounding of the spectral moment formula
};

/// Fills c_1..c_R (c_0 = 0). With CircuitRoute::Both, throws
/// Error{RouteMismatch} unless both routes give the same integers.
NbwCountTable circuit_counts(const RegularGraph& g, int R, CircuitRoute route = CircuitRoute::Both);

/// c_r from f_r by inverting f_r = c_r + (q-1) sum_{1 <= i < r/2} q^{i-1} c_{r-2i}.
std::vector<std::int64_t> circuits_from_closed(const std::vector<std::int64_t>& f, int q);

/// Spectral route value before rounding:
///   |V| q^{r/2} (mean_k Y_r(q^{-1/2} lambda_k) - int Y_r dmu_q).
double spectral_circuit_value(const std::vector<double>& eigenvalues, int q, int r);

/// int Y_r dmu_q in closed form.
double km_y_moment(int q, int r);

/// Prime circuit class, oriented, represented by its least rotation.
struct PrimeCircuitClass {
  std::vector<DirectedEdge> edges;
  std::size_t length() const noexcept { return edges.size(); }
};

/// All prime classes of length <= L, ordered by length then representative.
std::vector<PrimeCircuitClass> prime_circuit_classes(const RegularGraph& g, int L,
                                                     std::uint64_t budget = kDefaultWalkBudget);

/// Smallest r >= 1 with f_r(G) > 0.
int girth(const RegularGraph& g);

/// Number of (ordinary) walks of length n from a to b, assembled from
/// non-backtracking counts:
///   W_n = sum_{k <= n/2} (sum_{m <= k} (C(n,m) - C(n,m-1)) q^m) f_{n-2k}(a, b).
BigInt walk_count(const RegularGraph& g, Vertex a, Vertex b, int n);

/// (A^n)_{ab} by repeated vector-matrix products in big integers.
BigInt walk_count_matrix_power(const RegularGraph& g, Vertex a, Vertex b, int n);

}  // namespace chebtrace

#endif  // CHEBTRACE_NBW_HPP
