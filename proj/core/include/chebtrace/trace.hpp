// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_TRACE_HPP
#define CHEBTRACE_TRACE_HPP

#include "chebtrace/chebyshev.hpp"
#include "chebtrace/function_spec.hpp"
#include "chebtrace/graph.hpp"
#include "chebtrace/matrix.hpp"

namespace chebtrace {

/// Smallest R with C sum_{r > R} (tau sqrt(q))^r (1 + 1/q) < tol, using the
/// series' decay model; the last stored index for finite support. Throws
/// Error{DivergentSeries} when tau sqrt(q) >= 1 and Error{MissingDecay}
/// without a model.
int truncation_radius(const CoefficientSeries& s, int q, double tol);

/// Coefficients of h in `basis` with enough terms for the truncation radius
/// at tolerance tol against branching number q. The returned series holds
/// exactly the indices 0..R that the sum should use.
CoefficientSeries truncated_coefficients(const FunctionSpec& h, Basis basis, int q, double tol);

/// h(q^{-1/2} A) = (int h dmu_q) I + sum_{r >= 1} q^{-r/2} a_{r,q}(h) A_r.
/// Complex because h may be (oscillatory exponentials).
ComplexMatrix functional_calculus(const RegularGraph& g, const FunctionSpec& h, double tol = 1e-10);

/// Reference h(q^{-1/2} A) from the eigen-decomposition.
ComplexMatrix functional_calculus_oracle(const RegularGraph& g, const FunctionSpec& h);

struct TraceCheck {
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
  int terms = 0;  // truncation radius used on the right-hand side
};

/// int h dmu_G^v (eigen-decomposition) against
/// int h dmu_q + sum_r q^{-r/2} a_{r,q}(h) f_r(v; G).
TraceCheck pretrace(const RegularGraph& g, Vertex v, const FunctionSpec& h, double tol = 1e-10);

/// sum_k h(q^{-1/2} lambda_k) against |V| int h dmu_q + sum_r q^{-r/2} a_{r,1}(h) c_r(G).
TraceCheck trace_formula(const RegularGraph& g, const FunctionSpec& h, double tol = 1e-10);

struct PrimeTraceCheck {
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
  double tail_bound = 0.0;  // bound on classes longer than L
  int L = 0;
  std::size_t classes = 0;
};

/// Prime version: |V| int h dmu_q + sum_{gamma, l <= L} sum_{n >= 1} l a_{nl,1}(h) q^{-nl/2}.
/// The tail from longer classes is bounded with c_r <= |V| (q+1) q^{r-1}.
/// L < 0 picks the smallest horizon whose tail bound is at most tol / 2.
PrimeTraceCheck trace_formula_prime(const RegularGraph& g, const FunctionSpec& h, double tol = 1e-10, int L = -1);

}  // namespace chebtrace

#endif  // CHEBTRACE_TRACE_HPP
