// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_SPECTRAL_HPP
#define CHEBTRACE_SPECTRAL_HPP

#include <cstddef>
#include <vector>

#include "chebtrace/chebyshev.hpp"
#include "chebtrace/function_spec.hpp"
#include "chebtrace/graph.hpp"
#include "chebtrace/matrix.hpp"

namespace chebtrace {

/// Adjacency eigen-decomposition of a graph, eigenvalues descending.
struct GraphSpectrum {
  std::size_t n = 0;
  int q = 1;
  std::vector<double> eigenvalues;
  RealMatrix eigenvectors;  // empty when not requested

  /// h(q^{-1/2} A) assembled from the decomposition.
  ComplexMatrix apply(const FunctionSpec& h) const;
};

GraphSpectrum graph_spectrum(const RegularGraph& g, bool with_vectors = true);

struct Atom {
  double location;
  double weight;
};

/// Finitely many atoms, sorted by location, weights summing to one.
class DiscreteMeasure {
 public:
  /// Merges locations closer than merge_tol and sorts. Throws
  /// Error{InvalidParameter} for negative weights or a total off by > 1e-12.
  static DiscreteMeasure from_points(const std::vector<double>& x, const std::vector<double>& w,
                                     double merge_tol = 1e-9);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  template <class F>
  auto integrate(F&& f) const {
    using T = std::decay_t<decltype(f(0.0))>;
    T s{};
    for (const auto& a : atoms_) s += a.weight * f(a.location);
    return s;
  }

 private:
  std::vector<Atom> atoms_;
};

/// mu_G: atoms at q^{-1/2} lambda_k with weight 1/|V|, multiplicities merged.
DiscreteMeasure spectral_measure(const RegularGraph& g);
DiscreteMeasure spectral_measure(const GraphSpectrum& s);

/// mu_G^v: atoms at q^{-1/2} lambda_k with weight (phi_k(v))^2.
DiscreteMeasure vertex_spectral_measure(const GraphSpectrum& s, Vertex v);

/// int h dmu_G^v = <1_v, h(q^{-1/2} A) 1_v>.
Complex vertex_integral(const GraphSpectrum& s, Vertex v, const FunctionSpec& h);
Complex vertex_integral(const RegularGraph& g, Vertex v, const FunctionSpec& h);

/// int 1/(x - z) dmu. Throws Error{PoleOnSupport} when z hits an atom.
Complex stieltjes_plain(const DiscreteMeasure& mu, Complex z);

/// int (1 - t^2/q') / (1 - x t + t^2) dmu, with 1/q' = 0 for q' = infinity.
Complex stieltjes_modified(const DiscreteMeasure& mu, Complex t, Basis qprime);

/// Kesten-McKay closed forms. Plain: t / (t^2/q - 1) with z = t + 1/t,
/// |t| < 1 (Error{PoleOnSupport} for z in [-2, 2]). Modified with matching
/// q: identically 1 for |t| < 1. A mismatched q' falls back to quadrature.
Complex km_stieltjes_plain(Basis q, Complex z);
Complex km_stieltjes_modified(Basis q, Complex t, Basis qprime);

/// The root t of t + 1/t = z with |t| < 1.
Complex joukowsky_inverse(Complex z);

/// Taylor coefficients at t = 0 of the modified transforms of mu_G compared
/// with their non-backtracking predictions. Coefficients come from exact
/// power-series division of sum_k w_k (1 - t^2/q') / (1 - x_k t + t^2).
struct StieltjesSeriesReport {
  std::vector<double> coefficients_q;  // of S~_{mu_G, q}
  std::vector<double> predicted_q;     // q^{-r/2} f_r / |V|
  std::vector<double> coefficients_1;  // of S~_{mu_G, 1}
  std::vector<double> predicted_1;     // background + q^{-r/2} c_r / |V|
  double max_deviation = 0.0;
};
StieltjesSeriesReport stieltjes_series_check(const RegularGraph& g, int R);

/// Taylor coefficients of sum_k w_k (1 - t^2/q') / (1 - x_k t + t^2).
std::vector<double> modified_stieltjes_taylor(const DiscreteMeasure& mu, Basis qprime, int R);

enum class TransformRoute { Eigen, BesselSeries };

/// Integral of exp(i p x) against mu_G. The Bessel route adds
/// sum_r q^{-r/2} i^r J_r(2p) c_r / |V| to the Kesten-McKay transform and
/// truncates where the tail bound drops below tol.
Complex fourier_laplace(const RegularGraph& g, Complex p, TransformRoute route, double tol = 1e-12);
Complex km_fourier_laplace(Basis q, Complex p, double tol = 1e-14);

/// Order of the zero of mu_G^ - mu_q^ at p = 0, two ways: the first r with
/// a nonzero correction term, and a log-ratio slope of |mu_G^ - mu_q^|
/// between p and p/2 (rounded).
struct TransformZeroOrder {
  int series_order = 0;
  double slope = 0.0;
  int slope_order = 0;
};
TransformZeroOrder transform_zero_order(const RegularGraph& g, double p = 0.1);

enum class HeatTraceRoute {
  Eigen,      // sum_k exp(-lambda_k(Delta) t)
  Series,     // circuit expansion with background |V| e^{-(q+1)t} int e^{sqrt(q) t x} dmu_q
  Displayed,  // background int e^{-t (sqrt(q)-1)^2 x} dmu_q, without |V| or e^{-(q+1)t}
};

/// Heat trace of the Laplacian Delta = (q+1) I - A.
double heat_trace(const RegularGraph& g, double t, HeatTraceRoute route, double tol = 1e-13);

}  // namespace chebtrace

#endif  // CHEBTRACE_SPECTRAL_HPP
