// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chebtrace/bessel.hpp"
#include "chebtrace/eigen_solver.hpp"
#include "chebtrace/error.hpp"
#include "chebtrace/nbw.hpp"

namespace chebtrace {

GraphSpectrum graph_spectrum(const RegularGraph& g, bool with_vectors) {
  GraphSpectrum s;
  s.n = g.vertex_count();
  s.q = g.q();
  auto e = eigen_symmetric(adjacency_matrix(g), 1e-12, with_vectors);
  s.eigenvalues = std::move(e.values);
  s.eigenvectors = std::move(e.vectors);
  return s;
}

ComplexMatrix GraphSpectrum::apply(const FunctionSpec& h) const {
  if (eigenvectors.size() == 0) throw Error(ErrorCode::InvalidParameter, "spectrum was computed without eigenvectors");
  const double s = 1.0 / std::sqrt(static_cast<double>(q));
  Eigen::VectorXcd d(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) d(static_cast<Eigen::Index>(k)) = h(s * eigenvalues[k]);
  const ComplexMatrix qm = eigenvectors.cast<Complex>();
  return qm * d.asDiagonal() * qm.transpose();
}

DiscreteMeasure DiscreteMeasure::from_points(const std::vector<double>& x, const std::vector<double>& w,
                                             double merge_tol) {
  if (x.size() != w.size() || x.empty()) throw Error(ErrorCode::InvalidParameter, "need matching nonempty atoms and weights");
  std::vector<Atom> a;
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (w[i] < 0) throw Error(ErrorCode::InvalidParameter, "negative weight");
    a.push_back({x[i], w[i]});
    total += w[i];
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidParameter, "weights do not sum to 1");
  std::sort(a.begin(), a.end(), [](const Atom& l, const Atom& r) { return l.location < r.location; });

  DiscreteMeasure m;
  for (const auto& atom : a) {
    if (!m.atoms_.empty() && atom.location - m.atoms_.back().location <= merge_tol) {
      m.atoms_.back().weight += atom.weight;
    } else {
      m.atoms_.push_back(atom);
    }
  }
  return m;
}

DiscreteMeasure spectral_measure(const GraphSpectrum& s) {
  const double sc = 1.0 / std::sqrt(static_cast<double>(s.q));
  std::vector<double> x, w(s.n, 1.0 / static_cast<double>(s.n));
  for (double l : s.eigenvalues) x.push_back(sc * l);
  return DiscreteMeasure::from_points(x, w);
}

DiscreteMeasure spectral_measure(const RegularGraph& g) { return spectral_measure(graph_spectrum(g, false)); }

DiscreteMeasure vertex_spectral_measure(const GraphSpectrum& s, Vertex v) {
  if (v >= s.n) throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  if (s.eigenvectors.size() == 0) throw Error(ErrorCode::InvalidParameter, "spectrum was computed without eigenvectors");
  const double sc = 1.0 / std::sqrt(static_cast<double>(s.q));
  std::vector<double> x, w;
  for (std::size_t k = 0; k < s.n; ++k) {
    const double phi = s.eigenvectors(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(k));
    x.push_back(sc * s.eigenvalues[k]);
    w.push_back(phi * phi);
  }
  // Renormalise the rounding of an orthonormal basis.
  double total = 0.0;
  for (double wi : w) total += wi;
  for (double& wi : w) wi /= total;
  return DiscreteMeasure::from_points(x, w);
}

Complex vertex_integral(const GraphSpectrum& s, Vertex v, const FunctionSpec& h) {
  if (v >= s.n) throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  const double sc = 1.0 / std::sqrt(static_cast<double>(s.q));
  Complex acc{};
  for (std::size_t k = 0; k < s.n; ++k) {
    const double phi = s.eigenvectors(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(k));
    acc += phi * phi * h(sc * s.eigenvalues[k]);
  }
  return acc;
}

Complex vertex_integral(const RegularGraph& g, Vertex v, const FunctionSpec& h) {
  return vertex_integral(graph_spectrum(g, true), v, h);
}

Complex stieltjes_plain(const DiscreteMeasure& mu, Complex z) {
  Complex s{};
  for (const auto& a : mu.atoms()) {
    const Complex d = a.location - z;
    if (std::abs(d) < 1e-14) throw Error(ErrorCode::PoleOnSupport, "z coincides with an atom");
    s += a.weight / d;
  }
  return s;
}

Complex stieltjes_modified(const DiscreteMeasure& mu, Complex t, Basis qprime) {
  const Complex num = 1.0 - qprime.inverse_q() * t * t;
  Complex s{};
  for (const auto& a : mu.atoms()) {
    const Complex d = 1.0 - a.location * t + t * t;
    if (std::abs(d) < 1e-14) throw Error(ErrorCode::PoleOnSupport, "integrand has a pole at an atom");
    s += a.weight * num / d;
  }
  return s;
}

Complex joukowsky_inverse(Complex z) {
  const Complex r = std::sqrt(z * z - 4.0);
  Complex t = (z - r) / 2.0;
  if (std::abs(t) > 1.0) t = (z + r) / 2.0;
  return t;
}

Complex km_stieltjes_plain(Basis q, Complex z) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= 2.0) throw Error(ErrorCode::PoleOnSupport, "z lies on [-2, 2]");
  const Complex t = joukowsky_inverse(z);
  return t / (q.inverse_q() * t * t - 1.0);
}

Complex km_stieltjes_modified(Basis q, Complex t, Basis qprime) {
  if (!(std::abs(t) < 1.0)) throw Error(ErrorCode::PoleOnSupport, "modified transform of mu_q needs |t| < 1");
  if (q == qprime) return 1.0;
  const Complex num = 1.0 - qprime.inverse_q() * t * t;
  return km_integrate(q, [&](double x) { return num / (1.0 - x * t + t * t); }, 1e-14);
}

std::vector<double> modified_stieltjes_taylor(const DiscreteMeasure& mu, Basis qprime, int R) {
  // Series division of (1 - t^2/q') by (1 - x t + t^2), atom by atom.
  std::vector<double> out(static_cast<std::size_t>(R) + 1, 0.0);
  const double iq = qprime.inverse_q();
  for (const auto& a : mu.atoms()) {
    double g2 = 0.0, g1 = 0.0;
    for (int r = 0; r <= R; ++r) {
      const double num = r == 0 ? 1.0 : r == 2 ? -iq : 0.0;
      const double g = num + a.location * g1 - g2;
      out[r] += a.weight * g;
      g2 = g1;
      g1 = g;
    }
  }
  return out;
}

StieltjesSeriesReport stieltjes_series_check(const RegularGraph& g, int R) {
  const auto mu = spectral_measure(g);
  const auto table = circuit_counts(g, R, CircuitRoute::Combinatorial);
  const double q = g.q();
  const double n = static_cast<double>(g.vertex_count());

  StieltjesSeriesReport rep;
  rep.coefficients_q = modified_stieltjes_taylor(mu, Basis::Xq(g.q()), R);
  rep.coefficients_1 = modified_stieltjes_taylor(mu, Basis::Y(), R);
  for (int r = 0; r <= R; ++r) {
    const double s = std::pow(q, -r / 2.0);
    rep.predicted_q.push_back(s * static_cast<double>(table.f[r]) / n);
    // (1 - t^2) / (1 - t^2/q) = 1 + sum_{k >= 1} (q^{-k} - q^{1-k}) t^{2k}.
    double background = r == 0 ? 1.0 : (r % 2 == 0 ? std::pow(q, -r / 2.0) - std::pow(q, 1.0 - r / 2.0) : 0.0);
    rep.predicted_1.push_back(background + (r >= 1 ? s * static_cast<double>(table.c[r]) / n : 0.0));
  }
  for (int r = 0; r <= R; ++r) {
    rep.max_deviation = std::max({rep.max_deviation, std::abs(rep.coefficients_q[r] - rep.predicted_q[r]),
                                  std::abs(rep.coefficients_1[r] - rep.predicted_1[r])});
  }
  return rep;
}

Complex km_fourier_laplace(Basis q, Complex p, double tol) {
  const Complex ip(-p.imag(), p.real());
  return km_integrate(q, [&](double x) { return std::exp(ip * x); }, tol);
}

namespace {

// Largest r for which traces of A A_r, bounded by |V| (q+1)^2 q^{r-1},
// stay below 4e18.
int safe_count_radius(const RegularGraph& g) {
  const double lim = std::log(4e18 / (static_cast<double>(g.vertex_count()) * (g.q() + 1.0) * (g.q() + 1.0)));
  return g.q() == 1 ? 4000 : static_cast<int>(lim / std::log(static_cast<double>(g.q())));
}

}  // namespace

Complex fourier_laplace(const RegularGraph& g, Complex p, TransformRoute route, double tol) {
  const double q = g.q();
  if (route == TransformRoute::Eigen) {
    const auto mu = spectral_measure(g);
    const Complex ip(-p.imag(), p.real());
    return mu.integrate([&](double x) { return std::exp(ip * x); });
  }

  // |term_r| <= (q+1)/q (sqrt(q)|p|)^r / r! I_0(4|p|).
  const double ap = std::abs(p);
  const double i0 = bessel_i(0, 4.0 * ap);
  const int cap = safe_count_radius(g);
  int R = 0;
  double term = (q + 1.0) / q * i0;
  for (int r = 1;; ++r) {
    term *= std::sqrt(q) * ap / r;
    if (term < tol * 0.1 && r > std::sqrt(q) * ap) {
      R = r;
      break;
    }
    if (r >= cap) throw Error(ErrorCode::NoConvergence, "Fourier-Laplace series needs counts beyond int64 range");
  }
  const auto table = circuit_counts(g, R, CircuitRoute::Combinatorial);
  const double n = static_cast<double>(g.vertex_count());
  Complex s = km_fourier_laplace(Basis::Xq(g.q()), p);
  Complex ir(1.0, 0.0);
  for (int r = 1; r <= R; ++r) {
    ir *= Complex(0.0, 1.0);
    if (table.c[r] == 0) continue;
    s += std::pow(q, -r / 2.0) * ir * bessel_j(r, 2.0 * p) * static_cast<double>(table.c[r]) / n;
  }
  return s;
}

TransformZeroOrder transform_zero_order(const RegularGraph& g, double p) {
  TransformZeroOrder out;
  // First circuit length with a nonzero correction term.
  const int cap = safe_count_radius(g);
  for (int R = 8;; R *= 2) {
    const auto table = circuit_counts(g, std::min(R, cap), CircuitRoute::Combinatorial);
    const auto it = std::find_if(table.c.begin() + 1, table.c.end(), [](std::int64_t c) { return c != 0; });
    if (it != table.c.end()) {
      out.series_order = static_cast<int>(it - table.c.begin());
      break;
    }
    if (R >= cap) throw Error(ErrorCode::NoConvergence, "no circuits within the countable range");
  }
  const Basis b = Basis::Xq(g.q());
  auto diff = [&](double x) {
    return std::abs(fourier_laplace(g, Complex(x), TransformRoute::Eigen) - km_fourier_laplace(b, Complex(x), 1e-14));
  };
  out.slope = std::log(diff(p) / diff(p / 2.0)) / std::log(2.0);
  out.slope_order = static_cast<int>(std::lround(out.slope));
  return out;
}

double heat_trace(const RegularGraph& g, double t, HeatTraceRoute route, double tol) {
  if (t < 0) throw Error(ErrorCode::InvalidParameter, "heat trace needs t >= 0");
  const double q = g.q();
  const double sq = std::sqrt(q);
  const double n = static_cast<double>(g.vertex_count());
  const Basis b = Basis::Xq(g.q());

  if (route == HeatTraceRoute::Eigen) {
    double s = 0.0;
    for (double l : eigenvalues_symmetric(adjacency_matrix(g))) s += std::exp(-(q + 1.0 - l) * t);
    return s;
  }

  // Circuit terms with the bound c_r <= |V| (q+1) q^{r-1}.
  const double damp = std::exp(-(q + 1.0) * t);
  const int cap = safe_count_radius(g);
  int R = 1;
  for (int r = 1;; ++r) {
    const double bound = n * (q + 1.0) / q * std::pow(sq, r) * damp * bessel_i(r, 2.0 * sq * t);
    if (bound < tol * 1e-3 && r > 2.0 * sq * t) {
      R = r;
      break;
    }
    if (r >= cap) throw Error(ErrorCode::NoConvergence, "heat trace series needs counts beyond int64 range");
  }
  const auto table = circuit_counts(g, R, CircuitRoute::Combinatorial);
  double circuits = 0.0;
  for (int r = 1; r <= R; ++r) {
    if (table.c[r] == 0) continue;
    circuits += std::pow(q, -r / 2.0) * static_cast<double>(table.c[r]) * damp * bessel_i(r, 2.0 * sq * t);
  }

  if (route == HeatTraceRoute::Series) {
    const double bg = km_integrate(b, [&](double x) { return std::exp(sq * t * x); }, 1e-14);
    return n * damp * bg + circuits;
  }
  const double bg = km_integrate(b, [&](double x) { return std::exp(-t * (sq - 1.0) * (sq - 1.0) * x); }, 1e-14);
  return bg + circuits / n;
}

}  // namespace chebtrace
