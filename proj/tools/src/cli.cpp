// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chebtrace/error.hpp"
#include "chebtrace/exact.hpp"
#include "chebtrace/function_spec.hpp"
#include "chebtrace/graph.hpp"
#include "chebtrace/kernels.hpp"
#include "chebtrace/nbw.hpp"
#include "chebtrace/spectral.hpp"
#include "chebtrace/trace.hpp"
#include "chebtrace/zeta.hpp"

namespace chebtrace::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string generate;
  double tol = 1e-8;
  int rmax = -1;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string fn = "exp:z=0.5";
  std::vector<double> times{0.25, 1.0, 3.0};
  std::vector<double> points{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  bool no_timing = false;
};

/// One row-oriented table for CSV output; JSON carries the same data
/// under "results".
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json results = Json::object();
  Json residuals = Json::object();
  Table table;
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string complex_cell(Complex z) { return num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i"; }

template <class T>
Json int_array(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json bigint_array(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

// Tolerance handed to truncating routines; tighter than --tol, but not
// below what double arithmetic can resolve.
double inner_tol(const Options& o) { return std::max(o.tol * 0.01, 1e-14); }

int rmax_or(const Options& o, int fallback) { return o.rmax >= 0 ? o.rmax : fallback; }

RegularGraph load_graph(const Options& o) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + o.input);
    return read_edge_list(in, o.input);
  }
  return generate(o.generate, o.seed);
}

Report cmd_graph(const RegularGraph& g, const Options&) {
  Report r;
  const int gi = girth(g);
  const bool bip = is_bipartite(g);
  r.results = {{"name", g.name()}, {"edges", g.edge_count()}, {"girth", gi}, {"bipartite", bip}};
  r.table.header = {"n", "q", "edges", "girth", "bipartite"};
  r.table.rows.push_back({std::to_string(g.vertex_count()), std::to_string(g.q()), std::to_string(g.edge_count()),
                          std::to_string(gi), bip ? "true" : "false"});
  return r;
}

Report cmd_nbw(const RegularGraph& g, const Options& o) {
  const int R = rmax_or(o, 8);
  const auto comb = circuit_counts(g, R, CircuitRoute::Combinatorial);
  const auto spec = circuit_counts(g, R, CircuitRoute::Spectral);
  std::vector<std::size_t> primes(static_cast<std::size_t>(R) + 1, 0);
  for (const auto& p : prime_circuit_classes(g, R)) ++primes[p.length()];

  // c_r = sum over prime classes with l | r of l.
  std::int64_t prime_gap = 0;
  for (int k = 1; k <= R; ++k) {
    std::int64_t s = 0;
    for (int l = 1; l <= k; ++l)
      if (k % l == 0) s += l * static_cast<std::int64_t>(primes[l]);
    prime_gap = std::max(prime_gap, std::abs(s - comb.c[k]));
  }
  std::int64_t route_gap = 0;
  for (int k = 0; k <= R; ++k) route_gap = std::max(route_gap, std::abs(comb.c[k] - spec.c[k]));

  Report r;
  r.results = {{"rmax", R}, {"f", int_array(comb.f)}, {"c", int_array(comb.c)}, {"prime_classes", int_array(primes)}};
  r.residuals = {{"circuit_routes", static_cast<double>(route_gap)}, {"prime_classes", static_cast<double>(prime_gap)}};
  r.table.header = {"r", "f_r", "c_r", "prime_classes"};
  for (int k = 0; k <= R; ++k) {
    r.table.rows.push_back({std::to_string(k), std::to_string(comb.f[k]), std::to_string(comb.c[k]),
                            std::to_string(primes[k])});
  }
  return r;
}

Report cmd_spectrum(const RegularGraph& g, const Options& o) {
  const int R = rmax_or(o, 8);
  const auto s = graph_spectrum(g, false);
  const auto mu = spectral_measure(s);
  const auto check = stieltjes_series_check(g, R);

  Report r;
  r.results["eigenvalues"] = s.eigenvalues;
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"location", a.location}, {"weight", a.weight}});
  r.results["measure"] = atoms;
  Json samples = Json::array();
  for (Complex z : {Complex(0.0, 1.0), Complex(1.0, 1.0), Complex(3.0, 0.0)}) {
    samples.push_back({{"z", complex_json(z)},
                       {"graph", complex_json(stieltjes_plain(mu, z))},
                       {"kesten_mckay", complex_json(km_stieltjes_plain(Basis::Xq(g.q()), z))}});
  }
  r.results["stieltjes"] = samples;
  r.results["stieltjes_taylor_q"] = check.coefficients_q;
  r.results["stieltjes_taylor_1"] = check.coefficients_1;
  r.residuals = {{"stieltjes_series", check.max_deviation}};
  r.table.header = {"location", "weight"};
  for (const auto& a : mu.atoms()) r.table.rows.push_back({num(a.location), num(a.weight)});
  return r;
}

Report cmd_trace(const RegularGraph& g, const Options& o) {
  const auto h = parse_function(o.fn);
  const double inner = inner_tol(o);
  const auto t = trace_formula(g, h, inner);
  const auto p = trace_formula_prime(g, h, inner);
  const auto v = pretrace(g, 0, h, inner);

  Report r;
  r.results["function"] = h.describe();
  r.results["trace"] = {{"lhs", complex_json(t.lhs)}, {"rhs", complex_json(t.rhs)}, {"terms", t.terms}};
  r.results["prime_trace"] = {{"lhs", complex_json(p.lhs)}, {"rhs", complex_json(p.rhs)}, {"L", p.L},
                              {"classes", p.classes}, {"tail_bound", p.tail_bound}};
  r.results["pretrace_vertex0"] = {{"lhs", complex_json(v.lhs)}, {"rhs", complex_json(v.rhs)}, {"terms", v.terms}};
  r.residuals = {{"trace", t.residual}, {"prime_trace", p.residual}, {"pretrace", v.residual}};
  r.table.header = {"formula", "lhs", "rhs", "residual"};
  r.table.rows.push_back({"trace", complex_cell(t.lhs), complex_cell(t.rhs), num(t.residual)});
  r.table.rows.push_back({"prime_trace", complex_cell(p.lhs), complex_cell(p.rhs), num(p.residual)});
  r.table.rows.push_back({"pretrace", complex_cell(v.lhs), complex_cell(v.rhs), num(v.residual)});
  return r;
}

Report cmd_zeta(const RegularGraph& g, const Options& o) {
  const int R = rmax_or(o, 10);
  const auto log_series = zeta_log_series(g, R);
  const auto det_side = determinant_log_series(g, R);
  const auto recip = zeta_reciprocal_series(g, R);
  const auto poly = determinant_polynomial(g);

  double exact_gap = 0.0;
  for (std::size_t k = 0; k < log_series.size(); ++k) {
    exact_gap = std::max(exact_gap, std::abs(to_double(log_series[k] - det_side[k])));
  }

  // det(I - tA + q t^2 I) from the polynomial against the eigenvalue product.
  const auto spec = graph_spectrum(g, false);
  Json grid = Json::array();
  double grid_gap = 0.0;
  for (double t : {0.1, 0.2, 0.3, 0.4}) {
    double from_poly = 0.0;
    for (std::size_t k = poly.size(); k-- > 0;) from_poly = from_poly * t + to_double(poly[k]);
    double from_eig = 1.0;
    for (double l : spec.eigenvalues) from_eig *= 1.0 - t * l + g.q() * t * t;
    grid_gap = std::max(grid_gap, std::abs(from_poly - from_eig) / std::max(1.0, std::abs(from_eig)));
    grid.push_back({{"t", t}, {"determinant", from_poly}, {"zeta_reciprocal", complex_json(zeta_reciprocal(g, t))}});
  }

  Report r;
  r.results = {{"rmax", R},
               {"log_zeta", rational_array(log_series)},
               {"neg_log_determinant_side", rational_array(det_side)},
               {"zeta_reciprocal", rational_array(recip.coefficients())},
               {"determinant_polynomial", bigint_array(poly)},
               {"grid", grid}};
  r.residuals = {{"series", exact_gap}, {"determinant_grid", grid_gap}};
  r.table.header = {"r", "log_zeta", "neg_log_determinant_side", "zeta_reciprocal"};
  for (int k = 0; k <= R; ++k) {
    r.table.rows.push_back({std::to_string(k), to_string(log_series[k]), to_string(det_side[k]), to_string(recip[k])});
  }
  return r;
}

Report cmd_heat(const RegularGraph& g, const Options& o) {
  Report r;
  Json rows = Json::array();
  double trace_gap = 0.0, row_gap = 0.0;
  r.table.header = {"t", "trace_eigen", "trace_series", "h00", "h01"};
  for (double t : o.times) {
    const RealMatrix h = heat_operator(g, t);
    const double te = heat_trace(g, t, HeatTraceRoute::Eigen);
    std::optional<double> ts;
    try {
      ts = heat_trace(g, t, HeatTraceRoute::Series);
      trace_gap = std::max(trace_gap, std::abs(te - *ts) / std::max(1.0, std::abs(te)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoConvergence) throw;
    }
    row_gap = std::max(row_gap, (h.rowwise().sum().array() - 1.0).abs().maxCoeff());
    const double h01 = h.cols() > 1 ? h(0, 1) : 0.0;
    rows.push_back({{"t", t},
                    {"trace_eigen", te},
                    {"trace_series", ts ? Json(*ts) : Json(nullptr)},
                    {"h00", h(0, 0)},
                    {"h01", h01}});
    r.table.rows.push_back({num(t), num(te), ts ? num(*ts) : "", num(h(0, 0)), num(h01)});
  }
  r.results["series"] = rows;
  r.residuals = {{"trace_routes", trace_gap}, {"row_sums", row_gap}};
  return r;
}

Report cmd_walks(const RegularGraph& g, const Options& o) {
  const int R = rmax_or(o, 10);
  Report r;
  Json rows = Json::array();
  double gap = 0.0;
  r.table.header = {"n", "closed_walks", "matrix_power", "tree_closed_walks"};
  for (int n = 0; n <= R; ++n) {
    const BigInt w = walk_count(g, 0, 0, n);
    const BigInt m = walk_count_matrix_power(g, 0, 0, n);
    if (w != m) gap = std::max(gap, std::abs(to_double(BigInt(w - m))));
    const std::string tree = n % 2 == 0 ? tree_walk_count(g.q(), 0, n / 2).str() : "0";
    rows.push_back({{"n", n}, {"closed_walks", w.str()}, {"matrix_power", m.str()}, {"tree_closed_walks", tree}});
    r.table.rows.push_back({std::to_string(n), w.str(), m.str(), tree});
  }
  r.results["vertex"] = 0;
  r.results["counts"] = rows;
  r.residuals = {{"walk_routes", gap}};
  return r;
}

Report cmd_fourier(const RegularGraph& g, const Options& o) {
  Report r;
  Json rows = Json::array();
  double gap = 0.0;
  r.table.header = {"p", "eigen", "bessel_series", "kesten_mckay"};
  for (double p : o.points) {
    const Complex e = fourier_laplace(g, p, TransformRoute::Eigen);
    const Complex b = fourier_laplace(g, p, TransformRoute::BesselSeries, inner_tol(o));
    const Complex k = km_fourier_laplace(Basis::Xq(g.q()), p);
    gap = std::max(gap, std::abs(e - b));
    rows.push_back({{"p", p}, {"eigen", complex_json(e)}, {"bessel_series", complex_json(b)}, {"kesten_mckay", complex_json(k)}});
    r.table.rows.push_back({num(p), complex_cell(e), complex_cell(b), complex_cell(k)});
  }
  const auto z = transform_zero_order(g);
  r.results["samples"] = rows;
  r.results["zero_order"] = {{"series", z.series_order}, {"slope", z.slope}, {"slope_order", z.slope_order}};
  r.residuals = {{"routes", gap}};
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& out, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
    out << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

using Command = std::function<Report(const RegularGraph&, const Options&)>;

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Trace formula and zeta computations on regular graphs", "chebtrace"};
  app.require_subcommand(1, 1);

  const std::vector<std::pair<std::string, std::string>> names = {
      {"graph", "Print n, q and girth"},
      {"nbw", "Non-backtracking counts f_r, circuits c_r and prime classes"},
      {"spectrum", "Eigenvalues, spectral measure and Stieltjes samples"},
      {"trace", "Trace, prime trace and pre-trace formulas for --fn"},
      {"zeta", "Zeta log series, determinant side and evaluation grid"},
      {"heat", "Heat traces and kernel entries at --times"},
      {"walks", "Closed walk counts at vertex 0 against the tree"},
      {"fourier", "Fourier-Laplace transform of the spectral measure at --points"},
  };
  const std::map<std::string, Command> commands = {
      {"graph", cmd_graph}, {"nbw", cmd_nbw},   {"spectrum", cmd_spectrum}, {"trace", cmd_trace},
      {"zeta", cmd_zeta},   {"heat", cmd_heat}, {"walks", cmd_walks},       {"fourier", cmd_fourier},
  };

  for (const auto& [name, help] : names) {
    auto* sub = app.add_subcommand(name, help);
    auto* in = sub->add_option("--input", o.input, "Edge-list file");
    auto* gen = sub->add_option("--generate", o.generate, "Family such as cycle:5, petersen, random_regular:10,3");
    in->excludes(gen);
    sub->add_option("--tol", o.tol, "Residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--rmax", o.rmax, "Largest walk length or series order")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed for random families")->capture_default_str();
    sub->add_flag("--no-timing", o.no_timing, "Omit runtime_ms from JSON output");
    if (name == "trace") sub->add_option("--fn", o.fn, "Test function: exp:z=.. | wave:z=.. | poly:n=.. | cheb:Y3 | log:t=..")->capture_default_str();
    if (name == "heat") sub->add_option("--times", o.times, "Sample times")->delimiter(',');
    if (name == "fourier") sub->add_option("--points", o.points, "Sample points p")->delimiter(',');
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto* sub = app.get_subcommands().front();
  if (o.input.empty() && o.generate.empty()) {
    err << "error: one of --input or --generate is required\n";
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  std::optional<RegularGraph> g;
  try {
    g.emplace(load_graph(o));
    report = commands.at(sub->get_name())(*g, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  bool failed = false;
  for (const auto& [key, value] : report.residuals.items()) {
    if (value.get<double>() > o.tol) {
      failed = true;
      err << "residual " << key << " = " << value.get<double>() << " exceeds tol " << o.tol << '\n';
    }
  }

  if (o.format == "csv") {
    write_csv(out, report.table);
  } else {
    Json doc;
    doc["command"] = sub->get_name();
    doc["graph"] = {{"n", g->vertex_count()}, {"q", g->q()}};
    doc["results"] = report.results;
    doc["residuals"] = report.residuals;
    if (!o.no_timing) doc["runtime_ms"] = ms;
    out << doc.dump(2) << '\n';
  }
  return failed ? kExitResidual : kExitOk;
}

}  // namespace chebtrace::cli
