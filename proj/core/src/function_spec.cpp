// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include "chebtrace/function_spec.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "chebtrace/error.hpp"

namespace chebtrace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::optional<int> last_nonzero(const std::vector<Complex>& v) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (v[i] != Complex{}) return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace

FunctionSpec FunctionSpec::taylor(std::vector<Complex> b, double radius) {
  if (!(radius > 0)) throw Error(ErrorCode::InvalidParameter, "Taylor radius must be positive");
  return FunctionSpec(TaylorSeries{std::move(b), radius});
}

FunctionSpec FunctionSpec::polynomial(std::vector<Complex> b) { return taylor(std::move(b), kInf); }

FunctionSpec FunctionSpec::circle_samples(std::vector<Complex> values, double tau, double rho) {
  if (values.empty() || !(tau > 0)) throw Error(ErrorCode::InvalidParameter, "need samples on a circle of positive radius");
  return FunctionSpec(CircleSamples{std::move(values), tau, rho});
}

FunctionSpec FunctionSpec::exp(Complex z) { return FunctionSpec(ExpFunction{z}); }

FunctionSpec FunctionSpec::monomial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "monomial degree must be >= 0");
  return FunctionSpec(Monomial{n});
}

FunctionSpec FunctionSpec::shifted_log(double t) {
  if (!(std::abs(t) < 1.0)) throw Error(ErrorCode::InvalidParameter, "shifted log needs |t| < 1");
  return FunctionSpec(ShiftedLog{t});
}

FunctionSpec FunctionSpec::chebyshev(Basis basis, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidParameter, "polynomial index must be >= 0");
  return FunctionSpec(ChebyshevElement{basis, r});
}

FunctionSpec FunctionSpec::expansion(CoefficientSeries s) {
  if (!s.finite_support) throw Error(ErrorCode::InvalidParameter, "expansion needs a finitely supported series");
  return FunctionSpec(Expansion{std::move(s)});
}

double FunctionSpec::holo_radius() const {
  return std::visit(Overloaded{
                        [](const TaylorSeries& t) {
                          if (std::isinf(t.radius)) return kInf;
                          // The ellipse Omega(rho) reaches out to rho + 1/rho on the real axis.
                          if (t.radius <= 2.0) return 1.0;
                          return (t.radius + std::sqrt(t.radius * t.radius - 4.0)) / 2.0;
                        },
                        [](const CircleSamples& c) { return c.rho; },
                        [](const ShiftedLog& l) { return l.t == 0.0 ? kInf : 1.0 / std::abs(l.t); },
                        [](const auto&) { return kInf; },
                    },
                    v_);
}

std::optional<int> FunctionSpec::polynomial_degree() const {
  return std::visit(Overloaded{
                        [](const TaylorSeries& t) -> std::optional<int> {
                          if (!std::isinf(t.radius)) return std::nullopt;
                          return last_nonzero(t.b).value_or(0);
                        },
                        [](const Monomial& m) -> std::optional<int> { return m.n; },
                        [](const ChebyshevElement& c) -> std::optional<int> { return c.r; },
                        [](const Expansion& e) -> std::optional<int> { return last_nonzero(e.series.coeffs).value_or(0); },
                        [](const ExpFunction& e) -> std::optional<int> {
                          if (e.z == Complex{}) return 0;
                          return std::nullopt;
                        },
                        [](const ShiftedLog& l) -> std::optional<int> {
                          if (l.t == 0.0) return 0;
                          return std::nullopt;
                        },
                        [](const CircleSamples&) -> std::optional<int> { return std::nullopt; },
                    },
                    v_);
}

Complex FunctionSpec::eval(Complex x) const {
  return std::visit(Overloaded{
                        [&](const TaylorSeries& t) {
                          Complex s{};
                          for (std::size_t i = t.b.size(); i-- > 0;) s = s * x + t.b[i];
                          return s;
                        },
                        [](const CircleSamples&) -> Complex {
                          throw Error(ErrorCode::NotEvaluable, "circle samples cannot be evaluated pointwise");
                        },
                        [&](const ExpFunction& e) { return std::exp(e.z * x); },
                        [&](const Monomial& m) { return std::pow(x, m.n); },
                        [&](const ShiftedLog& l) { return std::log(1.0 - x * l.t + l.t * l.t); },
                        [&](const ChebyshevElement& c) { return cheb_eval(c.basis, c.r, x); },
                        [&](const Expansion& e) { return e.series.evaluate(x); },
                    },
                    v_);
}

std::string FunctionSpec::describe() const {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const TaylorSeries& t) { os << "taylor(" << t.b.size() << " terms)"; },
                 [&](const CircleSamples& c) { os << "samples(" << c.values.size() << ")"; },
                 [&](const ExpFunction& e) {
                   if (e.z.imag() == 0.0) {
                     os << "exp(" << e.z.real() << "x)";
                   } else if (e.z.real() == 0.0) {
                     os << "exp(" << e.z.imag() << "ix)";
                   } else {
                     os << "exp((" << e.z.real() << "+" << e.z.imag() << "i)x)";
                   }
                 },
                 [&](const Monomial& m) { os << "x^" << m.n; },
                 [&](const ShiftedLog& l) { os << "log(1-" << l.t << "x+" << l.t * l.t << ")"; },
                 [&](const ChebyshevElement& c) { os << c.basis.name() << "_" << c.r; },
                 [&](const Expansion& e) { os << "expansion(" << e.series.basis.name() << ")"; },
             },
             v_);
  return os.str();
}

namespace {

double parse_double(std::string_view s, std::string_view what) {
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "' for " + std::string(what));
  }
  return v;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "' for " + std::string(what));
  }
  return v;
}

// "k=v,k=v" plus bare tokens (returned under the empty key).
std::map<std::string, std::string, std::less<>> parse_keys(std::string_view s) {
  std::map<std::string, std::string, std::less<>> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto tok = s.substr(0, comma);
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) {
      out[""] = std::string(tok);
    } else {
      out[std::string(tok.substr(0, eq))] = std::string(tok.substr(eq + 1));
    }
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

const std::string& require(const std::map<std::string, std::string, std::less<>>& kv, const std::string& key,
                           std::string_view fn) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw Error(ErrorCode::ParseError, std::string(fn) + " needs " + key + "=...");
  return it->second;
}

}  // namespace

FunctionSpec parse_function(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto kv = parse_keys(colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1));

  if (name == "exp") {
    const double re = parse_double(require(kv, "z", name), "z");
    const auto im = kv.find("im");
    return FunctionSpec::exp(Complex(re, im == kv.end() ? 0.0 : parse_double(im->second, "im")));
  }
  if (name == "wave") return FunctionSpec::oscillatory(parse_double(require(kv, "z", name), "z"));
  if (name == "poly") return FunctionSpec::monomial(parse_int(require(kv, "n", name), "n"));
  if (name == "log") return FunctionSpec::shifted_log(parse_double(require(kv, "t", name), "t"));
  if (name == "cheb") {
    const std::string& tag = require(kv, "", name);
    if (tag.size() >= 3 && tag.compare(0, 2, "Xq") == 0) {
      const int q = parse_int(require(kv, "q", name), "q");
      return FunctionSpec::chebyshev(Basis::Xq(q), parse_int(std::string_view(tag).substr(2), "index"));
    }
    if (tag.size() >= 2 && tag[0] == 'Y') return FunctionSpec::chebyshev(Basis::Y(), parse_int(std::string_view(tag).substr(1), "index"));
    if (tag.size() >= 2 && tag[0] == 'X') return FunctionSpec::chebyshev(Basis::Xinf(), parse_int(std::string_view(tag).substr(1), "index"));
    throw Error(ErrorCode::ParseError, "cheb expects Y<r>, X<r> or Xq<r>,q=<q>");
  }
  throw Error(ErrorCode::ParseError,
              "unknown function '" + std::string(name) + "' (builtins: exp, wave, poly, cheb, log)");
}

}  // namespace chebtrace
