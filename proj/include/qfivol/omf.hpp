// Copyright 2026 The qfivol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Normalized symmetric operator monotone functions.
//
// The catalog is closed: SLD (arithmetic), RLD (harmonic), WY (the square of
// the "root mean") and the Wigner-Yanase-Dyson family WYD(beta). Every member
// satisfies f(1) = 1 and x f(1/x) = f(x). A member is regular when its limit
// at zero is strictly positive; only regular members admit the tilde
// transform
//
//     f~(x) = 1/2 [ (x + 1) - (x - 1)^2 f(0) / f(x) ].

#ifndef QFIVOL_OMF_HPP
#define QFIVOL_OMF_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfivol/types.hpp"

namespace qfivol {

enum class Family { SLD, RLD, WY, WYD };

struct MonotoneFunction {
  Family kind = Family::SLD;
  double beta = 0.0;  // only meaningful for WYD, in (0, 1/2)

  static MonotoneFunction sld() { return {Family::SLD, 0.0}; }
  static MonotoneFunction rld() { return {Family::RLD, 0.0}; }
  static MonotoneFunction wy() { return {Family::WY, 0.0}; }
  static MonotoneFunction wyd(double beta) { return {Family::WYD, beta}; }

  friend bool operator==(const MonotoneFunction&, const MonotoneFunction&) = default;
};

inline void validate(const MonotoneFunction& f) {
  if (f.kind == Family::WYD && !(f.beta > 0.0 && f.beta < 0.5)) {
    throw ParameterError("WYD parameter beta must lie in (0, 1/2), got " + std::to_string(f.beta));
  }
}

namespace detail {

// expm1(s)/s including the removable point s = 0.
inline double expm1_ratio_series(double s) {
  return 1.0 + s * (0.5 + s * (1.0 / 6.0 + s / 24.0));
}

inline double wyd_eval(double beta, double x) {
  const double t = std::log(x);
  if (std::abs(x - 1.0) < 1e-6) {
    const double num = expm1_ratio_series(t);
    return num * num / (expm1_ratio_series(beta * t) * expm1_ratio_series((1.0 - beta) * t));
  }
  const double num = std::expm1(t);
  return beta * (1.0 - beta) * num * num /
         (std::expm1(beta * t) * std::expm1((1.0 - beta) * t));
}

}  // namespace detail

/// f(x) for x > 0.
inline double eval_f(const MonotoneFunction& f, double x) {
  validate(f);
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("operator monotone function evaluated at non-positive x = " +
                      std::to_string(x));
  }
  switch (f.kind) {
    case Family::SLD:
      return 0.5 * (1.0 + x);
    case Family::RLD:
      return 2.0 * x / (x + 1.0);
    case Family::WY: {
      const double h = 0.5 * (1.0 + std::sqrt(x));
      return h * h;
    }
    case Family::WYD:
      return detail::wyd_eval(f.beta, x);
  }
  return 0.0;
}

/// lim_{x -> 0} f(x), from the analytic closed form of each family.
inline double f_at_zero(const MonotoneFunction& f) {
  validate(f);
  switch (f.kind) {
    case Family::SLD:
      return 0.5;
    case Family::RLD:
      return 0.0;
    case Family::WY:
      return 0.25;
    case Family::WYD:
      return f.beta * (1.0 - f.beta);
  }
  return 0.0;
}

inline bool is_regular(const MonotoneFunction& f) { return f_at_zero(f) > 0.0; }

inline void require_regular(const MonotoneFunction& f, const char* what = "tilde transform") {
  if (!is_regular(f)) {
    throw ParameterError(std::string(what) + " requires regular f");
  }
}

/// f~(x) for x > 0.
///
/// Evaluated from the simplified closed form of each family:
///   SLD -> 2x/(x+1),  WY -> sqrt(x),  WYD(b) -> (x^b + x^(1-b))/2.
/// The literal definition subtracts two O(x) terms whose difference can be
/// O(1/x) smaller, which loses digits at both ends of (0, inf).
inline double eval_tilde(const MonotoneFunction& f, double x) {
  require_regular(f, "tilde transform");
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("tilde transform evaluated at non-positive x = " + std::to_string(x));
  }
  switch (f.kind) {
    case Family::SLD:
      return 2.0 * x / (x + 1.0);
    case Family::WY:
      return std::sqrt(x);
    case Family::WYD:
      return 0.5 * (std::pow(x, f.beta) + std::pow(x, 1.0 - f.beta));
    case Family::RLD:
      break;
  }
  throw ParameterError("tilde transform requires regular f");
}

enum class Dominance { F_LE_G, G_LE_F, INCOMPARABLE, EQUAL };

inline const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::F_LE_G:
      return "F_LE_G";
    case Dominance::G_LE_F:
      return "G_LE_F";
    case Dominance::INCOMPARABLE:
      return "INCOMPARABLE";
    case Dominance::EQUAL:
      return "EQUAL";
  }
  return "?";
}

/// `count` log-spaced points covering [lo, hi].
inline std::vector<double> log_grid(std::size_t count = 1000, double lo = 1e-6, double hi = 1e6) {
  if (count == 0 || !(lo > 0.0) || !(hi >= lo)) {
    throw ParameterError("log_grid: need count >= 1 and 0 < lo <= hi");
  }
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::exp(a + step * static_cast<double>(i));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

/// Pointwise order of f~ against g~ on `grid`, decided through the
/// equivalent criterion f~ <= g~  <=>  f(0)/f(t) >= g(0)/g(t) for all t.
inline Dominance tilde_dominates(const MonotoneFunction& f, const MonotoneFunction& g,
                                 std::span<const double> grid, double tol = 1e-12) {
  require_regular(f, "tilde_dominates");
  require_regular(g, "tilde_dominates");
  if (grid.empty()) {
    throw ParameterError("tilde_dominates: empty grid");
  }
  const double f0 = f_at_zero(f);
  const double g0 = f_at_zero(g);
  double lo = 0.0;
  double hi = 0.0;
  for (double t : grid) {
    const double d = f0 / eval_f(f, t) - g0 / eval_f(g, t);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (std::max(-lo, hi) < tol) return Dominance::EQUAL;
  if (lo >= -tol) return Dominance::F_LE_G;
  if (hi <= tol) return Dominance::G_LE_F;
  return Dominance::INCOMPARABLE;
}

inline Dominance tilde_dominates(const MonotoneFunction& f, const MonotoneFunction& g) {
  static const std::vector<double> grid = log_grid();
  return tilde_dominates(f, g, grid);
}

// Text tokens: "sld", "rld", "wy", "wyd:<beta>".

inline std::string to_token(const MonotoneFunction& f) {
  switch (f.kind) {
    case Family::SLD:
      return "sld";
    case Family::RLD:
      return "rld";
    case Family::WY:
      return "wy";
    case Family::WYD: {
      char buf[64];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, f.beta);
      return "wyd:" + std::string(buf, end);
    }
  }
  return "?";
}

inline MonotoneFunction parse_function(std::string_view token) {
  if (token == "sld") return MonotoneFunction::sld();
  if (token == "rld") return MonotoneFunction::rld();
  if (token == "wy") return MonotoneFunction::wy();
  if (token.starts_with("wyd:")) {
    const std::string_view num = token.substr(4);
    double beta = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), beta);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty()) {
      throw ParameterError("malformed WYD parameter in token '" + std::string(token) + "'");
    }
    MonotoneFunction f = MonotoneFunction::wyd(beta);
    validate(f);
    return f;
  }
  throw ParameterError("unknown operator monotone function token '" + std::string(token) + "'");
}

/// One representative per family.
inline std::vector<MonotoneFunction> catalog() {
  return {MonotoneFunction::sld(), MonotoneFunction::rld(), MonotoneFunction::wy(),
          MonotoneFunction::wyd(0.25)};
}

inline std::vector<MonotoneFunction> regular_catalog() {
  std::vector<MonotoneFunction> out;
  for (const auto& f : catalog()) {
    if (is_regular(f)) out.push_back(f);
  }
  return out;
}

/// Comma separated list of tokens, or "all" for the full catalog.
inline std::vector<MonotoneFunction> parse_function_list(std::string_view list) {
  if (list == "all") return catalog();
  std::vector<MonotoneFunction> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    out.push_back(parse_function(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ParameterError("empty function list");
  return out;
}

}  // namespace qfivol

#endif  // QFIVOL_OMF_HPP
