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

// Seeded verification campaigns over the inequality checks.
//
// Trial t of a campaign draws all of its randomness from CounterRng(seed, t),
// so a trial can be replayed in isolation and trials may run on any number of
// threads; records are always ordered by (mode, trial index, function).

#ifndef QFIVOL_CAMPAIGN_HPP
#define QFIVOL_CAMPAIGN_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qfivol/omf.hpp"
#include "qfivol/oracle.hpp"
#include "qfivol/random.hpp"
#include "qfivol/volumes.hpp"

namespace qfivol {

enum class Mode { INEQUALITY, IDENTITY, ORACLE, MONOTONICITY, EQUALITY, PAULI_CHAIN, COMMUTING, PURE_LIMIT };

inline constexpr Mode kAllModes[] = {Mode::INEQUALITY,   Mode::IDENTITY, Mode::ORACLE,
                                     Mode::MONOTONICITY, Mode::EQUALITY, Mode::PAULI_CHAIN,
                                     Mode::COMMUTING,    Mode::PURE_LIMIT};

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::INEQUALITY:
      return "inequality";
    case Mode::IDENTITY:
      return "identity";
    case Mode::ORACLE:
      return "oracle";
    case Mode::MONOTONICITY:
      return "monotonicity";
    case Mode::EQUALITY:
      return "equality";
    case Mode::PAULI_CHAIN:
      return "pauli_chain";
    case Mode::COMMUTING:
      return "commuting";
    case Mode::PURE_LIMIT:
      return "pure_limit";
  }
  return "?";
}

inline Mode parse_mode(std::string_view s) {
  std::string lower(s);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "pauli-chain") lower = "pauli_chain";
  if (lower == "pure-limit") lower = "pure_limit";
  for (Mode m : kAllModes) {
    if (lower == to_string(m)) return m;
  }
  throw ParameterError("unknown mode '" + std::string(s) + "'");
}

/// Tolerance used by a mode when the configuration leaves it unset.
inline double default_tolerance(Mode m) {
  switch (m) {
    case Mode::INEQUALITY:
    case Mode::IDENTITY:
      return 1e-9;
    case Mode::ORACLE:
      return 1e-8;
    case Mode::MONOTONICITY:
    case Mode::EQUALITY:
    case Mode::PURE_LIMIT:
      return 1e-10;
    case Mode::PAULI_CHAIN:
    case Mode::COMMUTING:
      return 1e-12;
  }
  return 1e-9;
}

struct TrialConfig {
  int n = 3;
  int count = 2;  // N
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<MonotoneFunction> functions = regular_catalog();
  std::optional<double> tol;
  double min_eig_floor = 1e-3;
  std::vector<Mode> modes = {Mode::INEQUALITY};
  std::optional<std::uint64_t> replay;
  /// Fixed spectrum for PAULI_CHAIN; otherwise drawn per trial.
  std::optional<std::vector<double>> lambdas;
  OracleBudget oracle_budget{};
  int threads = 1;

  double tolerance(Mode m) const { return tol.value_or(default_tolerance(m)); }
};

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TrialRecord {
  Mode mode = Mode::INEQUALITY;
  std::uint64_t seed_offset = 0;
  int n = 0;
  int count = 0;
  std::string f;
  std::string case_label;
  double F_det = kNaN;
  double F_oracle = kNaN;
  double cov_vol = kNaN;
  double qfi_vol = kNaN;
  double robertson_det = kNaN;
  double residual = 0.0;
  bool pass = false;
  std::string error;
  std::string note;
  std::vector<std::pair<std::string, double>> extras;
};

struct Aggregate {
  std::size_t trials = 0;
  std::size_t passed_trials = 0;
  std::size_t records = 0;
  std::size_t passed_records = 0;
  double max_residual = 0.0;
  double min_F = kNaN;
  double wall_time_s = 0.0;

  bool operator==(const Aggregate& o) const {
    const auto same = [](double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; };
    return trials == o.trials && passed_trials == o.passed_trials && records == o.records &&
           passed_records == o.passed_records && same(max_residual, o.max_residual) &&
           same(min_F, o.min_F);
  }
};

struct TrialReport {
  TrialConfig config;
  std::vector<TrialRecord> records;
  Aggregate aggregate;

  bool all_passed() const { return aggregate.passed_records == aggregate.records; }
};

/// Recomputes every aggregate field except wall time.
inline Aggregate compute_aggregate(const std::vector<TrialRecord>& records) {
  Aggregate a;
  a.records = records.size();
  std::vector<std::pair<int, std::uint64_t>> keys;
  std::vector<std::pair<int, std::uint64_t>> failed;
  for (const auto& r : records) {
    const std::pair<int, std::uint64_t> key{static_cast<int>(r.mode), r.seed_offset};
    keys.push_back(key);
    if (r.pass) {
      ++a.passed_records;
    } else {
      failed.push_back(key);
    }
    if (std::isfinite(r.residual)) a.max_residual = std::max(a.max_residual, r.residual);
    if (std::isfinite(r.F_det) && (std::isnan(a.min_F) || r.F_det < a.min_F)) a.min_F = r.F_det;
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::sort(failed.begin(), failed.end());
  failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
  a.trials = keys.size();
  a.passed_trials = keys.size() - failed.size();
  return a;
}

namespace detail {

inline TrialRecord make_record(Mode mode, std::uint64_t trial, const TrialConfig& cfg,
                               const MonotoneFunction& f) {
  TrialRecord r;
  r.mode = mode;
  r.seed_offset = trial;
  r.n = cfg.n;
  r.count = cfg.count;
  r.f = to_token(f);
  return r;
}

inline void fill_from_report(TrialRecord& r, const GramReport& g) {
  r.F_det = g.F;
  r.cov_vol = g.cov_vol;
  r.qfi_vol = g.qfi_vol;
  r.robertson_det = g.robertson_det;
}

/// A_N = sum c_j A_j + c_0 I over N-1 random observables (N = 1: A_1 = c_0 I).
inline ObservableSet dependent_observables(int n, int count, CounterRng& rng) {
  std::vector<CMatrix> mats;
  if (count > 1) mats = random_observables(n, count - 1, rng).matrices();
  CMatrix last = rng.normal() * CMatrix::Identity(n, n);
  for (const auto& m : mats) last += rng.normal() * m;
  mats.push_back(std::move(last));
  return ObservableSet(std::move(mats));
}

inline std::vector<TrialRecord> run_inequality(const TrialConfig& cfg, std::uint64_t t) {
  CounterRng rng(cfg.seed, t);
  const auto state = random_faithful_state(cfg.n, rng, cfg.min_eig_floor);
  const auto obs = random_observables(cfg.n, cfg.count, rng);
  const double tol = cfg.tolerance(Mode::INEQUALITY);
  std::vector<TrialRecord> out;
  for (const auto& f : cfg.functions) {
    auto r = make_record(Mode::INEQUALITY, t, cfg, f);
    const auto g = build_gram_report(f, state, obs);
    fill_from_report(r, g);
    r.residual = std::max(0.0, -g.F) / g.scale();
    r.pass = check_main_inequality(g, tol);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<TrialRecord> run_identity(const TrialConfig& cfg, std::uint64_t t) {
  CounterRng rng(cfg.seed, t);
  const auto state = random_faithful_state(cfg.n, rng, cfg.min_eig_floor);
  const auto obs = random_observables(cfg.n, 2, rng);
  const double tol = cfg.tolerance(Mode::IDENTITY);
  const double cov = covariance(state, obs[0], obs[1]);
  std::vector<TrialRecord> out;
  for (const auto& f : cfg.functions) {
    auto r = make_record(Mode::IDENTITY, t, cfg, f);
    r.count = 2;
    r.residual = pairing_residual(f, state, obs[0], obs[1]) / std::max(1.0, std::abs(cov));
    r.pass = r.residual <= tol;
    r.extras = {{"cov", cov}};
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<TrialRecord> run_oracle(const TrialConfig& cfg, std::uint64_t t) {
  CounterRng rng(cfg.seed, t);
  const auto state = random_faithful_state(cfg.n, rng, cfg.min_eig_floor);
  const auto obs = random_observables(cfg.n, cfg.count, rng);
  const double tol = cfg.tolerance(Mode::ORACLE);
  std::vector<TrialRecord> out;
  for (const auto& f : cfg.functions) {
    auto r = make_record(Mode::ORACLE, t, cfg, f);
    const auto g = build_gram_report(f, state, obs);
    fill_from_report(r, g);
    const auto o = F_bruteforce(f, state, obs, cfg.oracle_budget);
    r.F_oracle = o.F;
    r.residual = std::abs(g.F - o.F) / std::max(1.0, std::abs(g.F));
    r.extras = {{"k_route_gap", o.max_k_route_gap}, {"min_k", o.min_k}};
    r.pass = r.residual <= tol && o.max_k_route_gap <= 1e-10 && o.min_k >= -1e-12;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<TrialRecord> run_monotonicity(const TrialConfig& cfg, std::uint64_t t) {
  CounterRng rng(cfg.seed, t);
  const auto state = random_faithful_state(cfg.n, rng, cfg.min_eig_floor);
  const auto obs = random_observables(cfg.n, cfg.count, rng);
  const double tol = cfg.tolerance(Mode::MONOTONICITY);
  std::vector<GramReport> reports;
  for (const auto& f : cfg.functions) reports.push_back(build_gram_report(f, state, obs));
  std::vector<TrialRecord> out;
  for (std::size_t i = 0; i < cfg.functions.size(); ++i) {
    for (std::size_t j = 0; j < cfg.functions.size(); ++j) {
      if (i == j) continue;
      const auto& f = cfg.functions[i];
      const auto& g = cfg.functions[j];
      if (tilde_dominates(f, g) != Dominance::F_LE_G) continue;
      auto r = make_record(Mode::MONOTONICITY, t, cfg, f);
      r.f = to_token(f) + "|" + to_token(g);
      fill_from_report(r, reports[i]);
      r.residual = std::max(0.0, reports[j].qfi_vol - reports[i].qfi_vol);
      r.pass = r.residual <= tol;
      r.extras = {{"V_f", reports[i].qfi_vol}, {"V_g", reports[j].qfi_vol}};
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline std::vector<TrialRecord> run_equality(const TrialConfig& cfg, std::uint64_t t) {
  CounterRng rng(cfg.seed, t);
  const auto state = random_faithful_state(cfg.n, rng, cfg.min_eig_floor);
  const auto dependent = dependent_observables(cfg.n, cfg.count, rng);
  // Centered observables live in a real space of dimension n^2 - 1.
  std::optional<ObservableSet> independent;
  if (cfg.count <= cfg.n * cfg.n - 1) {
    for (int attempt = 0; attempt < 100 && !independent; ++attempt) {
      auto candidate = random_observables(cfg.n, cfg.count, rng);
      if (!check_equality_condition(state, candidate)) independent = std::move(candidate);
    }
  }
  const double tol = cfg.tolerance(Mode::EQUALITY);
  std::vector<TrialRecord> out;
  for (const auto& f : cfg.functions) {
    auto r = make_record(Mode::EQUALITY, t, cfg, f);
    r.case_label = "dependent";
    const auto g = build_gram_report(f, state, dependent);
    fill_from_report(r, g);
    r.residual = std::abs(g.F);
    r.pass = g.equality_flag && std::abs(g.F) <= tol && g.cov_vol <= tol;
    out.push_back(std::move(r));

    auto s = make_record(Mode::EQUALITY, t, cfg, f);
    s.case_label = "independent";
    if (independent) {
      const auto gi = build_gram_report(f, state, *independent);
      fill_from_report(s, gi);
      s.pass = !gi.equality_flag && gi.F > 1e-12 * gi.scale();
    } else {
      s.note = "no independent family exists for N > n^2 - 1";
      s.pass = cfg.count > cfg.n * cfg.n - 1;
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<TrialRecord> run_pauli_chain(const TrialConfig& cfg, std::uint64_t t) {
  CounterRng rng(cfg.seed, t);
  const std::vector<double> lambdas = cfg.lambdas ? *cfg.lambdas : spaced_eigenvalues(cfg.n, rng);
  const auto ce = pauli_chain_counterexample(lambdas);
  const double formula = pauli_chain_robertson_formula(lambdas);
  std::vector<TrialRecord> out;
  for (const auto& f : cfg.functions) {
    auto r = make_record(Mode::PAULI_CHAIN, t, cfg, f);
    r.n = r.count = static_cast<int>(lambdas.size());
    const auto g = build_gram_report(f, ce.state, ce.obs);
    fill_from_report(r, g);
    double product = 1.0;
    for (std::size_t j = 0; j < ce.obs.count(); ++j) {
      const double info = skew_information(f, ce.state, ce.obs[j]);
      product *= info;
      r.extras.emplace_back("I_" + std::to_string(j + 1), info);
    }
    r.extras.emplace_back("product", product);
    r.extras.emplace_back("formula", formula);
    r.residual = std::abs(g.robertson_det - formula);
    const bool strict = product < g.robertson_det;
    r.pass = strict && g.qfi_det < g.robertson_det && hadamard_check(g.qfi_gram) &&
             r.residual <= 1e-10;
    r.note = strict ? "standard bound exceeds QFI product" : "QFI product does not fall below standard bound";
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<TrialRecord> run_commuting(const TrialConfig& cfg, std::uint64_t t) {
  CounterRng rng(cfg.seed, t);
  const auto ce = commuting_counterexample(cfg.n, cfg.count, rng());
  std::vector<TrialRecord> out;
  for (const auto& f : cfg.functions) {
    auto r = make_record(Mode::COMMUTING, t, cfg, f);
    const auto g = build_gram_report(f, ce.state, ce.obs);
    fill_from_report(r, g);
    const double max_entry = g.robertson.size() ? g.robertson.cwiseAbs().maxCoeff() : 0.0;
    r.residual = max_entry;
    r.extras = {{"qfi_det", g.qfi_det}, {"max_robertson_entry", max_entry}};
    r.pass = max_entry <= 1e-14 && g.robertson_det == 0.0 && g.qfi_det > 1e-12;
    out.push_back(std::move(r));
  }
  return out;
}

inline constexpr double kPureLimitEps[] = {1e-2, 1e-4, 1e-6};

/// (1 - eps) rho + eps I/n, sharing the eigenvectors of rho.
inline SpectralState mixed_toward_identity(const SpectralState& state, double eps) {
  const double shift = eps / static_cast<double>(state.dim());
  RVector ev = ((1.0 - eps) * state.eigenvalues().array() + shift).matrix();
  return SpectralState(std::move(ev), state.eigenvectors());
}

inline std::vector<TrialRecord> run_pure_limit(const TrialConfig& cfg, std::uint64_t t) {
  CounterRng rng(cfg.seed, t);
  const auto pure = random_pure_state(cfg.n, rng);
  const auto obs = random_observables(cfg.n, cfg.count, rng);
  std::vector<SpectralState> mixed;
  for (double eps : kPureLimitEps) mixed.push_back(mixed_toward_identity(pure, eps));
  const double tol = cfg.tolerance(Mode::PURE_LIMIT);
  std::vector<TrialRecord> out;
  for (const auto& f : cfg.functions) {
    auto r = make_record(Mode::PURE_LIMIT, t, cfg, f);
    const auto g = build_gram_report(f, pure, obs);
    fill_from_report(r, g);
    r.residual = std::abs(g.F);
    bool decreasing = true;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < mixed.size(); ++i) {
      const double fe = build_gram_report(f, mixed[i], obs).F;
      r.extras.emplace_back("F_eps_" + std::to_string(i), fe);
      if (!(fe < prev) || fe < -tol) decreasing = false;
      prev = fe;
    }
    r.pass = r.residual <= tol && decreasing;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<TrialRecord> run_trial(Mode mode, const TrialConfig& cfg, std::uint64_t t) {
  switch (mode) {
    case Mode::INEQUALITY:
      return run_inequality(cfg, t);
    case Mode::IDENTITY:
      return run_identity(cfg, t);
    case Mode::ORACLE:
      return run_oracle(cfg, t);
    case Mode::MONOTONICITY:
      return run_monotonicity(cfg, t);
    case Mode::EQUALITY:
      return run_equality(cfg, t);
    case Mode::PAULI_CHAIN:
      return run_pauli_chain(cfg, t);
    case Mode::COMMUTING:
      return run_commuting(cfg, t);
    case Mode::PURE_LIMIT:
      return run_pure_limit(cfg, t);
  }
  return {};
}

/// One trial with sub-operation errors turned into a failing record.
inline std::vector<TrialRecord> run_trial_guarded(Mode mode, const TrialConfig& cfg,
                                                  std::uint64_t t) {
  try {
    return run_trial(mode, cfg, t);
  } catch (const std::exception& e) {
    TrialRecord r;
    r.mode = mode;
    r.seed_offset = t;
    r.n = cfg.n;
    r.count = cfg.count;
    std::string tokens;
    for (const auto& f : cfg.functions) tokens += (tokens.empty() ? "" : "+") + to_token(f);
    r.f = tokens;
    r.residual = kNaN;
    r.error = e.what();
    r.pass = false;
    return {r};
  }
}

}  // namespace detail

/// Rejects configurations no trial could run with.
inline void validate(const TrialConfig& cfg) {
  if (cfg.n < 2) throw ParameterError("n must be >= 2");
  if (cfg.count < 1) throw ParameterError("N must be >= 1");
  if (static_cast<std::size_t>(cfg.count) > kMaxObservables) throw ParameterError("N must be <= 8");
  if (cfg.trials < 1) throw ParameterError("trials must be >= 1");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ParameterError("tol must be positive");
  if (!(cfg.min_eig_floor >= 0.0) || cfg.min_eig_floor * cfg.n >= 1.0) {
    throw ParameterError("floor must lie in [0, 1/n)");
  }
  if (cfg.functions.empty()) throw ParameterError("function list is empty");
  for (const auto& f : cfg.functions) {
    if (!is_regular(f)) throw ParameterError(to_token(f) + " is not regular (f(0) = 0)");
  }
  if (cfg.replay && *cfg.replay >= static_cast<std::uint64_t>(cfg.trials)) {
    throw ParameterError("replay offset must be below the trial count");
  }
  for (Mode m : cfg.modes) {
    if (m == Mode::ORACLE) {
      const auto& b = cfg.oracle_budget;
      const bool caps_ok = b.override_caps || (cfg.n <= b.max_n && cfg.count <= b.max_count);
      if (!caps_ok || oracle_term_count(cfg.n, cfg.count) > b.max_terms) {
        throw ParameterError("oracle mode: n = " + std::to_string(cfg.n) + ", N = " +
                             std::to_string(cfg.count) + " exceeds the brute-force budget");
      }
    }
    if (m == Mode::PAULI_CHAIN) {
      const std::size_t size = cfg.lambdas ? cfg.lambdas->size() : static_cast<std::size_t>(cfg.n);
      if (size % 2 != 0 || size > kMaxObservables) {
        throw ParameterError("pauli_chain mode: need an even n = N <= 8");
      }
    }
    if (m == Mode::COMMUTING && cfg.n * (cfg.n - 1) / 2 < cfg.count) {
      throw ParameterError("commuting mode: need n(n-1)/2 >= N");
    }
  }
}

inline int threads_from_environment(const char* var = "QFIVOL_THREADS") {
  if (const char* v = std::getenv(var)) {
    const int k = std::atoi(v);
    if (k >= 1) return k;
  }
  return 1;
}

inline TrialReport run_campaign(const TrialConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  TrialReport report;
  report.config = cfg;
  std::vector<std::uint64_t> indices;
  if (cfg.replay) {
    indices.push_back(*cfg.replay);
  } else {
    for (int t = 0; t < cfg.trials; ++t) indices.push_back(static_cast<std::uint64_t>(t));
  }
  for (Mode mode : cfg.modes) {
    std::vector<std::vector<TrialRecord>> slots(indices.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i = next++; i < indices.size(); i = next++) {
        slots[i] = detail::run_trial_guarded(mode, cfg, indices[i]);
      }
    };
    const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(indices.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    }
    for (auto& s : slots) {
      for (auto& r : s) report.records.push_back(std::move(r));
    }
  }
  report.aggregate = compute_aggregate(report.records);
  report.aggregate.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qfivol

#endif  // QFIVOL_CAMPAIGN_HPP
