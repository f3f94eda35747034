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


// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 8b       run only the named ones
//
// Exit status is 0 iff every selected criterion passes. Tolerances and trial
// counts below are fixed; they are the contract, not tuning knobs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "qfivol/campaign.hpp"
#include "qfivol/oracle.hpp"
#include "qfivol/random.hpp"
#include "qfivol/volumes.hpp"

using namespace qfivol;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// 1. Pairing identity.
Outcome identity_suite() {
  Stopwatch sw;
  double worst = 0.0;
  int checked = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    CounterRng rng(kSeed + 1, t);
    const int n = 2 + static_cast<int>(t % 7);
    const auto s = random_faithful_state(n, rng);
    const auto obs = random_observables(n, 2, rng);
    const double scale = std::max(1.0, std::abs(covariance(s, obs[0], obs[1])));
    for (const auto& f : regular_catalog()) {
      worst = std::max(worst, pairing_residual(f, s, obs[0], obs[1]) / scale);
      ++checked;
    }
  }
  const double secs = sw.seconds();
  return {worst <= 1e-9 && secs < 30.0,
          fmt("%.0f checks, max scaled residual %.3g (<= 1e-9), %.2f s (< 30 s)", checked, worst, secs)};
}

// 2. Main inequality.
Outcome main_inequality() {
  Stopwatch sw;
  double worst = 0.0;
  int failures = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    CounterRng rng(kSeed + 2, t);
    const int n = 2 + static_cast<int>(t % 5);
    const int count = 1 + static_cast<int>((t / 5) % 4);
    const auto s = random_faithful_state(n, rng);
    const auto obs = random_observables(n, count, rng);
    for (const auto& f : regular_catalog()) {
      const auto r = build_gram_report(f, s, obs);
      worst = std::max(worst, -r.F / r.scale());
      if (!check_main_inequality(r, 1e-9)) ++failures;
    }
  }
  const double secs = sw.seconds();
  return {failures == 0 && secs < 60.0,
          fmt("%.0f failures, max scaled violation %.3g, %.2f s (< 60 s)", failures, std::max(worst, 0.0), secs)};
}

// 3. Brute-force oracle against the determinant route.
Outcome oracle_equivalence() {
  Stopwatch sw;
  double worst_gap = 0.0;
  double worst_k = 0.0;
  double min_k = 0.0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    CounterRng rng(kSeed + 3, t);
    const int n = 2 + static_cast<int>(t % 2);
    const int count = 1 + static_cast<int>((t / 2) % 3);
    const auto s = random_faithful_state(n, rng);
    const auto obs = random_observables(n, count, rng);
    for (const auto& f : regular_catalog()) {
      const double fd = build_gram_report(f, s, obs).F;
      const auto o = F_bruteforce(f, s, obs);
      worst_gap = std::max(worst_gap, std::abs(fd - o.F) / std::max(1.0, std::abs(fd)));
      worst_k = std::max(worst_k, o.max_k_route_gap);
      min_k = std::min(min_k, o.min_k);
    }
  }
  const double secs = sw.seconds();
  return {worst_gap <= 1e-8 && worst_k <= 1e-10 && min_k >= -1e-12 && secs < 120.0,
          fmt("max F gap %.3g (<= 1e-8), max K route gap %.3g (<= 1e-10), min K %.3g, %.2f s", worst_gap,
              worst_k, min_k, secs)};
}

// 4. Equality condition, both directions.
Outcome equality_condition() {
  double worst_dep_f = 0.0;
  double worst_dep_vol = 0.0;
  double min_indep = INFINITY;
  int flag_errors = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    CounterRng rng(kSeed + 4, t);
    const int n = 2 + static_cast<int>(t % 4);
    const int count = 1 + static_cast<int>((t / 4) % 3);
    const auto s = random_faithful_state(n, rng);
    const ObservableSet dep = detail::dependent_observables(n, count, rng);
    ObservableSet indep = random_observables(n, count, rng);
    while (check_equality_condition(s, indep)) indep = random_observables(n, count, rng);
    if (!check_equality_condition(s, dep)) ++flag_errors;
    for (const auto& f : regular_catalog()) {
      const auto rd = build_gram_report(f, s, dep);
      worst_dep_f = std::max(worst_dep_f, std::abs(rd.F));
      worst_dep_vol = std::max(worst_dep_vol, rd.cov_vol);
      const auto ri = build_gram_report(f, s, indep);
      min_indep = std::min(min_indep, ri.F / (1e-12 * ri.scale()));
    }
  }
  return {worst_dep_f <= 1e-10 && worst_dep_vol <= 1e-10 && min_indep > 1.0 && flag_errors == 0,
          fmt("dependent: max |F| %.3g, max cov_vol %.3g; independent: min F/(1e-12 scale) %.3g; flag errors %.0f",
              worst_dep_f, worst_dep_vol, min_indep, flag_errors)};
}

// 5. Monotonicity in f.
Outcome monotonicity() {
  const auto fs = regular_catalog();
  bool sld_wy = tilde_dominates(MonotoneFunction::sld(), MonotoneFunction::wy()) == Dominance::F_LE_G;
  int pairs = 0;
  for (const auto& f : fs) {
    for (const auto& g : fs) {
      if (tilde_dominates(f, g) == Dominance::F_LE_G) ++pairs;
    }
  }
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    CounterRng rng(kSeed + 5, t);
    const int n = 2 + static_cast<int>(t % 5);
    const int count = 1 + static_cast<int>((t / 5) % 4);
    const auto s = random_faithful_state(n, rng);
    const auto obs = random_observables(n, count, rng);
    std::vector<double> v;
    for (const auto& f : fs) v.push_back(build_gram_report(f, s, obs).qfi_vol);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (tilde_dominates(fs[i], fs[j]) == Dominance::F_LE_G) worst = std::max(worst, v[j] - v[i]);
      }
    }
  }
  return {sld_wy && pairs > 0 && worst <= 1e-10,
          fmt("(sld, wy) ordered: %.0f; ordered pairs %.0f; max V(g) - V(f) %.3g (<= 1e-10)", sld_wy, pairs,
              std::max(worst, 0.0))};
}

// 6. Pauli-chain counterexample.
Outcome pauli_chain() {
  const std::vector<double> l = {0.25, 0.75};
  const auto ce = pauli_chain_counterexample(l);
  const auto sld = MonotoneFunction::sld();
  const double i1 = skew_information(sld, ce.state, ce.obs[0]);
  const double i2 = skew_information(sld, ce.state, ce.obs[1]);
  const double rdet = robertson_bound(ce.state, ce.obs).det;
  bool ok = std::abs(i1 - 0.25) <= 1e-12 && std::abs(i2 - 0.25) <= 1e-12 && std::abs(rdet - 0.25) <= 1e-12 &&
            std::abs(i1 * i2 - 0.0625) <= 1e-12 && i1 * i2 < rdet;
  double worst = 0.0;
  int strict_failures = 0;
  for (int count : {2, 4, 6}) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      CounterRng rng(kSeed + 6, 100 * static_cast<std::uint64_t>(count) + t);
      const auto lam = spaced_eigenvalues(count, rng);
      const auto c = pauli_chain_counterexample(lam);
      const double formula = pauli_chain_robertson_formula(lam);
      for (const auto& f : regular_catalog()) {
        const auto r = build_gram_report(f, c.state, c.obs);
        worst = std::max(worst, std::abs(r.robertson_det - formula));
        double product = 1.0;
        for (const auto& a : c.obs) product *= skew_information(f, c.state, a);
        if (!(product < r.robertson_det) || !(r.qfi_det < r.robertson_det)) ++strict_failures;
      }
    }
  }
  ok = ok && worst <= 1e-10 && strict_failures == 0;
  return {ok, fmt("I1 %.15g, I2 %.15g, robertson det %.15g; general spectra max |det - formula| %.3g", i1, i2, rdet,
                  worst) +
                  fmt(", strict failures %.0f", strict_failures)};
}

// 7. Commuting counterexample.
Outcome commuting() {
  double worst_entry = 0.0;
  double min_qfi = INFINITY;
  bool det_zero = true;
  for (int count : {2, 4, 6}) {
    const auto ce = commuting_counterexample(4, count, kSeed + 7);
    for (const auto& f : regular_catalog()) {
      const auto r = build_gram_report(f, ce.state, ce.obs);
      worst_entry = std::max(worst_entry, r.robertson.cwiseAbs().maxCoeff());
      det_zero = det_zero && r.robertson_det == 0.0;
      min_qfi = std::min(min_qfi, r.qfi_det);
    }
  }
  return {worst_entry <= 1e-14 && det_zero && min_qfi > 1e-12,
          fmt("max robertson entry %.3g (<= 1e-14), det == 0: %.0f, min qfi det %.3g (> 1e-12)", worst_entry,
              det_zero, min_qfi)};
}

// 8a. Rank-one states.
Outcome pure_states() {
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    CounterRng rng(kSeed + 8, t);
    const int n = 2 + static_cast<int>(t % 5);
    const int count = 1 + static_cast<int>((t / 5) % 4);
    const auto s = random_pure_state(n, rng);
    const auto obs = random_observables(n, count, rng);
    for (const auto& f : regular_catalog()) worst = std::max(worst, std::abs(build_gram_report(f, s, obs).F));
  }
  return {worst <= 1e-10, fmt("max |F| on rank-one states %.3g (<= 1e-10)", worst)};
}

// 8b. Interpolation (1 - eps) P + eps I/n toward the pure state.
Outcome pure_limit() {
  const double eps_list[] = {1e-2, 1e-4, 1e-6};
  double worst_final = 0.0;
  int non_monotone = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    CounterRng rng(kSeed + 9, t);
    const int n = 2 + static_cast<int>(t % 3);
    const int count = 1 + static_cast<int>((t / 3) % 3);
    const auto p = random_pure_state(n, rng);
    const auto obs = random_observables(n, count, rng);
    for (const auto& f : regular_catalog()) {
      double prev = INFINITY;
      for (double eps : eps_list) {
        RVector ev = ((1.0 - eps) * p.eigenvalues().array() + eps / n).matrix();
        const SpectralState s(std::move(ev), p.eigenvectors());
        const double fe = build_gram_report(f, s, obs).F;
        if (!(fe < prev)) ++non_monotone;
        prev = fe;
      }
      worst_final = std::max(worst_final, prev);
    }
  }
  return {worst_final < 1e-8 && non_monotone == 0,
          fmt("max F at eps = 1e-6: %.3g (< 1e-8); non-monotone sequences %.0f", worst_final, non_monotone)};
}

// 9. H function properties.
Outcome h_function() {
  const auto fs = regular_catalog();
  const auto sld = MonotoneFunction::sld();
  int failures = 0;
  for (std::uint64_t t = 0; t < 10000; ++t) {
    CounterRng rng(kSeed + 10, t);
    const int count = 1 + static_cast<int>(t % 4);
    std::vector<double> xs(count), ys(count);
    for (int j = 0; j < count; ++j) {
      xs[j] = std::exp(6.0 * (rng.uniform() - 0.5));
      ys[j] = std::exp(6.0 * (rng.uniform() - 0.5));
    }
    std::vector<int> perm(count);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = count - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    std::vector<double> px(count), py(count);
    double upper = 1.0;
    for (int j = 0; j < count; ++j) {
      px[j] = xs[perm[j]];
      py[j] = ys[perm[j]];
      upper *= 0.5 * (xs[j] + ys[j]);
    }
    const double hs = H_value(sld, xs, ys);
    if (!(hs > 0.0)) ++failures;
    for (const auto& f : fs) {
      const double h = H_value(f, xs, ys);
      if (!(hs <= h + 1e-12)) ++failures;
      if (!(h <= upper + 1e-12)) ++failures;
      if (!(std::abs(H_value(f, px, py) - h) <= 1e-12 * std::max(1.0, h))) ++failures;
    }
  }
  return {failures == 0, fmt("10000 tuples, %.0f violations (bounds at 1e-12, symmetry at 1e-12 relative)", failures)};
}

// 10. Exchange identities and the row-permutation sign.
Outcome structural() {
  int failures = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    CounterRng rng(kSeed + 11, t);
    const int rows = 1 + static_cast<int>(t % 4);
    const int cols = 1 + static_cast<int>((t / 4) % 4);
    RMatrix table(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) table(i, j) = rng.uniform();
    }
    if (!product_sum_exchange_check(table)) ++failures;
    const int k = 2 + static_cast<int>(t % 4);
    RMatrix e(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) e(i, j) = rng.normal();
    }
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = k - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    if (!row_permutation_sign_check(e, perm)) ++failures;
  }
  return {failures == 0, fmt("200 checks, %.0f failures", failures)};
}

struct Criterion {
  const char* id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"1", "pairing identity", identity_suite},
      {"2", "main inequality", main_inequality},
      {"3", "brute-force oracle", oracle_equivalence},
      {"4", "equality condition", equality_condition},
      {"5", "monotonicity", monotonicity},
      {"6", "pauli chain", pauli_chain},
      {"7", "commuting observables", commuting},
      {"8a", "rank-one states", pure_states},
      {"8b", "pure-state limit", pure_limit},
      {"9", "H function", h_function},
      {"10", "structural identities", structural},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool all_pass = true;
  int ran = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "acceptance: no criterion matched\n");
    return 2;
  }
  return all_pass ? 0 : 1;
}
