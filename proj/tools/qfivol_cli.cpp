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


// qfivol: seeded verification campaigns from the command line.
//
//   qfivol verify --mode inequality --n 4 --N 3 --trials 200 --f all
//   qfivol verify --mode pauli_chain --lambdas 0.25,0.75 --f sld --format json
//
// Exit status: 0 when every record passes, 1 on any failing record, 2 on a
// configuration or I/O error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfivol/campaign.hpp"
#include "qfivol/report.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_lambdas(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split_list(s)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw qfivol::ParameterError("malformed --lambdas entry '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw qfivol::ParameterError("--lambdas is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volume uncertainty relation verification harness"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "run a seeded verification campaign");

  std::string modes = "inequality";
  int n = 3;
  int count = 2;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string functions = "all";
  std::optional<double> tol;
  double floor = 1e-3;
  std::string format = "csv";
  std::string out = "-";
  std::optional<std::uint64_t> replay;
  std::string lambdas;

  verify->add_option("--mode", modes, "comma separated modes: inequality, identity, oracle, "
                     "monotonicity, equality, pauli_chain, commuting, pure_limit");
  verify->add_option("--n", n, "Hilbert space dimension");
  verify->add_option("--N", count, "number of observables");
  verify->add_option("--trials", trials, "number of trials");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--f", functions, "function tokens (sld,wy,wyd:0.25) or 'all'");
  verify->add_option("--tol", tol, "tolerance (default depends on mode)");
  verify->add_option("--floor", floor, "minimum eigenvalue of random states");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out, "output path, '-' for stdout");
  verify->add_option("--replay", replay, "run only this seed offset");
  verify->add_option("--lambdas", lambdas, "pauli_chain spectrum, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  }

  qfivol::TrialReport report;
  qfivol::ReportFormat fmt{};
  try {
    qfivol::TrialConfig cfg;
    cfg.n = n;
    cfg.count = count;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.functions = functions == "all" ? qfivol::regular_catalog()
                                       : qfivol::parse_function_list(functions);
    cfg.tol = tol;
    cfg.min_eig_floor = floor;
    cfg.modes.clear();
    for (const auto& m : split_list(modes)) cfg.modes.push_back(qfivol::parse_mode(m));
    if (cfg.modes.empty()) throw qfivol::ParameterError("--mode is empty");
    cfg.replay = replay;
    if (!lambdas.empty()) {
      cfg.lambdas = parse_lambdas(lambdas);
      cfg.n = cfg.count = static_cast<int>(cfg.lambdas->size());
    }
    cfg.threads = qfivol::threads_from_environment();
    fmt = qfivol::parse_format(format);
    report = qfivol::run_campaign(cfg);
  } catch (const std::exception& e) {
    std::cerr << "qfivol: configuration error: " << e.what() << '\n';
    return 2;
  }

  try {
    qfivol::emit_report(report, fmt, out);
  } catch (const std::exception& e) {
    std::cerr << "qfivol: " << e.what() << '\n';
    return 2;
  }

  for (const auto& r : report.records) {
    if (r.pass) continue;
    std::cerr << "FAIL mode=" << qfivol::to_string(r.mode) << " seed=" << seed
              << " seed_offset=" << r.seed_offset << " n=" << r.n << " N=" << r.count
              << " f=" << r.f;
    if (!r.case_label.empty()) std::cerr << " case=" << r.case_label;
    if (!r.error.empty()) std::cerr << " error=\"" << r.error << '"';
    std::cerr << "\n  replay: qfivol verify --mode " << qfivol::to_string(r.mode)
              << " --n " << n << " --N " << count << " --trials " << trials << " --seed " << seed
              << " --f " << functions << " --replay " << r.seed_offset << '\n';
  }
  return report.all_passed() ? 0 : 1;
}
