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

// JSON and CSV emission for campaign reports.

#ifndef QFIVOL_REPORT_HPP
#define QFIVOL_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "qfivol/campaign.hpp"

namespace qfivol {

class IoError : public Error {
 public:
  using Error::Error;
};

enum class ReportFormat { JSON, CSV };

inline ReportFormat parse_format(std::string_view s) {
  if (s == "json") return ReportFormat::JSON;
  if (s == "csv") return ReportFormat::CSV;
  throw ParameterError("unknown format '" + std::string(s) + "' (expected json or csv)");
}

namespace detail {

inline nlohmann::ordered_json number_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

inline double number_from(const nlohmann::ordered_json& j) {
  return j.is_null() ? kNaN : j.get<double>();
}

inline std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

/// f column: token, "@case" when the mode has cases, "mode/" prefix when the
/// report mixes modes.
inline std::string csv_f_column(const TrialRecord& r, bool multi_mode) {
  std::string s = r.f;
  if (!r.case_label.empty()) s += "@" + r.case_label;
  if (multi_mode) s = std::string(to_string(r.mode)) + "/" + s;
  return s;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const TrialConfig& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["N"] = c.count;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  auto& fl = j["f"] = nlohmann::ordered_json::array();
  for (const auto& f : c.functions) fl.push_back(to_token(f));
  auto& ml = j["modes"] = nlohmann::ordered_json::array();
  for (Mode m : c.modes) ml.push_back(to_string(m));
  if (c.tol) {
    j["tol"] = *c.tol;
  } else {
    j["tol"] = nullptr;
  }
  j["floor"] = c.min_eig_floor;
  j["replay"] = c.replay ? nlohmann::ordered_json(*c.replay) : nlohmann::ordered_json(nullptr);
  if (c.lambdas) j["lambdas"] = *c.lambdas;
  return j;
}

inline nlohmann::ordered_json to_json(const TrialRecord& r) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(r.mode);
  j["seed_offset"] = r.seed_offset;
  j["n"] = r.n;
  j["N"] = r.count;
  j["f"] = r.f;
  if (!r.case_label.empty()) j["case"] = r.case_label;
  j["F_det"] = detail::number_or_null(r.F_det);
  j["F_oracle"] = detail::number_or_null(r.F_oracle);
  j["cov_vol"] = detail::number_or_null(r.cov_vol);
  j["qfi_vol"] = detail::number_or_null(r.qfi_vol);
  j["robertson_det"] = detail::number_or_null(r.robertson_det);
  j["residual"] = detail::number_or_null(r.residual);
  j["pass"] = r.pass;
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.extras.empty()) {
    auto& ex = j["extras"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.extras) ex[k] = detail::number_or_null(v);
  }
  return j;
}

inline nlohmann::ordered_json to_json(const Aggregate& a) {
  return {{"trials", a.trials},
          {"passed_trials", a.passed_trials},
          {"records", a.records},
          {"passed_records", a.passed_records},
          {"max_residual", detail::number_or_null(a.max_residual)},
          {"min_F", detail::number_or_null(a.min_F)},
          {"wall_time_s", a.wall_time_s}};
}

inline nlohmann::ordered_json to_json(const TrialReport& rep) {
  nlohmann::ordered_json j;
  j["config"] = to_json(rep.config);
  auto& t = j["trials"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.records) t.push_back(to_json(r));
  j["aggregate"] = to_json(rep.aggregate);
  return j;
}

inline TrialRecord record_from_json(const nlohmann::ordered_json& j) {
  TrialRecord r;
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.seed_offset = j.at("seed_offset").get<std::uint64_t>();
  r.n = j.at("n").get<int>();
  r.count = j.at("N").get<int>();
  r.f = j.at("f").get<std::string>();
  r.case_label = j.value("case", "");
  r.F_det = detail::number_from(j.at("F_det"));
  r.F_oracle = detail::number_from(j.at("F_oracle"));
  r.cov_vol = detail::number_from(j.at("cov_vol"));
  r.qfi_vol = detail::number_from(j.at("qfi_vol"));
  r.robertson_det = detail::number_from(j.at("robertson_det"));
  r.residual = detail::number_from(j.at("residual"));
  r.pass = j.at("pass").get<bool>();
  r.error = j.value("error", "");
  r.note = j.value("note", "");
  if (auto it = j.find("extras"); it != j.end()) {
    for (const auto& [k, v] : it->items()) r.extras.emplace_back(k, detail::number_from(v));
  }
  return r;
}

/// Parses the records and aggregate of an emitted JSON report. The config
/// echo is informational and is not parsed back.
inline TrialReport report_from_json(const nlohmann::ordered_json& j) {
  TrialReport rep;
  for (const auto& t : j.at("trials")) rep.records.push_back(record_from_json(t));
  const auto& a = j.at("aggregate");
  rep.aggregate.trials = a.at("trials").get<std::size_t>();
  rep.aggregate.passed_trials = a.at("passed_trials").get<std::size_t>();
  rep.aggregate.records = a.at("records").get<std::size_t>();
  rep.aggregate.passed_records = a.at("passed_records").get<std::size_t>();
  rep.aggregate.max_residual = detail::number_from(a.at("max_residual"));
  rep.aggregate.min_F = detail::number_from(a.at("min_F"));
  rep.aggregate.wall_time_s = a.at("wall_time_s").get<double>();
  return rep;
}

inline void write_csv(const TrialReport& rep, std::ostream& os) {
  bool multi = rep.config.modes.size() > 1;
  os << "seed_offset,f,F_det,F_oracle,cov_vol,qfi_vol,robertson_det,residual,pass\n";
  for (const auto& r : rep.records) {
    os << r.seed_offset << ',' << detail::csv_field(detail::csv_f_column(r, multi)) << ','
       << detail::csv_number(r.F_det) << ',' << detail::csv_number(r.F_oracle) << ','
       << detail::csv_number(r.cov_vol) << ',' << detail::csv_number(r.qfi_vol) << ','
       << detail::csv_number(r.robertson_det) << ',' << detail::csv_number(r.residual) << ','
       << (r.pass ? "true" : "false") << '\n';
  }
}

inline void write_json(const TrialReport& rep, std::ostream& os) { os << to_json(rep).dump(2) << '\n'; }

inline void write_report(const TrialReport& rep, ReportFormat format, std::ostream& os) {
  if (format == ReportFormat::JSON) {
    write_json(rep, os);
  } else {
    write_csv(rep, os);
  }
}

/// Writes to `path`, or to stdout when path is "-".
inline void emit_report(const TrialReport& rep, ReportFormat format, const std::string& path) {
  if (path == "-") {
    write_report(rep, format, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_report(rep, format, out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline std::string report_string(const TrialReport& rep, ReportFormat format) {
  std::ostringstream os;
  write_report(rep, format, os);
  return os.str();
}

}  // namespace qfivol

#endif  // QFIVOL_REPORT_HPP
