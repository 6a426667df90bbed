// Copyright 2026 The qeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qeo/bench/bench.hpp"

namespace qeo {

std::optional<double> deviation_pct(bool feasible, double objective, std::optional<double> reference) {
  if (!feasible || !reference || !(*reference > 0.0) || !std::isfinite(objective)) return std::nullopt;
  return 100.0 * (objective - *reference) / *reference;
}

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : ""; }

double parse_double(const std::string& field, std::size_t line) {
  if (field.empty()) return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

std::optional<double> parse_optional(const std::string& field, std::size_t line) {
  if (field.empty()) return std::nullopt;
  return parse_double(field, line);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string report_to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << kReportHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.instance << ',' << r.family << ',' << r.solver << ',' << r.seed << ',' << fmt(r.qubo_energy) << ','
        << fmt(r.objective) << ',' << (r.feasible ? 1 : 0) << ',' << fmt(r.reference) << ',' << fmt(r.deviation_pct)
        << ',' << fmt(r.elapsed_s) << '\n';
  }
  return out.str();
}

BenchReport report_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader) throw std::invalid_argument("report header does not match");
  BenchReport report;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 10) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 10 fields");
    BenchRow r;
    r.instance = f[0];
    r.family = f[1];
    r.solver = f[2];
    try {
      r.seed = std::stoull(f[3]);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad seed");
    }
    r.qubo_energy = parse_double(f[4], lineno);
    r.objective = parse_double(f[5], lineno);
    if (f[6] != "0" && f[6] != "1") throw std::invalid_argument("line " + std::to_string(lineno) + ": bad flag");
    r.feasible = f[6] == "1";
    r.reference = parse_optional(f[7], lineno);
    r.deviation_pct = parse_optional(f[8], lineno);
    r.elapsed_s = parse_double(f[9], lineno);
    report.rows.push_back(std::move(r));
  }
  return report;
}

std::vector<FamilyStats> deviation_stats(const BenchReport& report) {
  std::map<std::string, FamilyStats> by_family;
  std::map<std::string, double> sums;
  for (const auto& r : report.rows) {
    auto& s = by_family[r.family];
    s.family = r.family;
    ++s.rows;
    if (!r.feasible) {
      ++s.infeasible;
      continue;
    }
    ++s.feasible;
    if (!r.deviation_pct) continue;
    const double d = *r.deviation_pct;
    if (s.with_deviation == 0) {
      s.min_pct = s.max_pct = d;
    } else {
      s.min_pct = std::min(s.min_pct, d);
      s.max_pct = std::max(s.max_pct, d);
    }
    ++s.with_deviation;
    sums[r.family] += d;
  }
  std::vector<FamilyStats> out;
  for (auto& [family, s] : by_family) {
    if (s.with_deviation) s.mean_pct = sums[family] / static_cast<double>(s.with_deviation);
    s.feasibility_rate = static_cast<double>(s.feasible) / static_cast<double>(s.rows);
    out.push_back(s);
  }
  return out;
}

std::string stats_to_text(const std::vector<FamilyStats>& stats) {
  std::ostringstream out;
  out << "family rows feasible infeasible min_pct max_pct mean_pct feasibility_rate\n";
  for (const auto& s : stats) {
    out << s.family << ' ' << s.rows << ' ' << s.feasible << ' ' << s.infeasible << ' ';
    if (s.with_deviation) {
      out << fmt(s.min_pct) << ' ' << fmt(s.max_pct) << ' ' << fmt(s.mean_pct);
    } else {
      out << "- - -";
    }
    out << ' ' << fmt(s.feasibility_rate) << '\n';
  }
  return out.str();
}

std::string deviation_histogram_csv(const BenchReport& report, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("bin width must be positive");
  std::map<std::pair<std::string, long long>, std::size_t> bins;
  for (const auto& r : report.rows) {
    if (!r.deviation_pct) continue;
    ++bins[{r.family, static_cast<long long>(std::floor(*r.deviation_pct / width))}];
  }
  std::ostringstream out;
  out << "family,bin_lo,bin_hi,count\n";
  for (const auto& [key, count] : bins) {
    const double lo = static_cast<double>(key.second) * width;
    out << key.first << ',' << fmt(lo) << ',' << fmt(lo + width) << ',' << count << '\n';
  }
  return out.str();
}

}  // namespace qeo
