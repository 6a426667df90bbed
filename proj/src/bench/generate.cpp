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

#include "qeo/bench/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qeo/solvers/sample_set.hpp"

namespace qeo {

namespace {

void check_range(const Range& r, const char* name, bool positive) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi || r.lo < 0.0 || (positive && !(r.lo > 0.0))) {
    throw std::invalid_argument(std::string("invalid range for ") + name);
  }
}

double draw(const Range& r, std::mt19937_64& rng) {
  if (r.lo == r.hi) return r.lo;
  return std::uniform_real_distribution<double>(r.lo, r.hi)(rng);
}

std::size_t draw_index(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

constexpr int kMaxDraws = 100000;

}  // namespace

void GenSpec::validate() const {
  if (family != "uc" && family != "hens") throw std::invalid_argument("family must be uc or hens");
  if (grids < 1) throw std::invalid_argument("grid count N must be >= 1");
  if (family == "uc") {
    if (units < 1) throw std::invalid_argument("need at least one unit");
    check_range(a, "a", false);
    check_range(b, "b", false);
    check_range(c, "c", false);
    check_range(p_min, "p_min", false);
    check_range(span, "span", true);
    if (!(quantum > 0.0) || !std::isfinite(quantum)) throw std::invalid_argument("quantum must be positive");
  } else {
    if (sources < 1 || sinks < 1) throw std::invalid_argument("need at least one source and one sink");
    check_range(cost, "cost", false);
    if (!(heat_unit > 0.0) || !std::isfinite(heat_unit)) throw std::invalid_argument("heat unit must be positive");
  }
}

nlohmann::json genspec_to_json(const GenSpec& s) {
  auto range = [](const Range& r) { return nlohmann::json::array({r.lo, r.hi}); };
  nlohmann::json doc = {{"family", s.family}, {"seed", s.seed}, {"grids", s.grids}};
  if (s.family == "uc") {
    doc.update({{"units", s.units}, {"a", range(s.a)}, {"b", range(s.b)}, {"c", range(s.c)},
                {"p_min", range(s.p_min)}, {"span", range(s.span)}, {"quantum", s.quantum}});
  } else {
    doc.update({{"sources", s.sources}, {"sinks", s.sinks}, {"cost", range(s.cost)}, {"heat_unit", s.heat_unit}});
  }
  return doc;
}

GenSpec genspec_from_json(const nlohmann::json& doc) {
  GenSpec s;
  auto range = [&](const char* key, Range& r) {
    if (!doc.contains(key)) return;
    const auto v = doc.at(key).get<std::vector<double>>();
    if (v.size() != 2) throw std::invalid_argument(std::string(key) + " must be [lo, hi]");
    r = {v[0], v[1]};
  };
  try {
    s.family = doc.value("family", "");
    s.seed = doc.value("seed", s.seed);
    s.grids = doc.value("grids", s.grids);
    s.units = doc.value("units", s.units);
    s.sources = doc.value("sources", s.sources);
    s.sinks = doc.value("sinks", s.sinks);
    s.quantum = doc.value("quantum", s.quantum);
    s.heat_unit = doc.value("heat_unit", s.heat_unit);
    range("a", s.a);
    range("b", s.b);
    range("c", s.c);
    range("p_min", s.p_min);
    range("span", s.span);
    range("cost", s.cost);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed generator spec: ") + e.what());
  }
  return s;
}

UcInstance gen_uc(const GenSpec& spec) {
  if (spec.family != "uc") throw std::invalid_argument("gen_uc needs family uc");
  spec.validate();
  auto rng = make_stream(spec.seed, 0);
  const double q = spec.quantum;
  const double n_grid = static_cast<double>(spec.grids);

  const auto k_lo = static_cast<std::size_t>(std::ceil(spec.p_min.lo / q - 1e-9));
  const auto k_hi = static_cast<std::size_t>(std::floor(spec.p_min.hi / q + 1e-9));
  if (k_lo > k_hi) throw std::invalid_argument("p_min range holds no multiple of the quantum");

  UcInstance inst;
  std::vector<double> step(spec.units);
  for (std::size_t i = 0; i < spec.units; ++i) {
    UcUnit u;
    u.a = draw(spec.a, rng);
    u.b = draw(spec.b, rng);
    u.c = draw(spec.c, rng);
    u.p_min = q * static_cast<double>(draw_index(k_lo, k_hi, rng));
    if (n_grid * q > spec.span.hi) {
      step[i] = spec.span.hi / n_grid;
    } else {
      const auto m_hi = static_cast<std::size_t>(std::floor(spec.span.hi / (n_grid * q) + 1e-9));
      const auto m_lo = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(spec.span.lo / (n_grid * q) - 1e-9)));
      step[i] = q * static_cast<double>(m_lo > m_hi ? m_hi : draw_index(m_lo, m_hi, rng));
    }
    u.p_max = u.p_min + n_grid * step[i];
    inst.units.push_back(u);
  }

  double max_min = 0.0;
  double total_max = 0.0;
  for (const auto& u : inst.units) {
    max_min = std::max(max_min, u.p_min);
    total_max += u.p_max;
  }
  std::optional<double> load;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    double sum = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < spec.units; ++i) {
      if (rng() >> 63) continue;
      any = true;
      sum += inst.units[i].p_min + step[i] * static_cast<double>(draw_index(0, spec.grids, rng));
    }
    if (!any) continue;
    load = sum;
    if (sum >= max_min && sum <= 0.8 * total_max) break;
  }
  if (!load) throw std::invalid_argument("could not plant a load");
  inst.load = *load;
  inst.validate();
  return inst;
}

HensInstance gen_hens(const GenSpec& spec) {
  if (spec.family != "hens") throw std::invalid_argument("gen_hens needs family hens");
  spec.validate();
  auto rng = make_stream(spec.seed, 0);
  const std::size_t m = spec.sources, n = spec.sinks;
  std::vector<std::size_t> q(m * n), s(m), d(n);
  bool found = false;
  for (int attempt = 0; attempt < kMaxDraws && !found; ++attempt) {
    std::fill(s.begin(), s.end(), 0);
    std::fill(d.begin(), d.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        q[i * n + j] = (rng() >> 63) ? draw_index(1, spec.grids, rng) : 0;
        s[i] += q[i * n + j];
        d[j] += q[i * n + j];
      }
    }
    found = std::find(s.begin(), s.end(), 0) == s.end() && std::find(d.begin(), d.end(), 0) == d.end();
    // min(S_i, D_j) | N puts every integer flow on every pair's grid.
    for (std::size_t i = 0; i < m && found; ++i) {
      for (std::size_t j = 0; j < n && found; ++j) found = spec.grids % std::min(s[i], d[j]) == 0;
    }
  }
  if (!found) throw std::invalid_argument("could not build a grid-representable flow for this N");

  HensInstance inst;
  for (auto v : s) inst.supply.push_back(spec.heat_unit * static_cast<double>(v));
  for (auto v : d) inst.demand.push_back(spec.heat_unit * static_cast<double>(v));
  inst.cost = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) inst.cost(i, j) = draw(spec.cost, rng);
  }
  inst.validate();
  return inst;
}

}  // namespace qeo
