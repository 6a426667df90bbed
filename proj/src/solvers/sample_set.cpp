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

#include "qeo/solvers/sample_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qeo/core/serialize.hpp"

namespace qeo {

SampleSet SampleSet::from_assignments(const Qubo& model, const std::vector<Assignment>& samples,
                                      SampleMeta meta) {
  std::vector<SampleRecord> records;
  records.reserve(samples.size());
  for (const auto& x : samples) records.push_back({x, model.energy(x), 1});
  return from_records(std::move(records), std::move(meta));
}

SampleSet SampleSet::from_records(std::vector<SampleRecord> records, SampleMeta meta) {
  std::map<Assignment, SampleRecord> merged;
  for (auto& r : records) {
    auto [it, inserted] = merged.try_emplace(r.bits, r);
    if (!inserted) it->second.occurrences += r.occurrences;
  }
  SampleSet set;
  set.meta_ = std::move(meta);
  set.records_.reserve(merged.size());
  for (auto& kv : merged) set.records_.push_back(std::move(kv.second));
  std::stable_sort(set.records_.begin(), set.records_.end(), [](const SampleRecord& a, const SampleRecord& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.bits < b.bits;
  });
  return set;
}

const SampleRecord& SampleSet::best() const {
  if (records_.empty()) throw std::logic_error("empty sample set");
  return records_.front();
}

std::size_t SampleSet::total_occurrences() const {
  std::size_t total = 0;
  for (const auto& r : records_) total += r.occurrences;
  return total;
}

nlohmann::json SampleSet::to_json(bool include_timing) const {
  nlohmann::json meta = {{"solver", meta_.solver}, {"seed", meta_.seed}, {"reads", meta_.reads}};
  if (include_timing) meta["elapsed_s"] = meta_.elapsed_s;
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records_) {
    recs.push_back({{"bits", bits_to_string(r.bits)}, {"energy", r.energy}, {"occurrences", r.occurrences}});
  }
  return {{"meta", std::move(meta)}, {"records", std::move(recs)}};
}

SampleSet SampleSet::from_json(const nlohmann::json& doc) {
  SampleMeta meta;
  const auto& m = doc.at("meta");
  meta.solver = m.value("solver", "");
  meta.seed = m.value("seed", std::uint64_t{0});
  meta.reads = m.value("reads", std::size_t{0});
  meta.elapsed_s = m.value("elapsed_s", 0.0);
  std::vector<SampleRecord> records;
  for (const auto& r : doc.at("records")) {
    records.push_back({bits_from_string(r.at("bits").get<std::string>()), r.at("energy").get<double>(),
                       r.at("occurrences").get<std::size_t>()});
  }
  return from_records(std::move(records), std::move(meta));
}

SampleSet merge(const SampleSet& a, const SampleSet& b) {
  std::vector<SampleRecord> all = a.records();
  all.insert(all.end(), b.records().begin(), b.records().end());
  SampleMeta meta = a.meta();
  meta.reads += b.meta().reads;
  meta.elapsed_s += b.meta().elapsed_s;
  return SampleSet::from_records(std::move(all), std::move(meta));
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
  // Seed is scrambled before the xor so (s, r) and (s ^ 1, r ^ 1) differ.
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

Assignment random_assignment(std::size_t n, std::mt19937_64& rng) {
  Assignment x(n);
  for (auto& b : x) b = static_cast<std::uint8_t>(rng() >> 63);
  return x;
}

FlipState::FlipState(const Adjacency& adj, Assignment x) : adj_(&adj) { reset(std::move(x)); }

void FlipState::reset(Assignment x) {
  x_ = std::move(x);
  field_ = adj_->linear;
  for (Index i = 0; i < x_.size(); ++i) {
    if (!x_[i]) continue;
    for (const auto& [j, q] : adj_->neighbours[i]) field_[j] += q;
  }
}

double FlipState::flip(Index i) {
  const double d = delta(i);
  const double sign = x_[i] ? -1.0 : 1.0;
  x_[i] ^= 1U;
  for (const auto& [j, q] : adj_->neighbours[i]) field_[j] += sign * q;
  return d;
}

}  // namespace qeo
