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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qeo/core/qubo.hpp"

namespace qeo {

struct SampleRecord {
  Assignment bits;
  double energy = 0.0;
  std::size_t occurrences = 1;

  bool operator==(const SampleRecord&) const = default;
};

struct SampleMeta {
  std::string solver;
  std::uint64_t seed = 0;
  std::size_t reads = 0;
  double elapsed_s = 0.0;

  bool operator==(const SampleMeta&) const = default;
};

/// Solver output: distinct assignments with multiplicities, sorted by energy
/// and then by bit string.
class SampleSet {
 public:
  SampleSet() = default;

  /// Evaluates every assignment on `model`, merges duplicates and sorts.
  static SampleSet from_assignments(const Qubo& model, const std::vector<Assignment>& samples,
                                    SampleMeta meta = {});
  /// Merges duplicate assignments (summing occurrences) and sorts.
  static SampleSet from_records(std::vector<SampleRecord> records, SampleMeta meta = {});

  const std::vector<SampleRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }
  /// Lowest-energy record. Throws std::logic_error when empty.
  const SampleRecord& best() const;
  std::size_t total_occurrences() const;

  SampleMeta& meta() { return meta_; }
  const SampleMeta& meta() const { return meta_; }

  /// {"meta": {...}, "records": [{"bits": "0101", "energy": e,
  /// "occurrences": k}]}. Timing is left out unless requested so that equal
  /// runs serialize to equal bytes.
  nlohmann::json to_json(bool include_timing = true) const;
  static SampleSet from_json(const nlohmann::json& doc);

  bool operator==(const SampleSet&) const = default;

 private:
  std::vector<SampleRecord> records_;
  SampleMeta meta_;
};

SampleSet merge(const SampleSet& a, const SampleSet& b);

/// Independent RNG stream for read/restart `index` of a run seeded with `seed`.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index);

Assignment random_assignment(std::size_t n, std::mt19937_64& rng);

/// Energy change of flipping each variable given the current local fields.
class FlipState {
 public:
  FlipState(const Adjacency& adj, Assignment x);

  const Assignment& bits() const { return x_; }
  double delta(Index i) const { return x_[i] ? -field_[i] : field_[i]; }
  /// Flips i and returns the energy change.
  double flip(Index i);
  void reset(Assignment x);

 private:
  const Adjacency* adj_;
  Assignment x_;
  std::vector<double> field_;  // linear_i + sum_j q_ij x_j
};

}  // namespace qeo
