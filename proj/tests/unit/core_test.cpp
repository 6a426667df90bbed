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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "qeo/core/ising.hpp"
#include "qeo/core/qubo.hpp"
#include "qeo/core/serialize.hpp"
#include "test_support.hpp"

namespace qeo {
namespace {

using qeo::testing::bits_of;
using qeo::testing::close;

Qubo small_model() {
  const std::vector<LinearTerm> lin{{0, 1.0}, {1, 2.0}};
  const std::vector<QuadraticTerm> quad{{0, 1, -4.0}};
  return Qubo(2, lin, quad);
}

TEST(Qubo, EmptyModelHasZeroEnergy) {
  const Qubo q(0, {}, {}, 0.0);
  EXPECT_EQ(q.num_vars(), 0u);
  EXPECT_EQ(q.energy(Assignment{}), 0.0);
}

TEST(Qubo, HandArithmetic) {
  const Qubo q = small_model();
  EXPECT_EQ(q.energy(Assignment{1, 1}), -1.0);
  EXPECT_EQ(q.energy(Assignment{0, 0}), 0.0);
  EXPECT_EQ(q.energy(Assignment{1, 0}), 1.0);
}

TEST(Qubo, DiagonalFoldsIntoLinear) {
  const std::vector<QuadraticTerm> quad{{1, 1, 3.0}};
  const Qubo q(2, {}, quad);
  EXPECT_EQ(q.linear().size(), 1u);
  EXPECT_EQ(q.linear_at(1), 3.0);
  EXPECT_TRUE(q.quadratic().empty());
}

TEST(Qubo, CanonicalizesKeysAndDropsZeros) {
  const std::vector<LinearTerm> lin{{0, 1.0}, {0, -1.0}};
  const std::vector<QuadraticTerm> quad{{1, 0, 2.0}, {0, 1, 0.5}, {2, 1, 1.0}, {1, 2, -1.0}};
  const Qubo q(3, lin, quad);
  EXPECT_TRUE(q.linear().empty());
  ASSERT_EQ(q.quadratic().size(), 1u);
  EXPECT_EQ(q.quadratic().begin()->first, (IndexPair{0, 1}));
  EXPECT_EQ(q.quadratic_at(1, 0), 2.5);
}

TEST(Qubo, RejectsBadInput) {
  const std::vector<LinearTerm> out{{2, 1.0}};
  EXPECT_THROW(Qubo(2, out, {}), std::out_of_range);
  const std::vector<LinearTerm> nan{{0, std::numeric_limits<double>::quiet_NaN()}};
  EXPECT_THROW(Qubo(2, nan, {}), std::invalid_argument);
  EXPECT_ANY_THROW(small_model().energy(Assignment{1}));
}

TEST(Qubo, SquaredPenaltyOneHot) {
  const double a = 7.0;
  LinearExpr e;
  e.add(0, 1.0).add(1, 1.0).constant = -1.0;
  const Qubo q = add_squared_penalty(Qubo(2), e, a);
  EXPECT_EQ(q.linear_at(0), -a);
  EXPECT_EQ(q.linear_at(1), -a);
  EXPECT_EQ(q.quadratic_at(0, 1), 2 * a);
  EXPECT_EQ(q.offset(), a);
  EXPECT_EQ(q.energy(Assignment{1, 0}), 0.0);
}

TEST(Qubo, SquaredPenaltyEdgeCases) {
  const Qubo base = small_model();
  EXPECT_EQ(add_squared_penalty(base, LinearExpr{}, 3.0), base);

  LinearExpr e;
  e.add(0, 1.0).constant = -1.0;
  const Qubo q = add_squared_penalty(Qubo(1), e, 5.0);
  EXPECT_EQ(q.linear_at(0), -5.0);
  EXPECT_EQ(q.offset(), 5.0);
  EXPECT_EQ(q.energy(Assignment{1}), 0.0);
}

TEST(Qubo, SquaredPenaltyMatchesDirectEvaluation) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 8;
    const Qubo base = qeo::testing::random_qubo(n, rng);
    LinearExpr e;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 2) e.add(i, qeo::testing::uniform(rng, -3, 3));
    e.constant = qeo::testing::uniform(rng, -3, 3);
    const double w = qeo::testing::uniform(rng, 0, 10);
    const Qubo q = add_squared_penalty(base, e, w);
    const Assignment x = bits_of(rng() % (1ULL << n), n);
    const double r = e.evaluate(x);
    ASSERT_TRUE(close(q.energy(x), base.energy(x) + w * r * r));
  }
}

TEST(Qubo, EnergyIsAdditive) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Qubo a = qeo::testing::random_qubo(6, rng);
    const Qubo b = qeo::testing::random_qubo(6, rng);
    const Assignment x = bits_of(rng() % 64, 6);
    ASSERT_TRUE(close((a + b).energy(x), a.energy(x) + b.energy(x)));
  }
}

TEST(Clamp, HandExample) {
  const ClampResult r = clamp(small_model(), {{1, 1}});
  ASSERT_EQ(r.free_vars, std::vector<Index>{0});
  EXPECT_EQ(r.reduced.linear_at(0), -3.0);
  EXPECT_EQ(r.reduced.offset(), 2.0);
  EXPECT_EQ(r.reduced.energy(Assignment{1}), -1.0);
}

TEST(Clamp, NothingAndEverything) {
  const Qubo q = small_model();
  EXPECT_EQ(clamp(q, {}).reduced.energy(Assignment{1, 1}), q.energy(Assignment{1, 1}));
  const ClampResult all = clamp(q, {{0, 1}, {1, 1}});
  EXPECT_EQ(all.reduced.num_vars(), 0u);
  EXPECT_EQ(all.reduced.offset(), -1.0);
}

TEST(Clamp, ReducedEnergyMatchesFullExhaustively) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 9;
    const Qubo q = qeo::testing::random_qubo(n, rng);
    std::map<Index, std::uint8_t> fixed;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 2) fixed[i] = static_cast<std::uint8_t>(rng() % 2);
    const ClampResult r = clamp(q, fixed);
    const std::size_t m = r.free_vars.size();
    for (std::uint64_t v = 0; v < (1ULL << m); ++v) {
      const Assignment free = bits_of(v, m);
      Assignment full(n, 0);
      for (const auto& [i, b] : fixed) full[i] = b;
      for (std::size_t k = 0; k < m; ++k) full[r.free_vars[k]] = free[k];
      ASSERT_TRUE(close(r.reduced.energy(free), q.energy(full)));
    }
  }
}

TEST(Clamp, RejectsBadIndex) { EXPECT_THROW(clamp(small_model(), {{5, 1}}), std::out_of_range); }

TEST(Quantize, RoundsToSignificantBits) {
  const std::vector<LinearTerm> lin{{0, 1.3}};
  const Qubo q = quantize(Qubo(1, lin, {}), 2);
  EXPECT_EQ(q.linear_at(0), 1.5);
}

TEST(Ising, FromQuboHandExample) {
  const IsingModel m = qubo_to_ising(small_model());
  EXPECT_EQ(m.h().at(0), 0.5);
  EXPECT_FALSE(m.h().contains(1));
  EXPECT_EQ(m.j().at({0, 1}), -1.0);
  EXPECT_EQ(m.offset(), 0.5);
}

TEST(Ising, OffsetOnlyAndZero) {
  const IsingModel m = qubo_to_ising(Qubo(3, {}, {}, 4.5));
  EXPECT_TRUE(m.h().empty());
  EXPECT_TRUE(m.j().empty());
  EXPECT_EQ(m.offset(), 4.5);
  const Qubo q = ising_to_qubo(IsingModel(2));
  EXPECT_TRUE(q.linear().empty());
  EXPECT_EQ(q.offset(), 0.0);
}

TEST(Ising, ToQuboSpinConvention) {
  const IsingModel m(1, {{0, -1.0}}, {});
  const Qubo q = ising_to_qubo(m);
  EXPECT_EQ(q.linear_at(0), 2.0);
  EXPECT_EQ(q.offset(), -1.0);
  EXPECT_EQ(m.energy(Spins{1}), -1.0);
}

TEST(Ising, EnergyExamples) {
  const IsingModel a(2, {{0, 0.5}}, {{{0, 1}, -1.0}}, 0.5);
  EXPECT_EQ(a.energy(Spins{-1, -1}), -1.0);
  const IsingModel b(2, {}, {{{0, 1}, 1.0}}, 2.0);
  EXPECT_EQ(b.energy(Spins{1, -1}), 1.0);
  EXPECT_THROW(b.energy(Spins{1, 0}), std::invalid_argument);
}

TEST(Ising, RoundtripExhaustive) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 10;
    const Qubo q = qeo::testing::random_qubo(n, rng);
    const IsingModel m = qubo_to_ising(q);
    const Qubo back = ising_to_qubo(m);
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
      const Assignment x = bits_of(v, n);
      ASSERT_TRUE(close(m.energy(to_spins(x)), q.energy(x)));
      ASSERT_TRUE(close(back.energy(x), q.energy(x)));
    }
  }
}

TEST(Ising, SpinBitConversion) {
  const Assignment x{0, 1, 1};
  EXPECT_EQ(to_spins(x), (Spins{1, -1, -1}));
  EXPECT_EQ(to_bits(to_spins(x)), x);
}

TEST(Serialize, QuboJsonRoundtripIsExact) {
  std::mt19937_64 rng(15);
  Qubo q = qeo::testing::random_qubo(7, rng);
  q.set_var_names({{0, "a"}, {3, "b"}});
  const nlohmann::json doc = qubo_to_json(q);
  EXPECT_EQ(qubo_from_json(doc), q);
  EXPECT_EQ(qubo_from_json(nlohmann::json::parse(doc.dump())), q);
  EXPECT_EQ(doc["num_vars"], 7);
}

TEST(Serialize, RejectsMalformedQubo) {
  EXPECT_ANY_THROW(qubo_from_json(nlohmann::json::parse(R"({"linear": []})")));
  EXPECT_ANY_THROW(
      qubo_from_json(nlohmann::json::parse(R"({"num_vars": 1, "linear": [[3, 1.0]], "quadratic": [], "offset": 0})")));
}

TEST(Serialize, BitStrings) {
  EXPECT_EQ(bits_to_string(Assignment{0, 1, 1}), "011");
  EXPECT_EQ(bits_from_string("101"), (Assignment{1, 0, 1}));
  EXPECT_ANY_THROW(bits_from_string("12"));
}

}  // namespace
}  // namespace qeo
