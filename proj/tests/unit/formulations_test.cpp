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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "qeo/formulations/hens.hpp"
#include "qeo/formulations/instance_io.hpp"
#include "qeo/formulations/qap.hpp"
#include "qeo/formulations/uc.hpp"
#include "qeo/solvers/solvers.hpp"
#include "test_support.hpp"

namespace qeo {
namespace {

using qeo::testing::bits_of;
using qeo::testing::close;

QapInstance tiny_qap() {
  return {Matrix::from_rows({{0, 1}, {1, 0}}), Matrix::from_rows({{0, 3}, {3, 0}})};
}

UcInstance one_unit(double load) { return {{{0.0, 1.0, 0.0, 1.0, 3.0}}, load}; }

HensInstance one_by_one() { return {{4.0}, {4.0}, Matrix::from_rows({{7.0}})}; }

HensInstance two_by_two() { return {{2.0, 2.0}, {2.0, 2.0}, Matrix::from_rows({{1, 5}, {5, 1}})}; }

// QAP ------------------------------------------------------------------------

TEST(Qap, Objective) {
  const QapInstance one{Matrix::from_rows({{5}}), Matrix::from_rows({{2}})};
  const std::vector<std::size_t> id1{0};
  EXPECT_EQ(qap_objective(one, id1), 10.0);
  const std::vector<std::size_t> id{0, 1}, sw{1, 0};
  EXPECT_EQ(qap_objective(tiny_qap(), id), 6.0);
  EXPECT_EQ(qap_objective(tiny_qap(), sw), 6.0);
  const std::vector<std::size_t> bad{0, 0};
  EXPECT_THROW(qap_objective(tiny_qap(), bad), std::invalid_argument);
}

TEST(Qap, DefaultPenalty) {
  EXPECT_EQ(qap_default_penalty(tiny_qap()), 7.0);
  const QapInstance zero{Matrix(3, 3), Matrix::from_rows({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}})};
  EXPECT_EQ(qap_default_penalty(zero), 1.0);
}

TEST(Qap, SingleFacility) {
  const QapInstance one{Matrix::from_rows({{5}}), Matrix::from_rows({{2}})};
  const Formulation f = qap_to_qubo(one, {3.0, 0.0});
  ASSERT_EQ(f.qubo.num_vars(), 1u);
  EXPECT_EQ(f.qubo.energy(Assignment{1}), 10.0);
  EXPECT_EQ(f.qubo.energy(Assignment{0}), 6.0);
}

TEST(Qap, TwoByTwoEnergies) {
  const Formulation f = qap_to_qubo(tiny_qap(), {10.0, 0.0});
  EXPECT_EQ(f.qubo.num_vars(), 4u);
  EXPECT_EQ(f.qubo.offset(), 40.0);
  EXPECT_EQ(f.qubo.energy(Assignment{0, 0, 0, 0}), 40.0);
  Assignment x(4, 0);
  x[f.vars.index(label_x(0, 0))] = 1;
  x[f.vars.index(label_x(1, 1))] = 1;
  EXPECT_EQ(f.qubo.energy(x), 6.0);
  EXPECT_EQ(brute_force(f.qubo).best().energy, 6.0);
  EXPECT_THROW(qap_to_qubo(tiny_qap(), {0.0, 0.0}), std::invalid_argument);
}

TEST(Qap, QuboMatchesPenaltyFormExhaustively) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const QapInstance inst = qeo::testing::random_qap(3, rng);
    const double a = qap_default_penalty(inst);
    const Formulation f = qap_to_qubo(inst, {a, 0.0});
    for (std::uint64_t v = 0; v < 512; ++v) {
      const Assignment x = bits_of(v, 9);
      ASSERT_TRUE(close(f.qubo.energy(x), qeo::testing::qap_penalty_cost(inst, a, x)));
    }
  }
}

TEST(Qap, PermutationMatricesEqualObjective) {
  std::mt19937_64 rng(22);
  const QapInstance inst = qeo::testing::random_qap(4, rng);
  const Formulation f = qap_to_qubo(inst, {qap_default_penalty(inst), 0.0});
  std::vector<std::size_t> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Assignment x(16, 0);
    for (std::size_t p = 0; p < 4; ++p) x[f.vars.index(label_x(p, perm[p]))] = 1;
    ASSERT_EQ(f.qubo.energy(x), qap_objective(inst, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Qap, DefaultPenaltyKeepsMinimizerFeasible) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const QapInstance inst = qeo::testing::random_qap(3, rng);
    const Formulation f = qap_to_qubo(inst, {qap_default_penalty(inst), 0.0});
    const SampleRecord best = brute_force(f.qubo).best();
    const QapDecoded d = qap_decode(best.bits, f.vars, inst);
    ASSERT_TRUE(d.feasible());
    EXPECT_EQ(d.solution->objective, qap_oracle(inst).objective);
    EXPECT_EQ(best.energy, d.solution->objective);
  }
}

TEST(Qap, Decode) {
  const QapInstance inst = tiny_qap();
  const Formulation f = qap_to_qubo(inst, {10.0, 0.0});
  Assignment id(4, 0);
  id[f.vars.index(label_x(0, 0))] = 1;
  id[f.vars.index(label_x(1, 1))] = 1;
  const QapDecoded ok = qap_decode(id, f.vars, inst);
  ASSERT_TRUE(ok.feasible());
  EXPECT_EQ(ok.solution->perm, (std::vector<std::size_t>{0, 1}));

  const QapDecoded zero = qap_decode(Assignment(4, 0), f.vars, inst);
  EXPECT_FALSE(zero.feasible());
  EXPECT_EQ(zero.bad_plants.size(), 2u);
  EXPECT_EQ(zero.bad_locations.size(), 2u);

  Assignment clash(4, 0);
  clash[f.vars.index(label_x(0, 1))] = 1;
  clash[f.vars.index(label_x(1, 1))] = 1;
  const QapDecoded c = qap_decode(clash, f.vars, inst);
  EXPECT_FALSE(c.feasible());
  EXPECT_TRUE(c.bad_plants.empty());
  EXPECT_EQ(c.bad_locations, (std::vector<std::size_t>{0, 1}));
}

TEST(Qap, Oracle) {
  EXPECT_EQ(qap_oracle(tiny_qap()).objective, 6.0);
  const QapInstance flat{Matrix(3, 3), Matrix::from_rows({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}})};
  const QapSolution s = qap_oracle(flat);
  EXPECT_EQ(s.objective, 0.0);
  EXPECT_EQ(s.perm, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Qap, OracleMatchesEnumeration) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 10; ++t) {
    const QapInstance inst = qeo::testing::random_qap(5, rng);
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e300;
    do best = std::min(best, qap_objective(inst, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    ASSERT_EQ(qap_oracle(inst).objective, best);
  }
}

TEST(Qap, BundledNugentValues) {
  EXPECT_EQ(qap_oracle(read_qaplib_file(QEO_DATA_DIR "/qaplib/nug8.dat")).objective, 214.0);
}

TEST(Qaplib, Parse) {
  const QapInstance a = parse_qaplib("2  0 3 3 0  0 1 1 0");
  EXPECT_EQ(a.flow, Matrix::from_rows({{0, 3}, {3, 0}}));
  EXPECT_EQ(a.distance, Matrix::from_rows({{0, 1}, {1, 0}}));
  const QapInstance b = parse_qaplib("1 7 4");
  EXPECT_EQ(b.flow(0, 0), 7.0);
  EXPECT_EQ(b.distance(0, 0), 4.0);
  EXPECT_ANY_THROW(parse_qaplib("2 0 1"));
  EXPECT_ANY_THROW(parse_qaplib("1 x 4"));
  EXPECT_ANY_THROW(parse_qaplib(""));
}

// UC -------------------------------------------------------------------------

TEST(Uc, Objective) {
  const UcInstance off{{{0, 1, 0, 1, 3}}, 0.0};
  const std::vector<std::uint8_t> no{0}, yes{1};
  const std::vector<double> zero{0.0}, two{2.0}, half{0.5};
  const UcSolution a = uc_objective(off, no, zero);
  EXPECT_EQ(a.total, 0.0);
  EXPECT_TRUE(a.feasible());

  const UcInstance u{{{2, 1, 0, 1, 3}}, 2.0};
  const UcSolution b = uc_objective(u, yes, two);
  EXPECT_EQ(b.total, 4.0);
  EXPECT_TRUE(b.feasible());
  EXPECT_FALSE(uc_objective(u, yes, half).feasible());
}

TEST(Uc, Discretize) {
  const DiscretizedUc d = uc_discretize(one_unit(2), 2);
  EXPECT_EQ(d.points[0], (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(d.step[0], 1.0);

  const DiscretizedUc flat = uc_discretize({{{0, 1, 0, 2, 2}}, 2.0}, 8);
  EXPECT_EQ(flat.points[0].size(), 1u);

  const DiscretizedUc ten = uc_discretize({{{0, 1, 0, 0, 10}}, 2.0}, 10);
  ASSERT_EQ(ten.points[0].size(), 11u);
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(ten.points[0][k], static_cast<double>(k));
  EXPECT_THROW(uc_discretize(one_unit(2), 0), std::invalid_argument);
}

TEST(Uc, OneUnitQubo) {
  const DiscretizedUc d = uc_discretize(one_unit(2), 2);
  const Formulation f = uc_to_qubo(d, {2000.0, 5.0});
  EXPECT_EQ(f.qubo.num_vars(), 4u);
  const SampleRecord best = brute_force(f.qubo).best();
  EXPECT_EQ(best.energy, 2.0);
  EXPECT_EQ(best.bits[f.vars.index(label_v(0))], 0);
  EXPECT_EQ(best.bits[f.vars.index(label_z(0, 1))], 1);
  EXPECT_EQ(f.qubo.energy(Assignment(4, 0)), 2020.0);
  EXPECT_THROW(uc_to_qubo(d, {0.0, 5.0}), std::invalid_argument);
}

TEST(Uc, VariableCount) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 1; n <= 4; ++n) {
    const UcInstance inst = qeo::testing::dyadic_uc(n, rng);
    for (std::size_t grids : {1, 3, 6}) {
      std::size_t flat = 0;
      for (const auto& u : inst.units) flat += u.p_min == u.p_max;
      const DiscretizedUc d = uc_discretize(inst, grids);
      EXPECT_EQ(uc_to_qubo(d, uc_default_penalties(d)).qubo.num_vars(), n * (grids + 2) - flat * grids);
    }
  }
}

TEST(Uc, QuboMatchesPenaltyForm) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 1000; ++t) {
    const UcInstance inst = qeo::testing::dyadic_uc(2, rng);
    const DiscretizedUc d = uc_discretize(inst, 1 + t % 4);
    const PenaltyWeights w{qeo::testing::uniform(rng, 1, 50), qeo::testing::uniform(rng, 1, 50)};
    const Formulation f = uc_to_qubo(d, w);
    Assignment x(f.qubo.num_vars());
    for (auto& b : x) b = rng() % 2;
    ASSERT_TRUE(close(f.qubo.energy(x), qeo::testing::uc_penalty_cost(d, f.vars, w, x)));
  }
}

TEST(Uc, FeasiblePointsEqualCost) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 30; ++t) {
    const UcInstance inst = qeo::testing::dyadic_uc(3, rng);
    const DiscretizedUc d = uc_discretize(inst, 4);
    const auto grid = uc_grid_oracle(d);
    if (!grid) continue;
    const Formulation f = uc_to_qubo(d, uc_default_penalties(d));
    const Assignment x = uc_encode(*grid, f.vars, d);
    ASSERT_TRUE(close(f.qubo.energy(x), grid->total));
    const UcSolution back = uc_decode(x, f.vars, d);
    EXPECT_TRUE(back.feasible());
    EXPECT_TRUE(close(back.total, grid->total));
  }
}

TEST(Uc, DefaultPenaltiesMakeGridOptimumTheQuboMinimum) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 20; ++t) {
    const UcInstance inst = qeo::testing::dyadic_uc(2, rng);
    const DiscretizedUc d = uc_discretize(inst, 2 + t % 3);
    const auto grid = uc_grid_oracle(d);
    if (!grid) continue;
    const Formulation f = uc_to_qubo(d, uc_default_penalties(d));
    const UcSolution got = uc_decode(brute_force(f.qubo).best().bits, f.vars, d);
    ASSERT_TRUE(got.feasible());
    EXPECT_TRUE(close(got.total, grid->total));
  }
}

TEST(Uc, Decode) {
  const DiscretizedUc d = uc_discretize(one_unit(2), 2);
  const Formulation f = uc_to_qubo(d, {2000.0, 5.0});
  Assignment off(4, 0);
  off[f.vars.index(label_v(0))] = 1;
  const UcSolution a = uc_decode(off, f.vars, d);
  EXPECT_EQ(a.on[0], 0);
  EXPECT_EQ(a.power[0], 0.0);
  EXPECT_EQ(a.unit_costs[0], 0.0);

  Assignment mid(4, 0);
  mid[f.vars.index(label_z(0, 1))] = 1;
  EXPECT_EQ(uc_decode(mid, f.vars, d).power[0], 2.0);

  mid[f.vars.index(label_z(0, 2))] = 1;
  EXPECT_FALSE(uc_decode(mid, f.vars, d).feasible());
}

TEST(Uc, DispatchOracle) {
  const UcInstance two{{{0, 1, 0.5, 0, 10}, {0, 2, 0.5, 0, 10}}, 4.0};
  const std::vector<std::uint8_t> both{1, 1};
  const Dispatch d = uc_dispatch_oracle(two, both);
  EXPECT_NEAR(d.power[0], 2.5, 1e-9);
  EXPECT_NEAR(d.power[1], 1.5, 1e-9);
  EXPECT_NEAR(d.cost, 9.75, 1e-9);

  const UcInstance forced{{{1, 2, 0.3, 1.5, 4}}, 1.5};
  const std::vector<std::uint8_t> on{1};
  EXPECT_NEAR(uc_dispatch_oracle(forced, on).power[0], 1.5, 1e-12);

  const UcInstance over{{{0, 1, 0.5, 0, 10}, {0, 1, 0.5, 0, 10}}, 11.0};
  const std::vector<std::uint8_t> first{1, 0};
  EXPECT_THROW(uc_dispatch_oracle(over, first), InfeasibleError);
  EXPECT_THROW(uc_dispatch_oracle({{{0, 1, 0.5, 0, 10}}, 11.0}, on), std::invalid_argument);
}

TEST(Uc, DispatchMatchesFineScan) {
  const UcInstance two{{{0, 1, 0.5, 0, 10}, {0, 2, 0.5, 0, 10}}, 4.0};
  double best = 1e300;
  for (int k = 0; k <= 100000; ++k) {
    const double p = 4.0 * k / 100000;
    best = std::min(best, p + 0.5 * p * p + 2 * (4 - p) + 0.5 * (4 - p) * (4 - p));
  }
  const std::vector<std::uint8_t> both{1, 1};
  EXPECT_NEAR(uc_dispatch_oracle(two, both).cost, best, 1e-6);
}

TEST(Uc, ChooseGrids) {
  const GridChoice g = uc_choose_grids(one_unit(2));
  EXPECT_TRUE(g.achieved);
  EXPECT_LE(g.grids, 2u);
  EXPECT_EQ(g.gap, 0.0);

  // Load equals the cheapest commitment's minimum output: endpoints suffice.
  const UcInstance edge{{{0, 1, 0.2, 2, 6}, {5, 3, 0.1, 1, 4}}, 2.0};
  EXPECT_EQ(uc_choose_grids(edge).grids, 1u);
}

TEST(Uc, GridNestingNeverWorsens) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 20; ++t) {
    const UcInstance inst = qeo::testing::dyadic_uc(2, rng);
    double prev = 1e300;
    for (std::size_t grids = 1; grids <= 16; grids *= 2) {
      const auto g = uc_grid_oracle(uc_discretize(inst, grids));
      if (!g) continue;
      ASSERT_LE(g->total, prev + 1e-9);
      prev = g->total;
    }
  }
}

// HENS -----------------------------------------------------------------------

TEST(Hens, Objective) {
  const HensInstance inst = one_by_one();
  const std::vector<std::uint8_t> on{1}, off{0};
  const Matrix q = Matrix::from_rows({{4}});
  const HensSolution a = hens_objective(inst, on, q);
  EXPECT_EQ(a.total_cost, 7.0);
  EXPECT_TRUE(a.feasible());
  EXPECT_FALSE(hens_objective(inst, off, q).feasible());

  const std::vector<std::uint8_t> diag{1, 0, 0, 1};
  const HensSolution b = hens_objective(two_by_two(), diag, Matrix::from_rows({{2, 0}, {0, 2}}));
  EXPECT_EQ(b.total_cost, 2.0);
  EXPECT_TRUE(b.feasible());
}

TEST(Hens, Discretize) {
  const DiscretizedHens a = hens_discretize(one_by_one(), 4);
  EXPECT_EQ(a.grid(0, 0), (std::vector<double>{1, 2, 3, 4}));

  const HensInstance dry{{0.0, 3.0}, {1.0, 2.0}, Matrix(2, 2, 1.0)};
  const DiscretizedHens b = hens_discretize(dry, 3);
  EXPECT_TRUE(b.grid(0, 0).empty());
  EXPECT_TRUE(b.grid(0, 1).empty());
  EXPECT_EQ(b.capacity(1, 1), 2.0);

  const DiscretizedHens c = hens_discretize(two_by_two(), 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(c.grid(i, j), (std::vector<double>{1, 2}));
  EXPECT_THROW(hens_discretize(one_by_one(), 0), std::invalid_argument);
}

TEST(Hens, OneByOneQubo) {
  const DiscretizedHens d = hens_discretize(one_by_one(), 4);
  const Formulation f = hens_to_qubo(d, {20.0, 5.0}).formulation;
  ASSERT_EQ(f.qubo.num_vars(), 5u);
  const SampleRecord best = brute_force(f.qubo).best();
  EXPECT_EQ(best.energy, 7.0);
  EXPECT_EQ(best.bits[f.vars.index(label_w(0, 0))], 1);
  EXPECT_EQ(best.bits[f.vars.index(label_z(0, 0, 4))], 1);
  EXPECT_EQ(f.qubo.energy(Assignment(5, 0)), 160.0);
  EXPECT_THROW(hens_to_qubo(d, {20.0, 0.0}), std::invalid_argument);
}

TEST(Hens, VariableCountAndDrops) {
  const HensInstance dry{{0.0, 3.0}, {1.0, 2.0}, Matrix(2, 2, 1.0)};
  const HensFormulation h = hens_to_qubo(hens_discretize(dry, 3), hens_default_penalties());
  EXPECT_EQ(h.dropped, 6u);
  EXPECT_EQ(h.formulation.qubo.num_vars(), 2 * 2 * 4 - 6u);
  EXPECT_EQ(hens_default_penalties().a, 20.0);
  EXPECT_EQ(hens_default_penalties().b, 5.0);
}

TEST(Hens, QuboMatchesPenaltyForm) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const double s0 = 1 + rng() % 4, s1 = 1 + rng() % 4, d0 = 1 + rng() % (static_cast<int>(s0 + s1) - 1);
    HensInstance inst{{s0, s1}, {d0, s0 + s1 - d0}, Matrix(2, 2)};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) inst.cost(i, j) = qeo::testing::uniform(rng, 0, 3);
    const DiscretizedHens d = hens_discretize(inst, 1 + t % 4);
    const Formulation f = hens_to_qubo(d, {20.0, 5.0}).formulation;
    Assignment x(f.qubo.num_vars());
    for (auto& b : x) b = rng() % 2;
    ASSERT_TRUE(close(f.qubo.energy(x), qeo::testing::hens_penalty_cost(d, f.vars, {20.0, 5.0}, x)));
  }
}

TEST(Hens, Decode) {
  const DiscretizedHens d = hens_discretize(one_by_one(), 4);
  const Formulation f = hens_to_qubo(d, {20.0, 5.0}).formulation;
  const HensSolution zero = hens_decode(Assignment(5, 0), f.vars, d);
  EXPECT_EQ(zero.matches[0], 0);
  EXPECT_EQ(zero.flows(0, 0), 0.0);
  EXPECT_FALSE(zero.feasible());

  Assignment x(5, 0);
  x[f.vars.index(label_w(0, 0))] = 1;
  x[f.vars.index(label_z(0, 0, 4))] = 1;
  const HensSolution ok = hens_decode(x, f.vars, d);
  EXPECT_TRUE(ok.feasible());
  EXPECT_EQ(ok.total_cost, 7.0);

  x[f.vars.index(label_z(0, 0, 1))] = 1;
  EXPECT_FALSE(hens_decode(x, f.vars, d).feasible());
}

TEST(Hens, Oracle) {
  EXPECT_EQ(hens_oracle(one_by_one()).total_cost, 7.0);
  const HensSolution s = hens_oracle(two_by_two());
  EXPECT_EQ(s.total_cost, 2.0);
  EXPECT_EQ(s.matches, (std::vector<std::uint8_t>{1, 0, 0, 1}));
  const HensInstance free{{3.0, 1.0}, {2.0, 2.0}, Matrix(2, 2)};
  EXPECT_EQ(hens_oracle(free).total_cost, 0.0);
  const HensInstance unbalanced{{3.0}, {2.0}, Matrix(1, 1)};
  EXPECT_ANY_THROW(hens_oracle(unbalanced));
}

TEST(Hens, TransportFeasibility) {
  const std::vector<std::uint8_t> diag{1, 0, 0, 1}, row{1, 1, 0, 0};
  Matrix flows;
  EXPECT_TRUE(hens_transport_feasible(two_by_two(), diag, &flows));
  EXPECT_EQ(flows(0, 0), 2.0);
  EXPECT_FALSE(hens_transport_feasible(two_by_two(), row));
}

// Instance JSON ----------------------------------------------------------------

TEST(InstanceIo, Roundtrips) {
  const UcInstance uc{{{1, 2, 0.5, 1, 3}, {0, 1, 0.25, 0, 2}}, 2.5};
  const UcInstance uc2 = uc_from_json(nlohmann::json::parse(uc_to_json(uc).dump()));
  EXPECT_EQ(uc2.load, uc.load);
  EXPECT_EQ(uc2.units[1].c, 0.25);
  const HensInstance h = hens_from_json(hens_to_json(two_by_two()));
  EXPECT_EQ(h.cost, two_by_two().cost);
  EXPECT_EQ(h.supply, two_by_two().supply);
  const QapInstance q = qap_from_json(qap_to_json(tiny_qap()));
  EXPECT_EQ(q.distance, tiny_qap().distance);
  EXPECT_EQ(q.flow, tiny_qap().flow);
}

TEST(InstanceIo, RejectsInvalidInstances) {
  EXPECT_ANY_THROW(uc_from_json(nlohmann::json::parse(R"({"units": [{"a":0,"b":1,"c":-1,"p_min":0,"p_max":1}], "load": 0.5})")));
  EXPECT_ANY_THROW(hens_from_json(nlohmann::json::parse(R"({"supply": [1], "demand": [2], "cost": [[1]]})")));
  EXPECT_ANY_THROW(hens_from_json(nlohmann::json::parse(R"({"supply": [1], "demand": [1]})")));
}

}  // namespace
}  // namespace qeo
