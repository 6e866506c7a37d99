// Copyright 2026 The rigidrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rigidrel/fraenkel.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rigidrel/core.hpp"
#include "rigidrel/errors.hpp"
#include "support/brute_force.hpp"

namespace rigidrel {
namespace {

Relation all_distinct_pairs(std::size_t n) {
  std::vector<Edge> edges;
  for (Atom i = 0; i < n; ++i) {
    for (Atom j = 0; j < n; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  return Relation(n, std::move(edges));
}

// Oracle for E-symmetry: every bijection fixing E pointwise, not just the
// transposition generators.
bool fixes_under_whole_stabilizer(const Relation& r, const AtomSet& support) {
  const auto m = oracle::matrix_of(r);
  for (const auto& p : oracle::all_bijections(r.size())) {
    bool fixes = true;
    for (Atom e : support) fixes = fixes && p[e] == e;
    if (fixes && !oracle::preserves_both_ways(m, p)) return false;
  }
  return true;
}

AtomSet subset_of_mask(std::size_t n, unsigned mask) {
  AtomSet s;
  for (Atom a = 0; a < n; ++a) {
    if ((mask >> a) & 1U) s.push_back(a);
  }
  return s;
}

TEST(GroupDescriptionTest, FixAndFull) {
  const auto full = GroupDescription::full(3);
  EXPECT_EQ(full.kind(), GroupDescription::Kind::Full);
  EXPECT_EQ(full.generators().size(), 3U);
  EXPECT_TRUE(full.contains(Permutation({2, 0, 1})));

  const AtomSet e{1};
  const auto fix = GroupDescription::fix(4, e);
  EXPECT_EQ(fix.moved_atoms(), (AtomSet{0, 2, 3}));
  EXPECT_TRUE(fix.contains(Permutation({2, 1, 3, 0})));
  EXPECT_FALSE(fix.contains(Permutation({1, 0, 2, 3})));
  for (const auto& g : fix.generators()) EXPECT_TRUE(fix.contains(g));

  const AtomSet bad{4};
  EXPECT_THROW(GroupDescription::fix(4, bad), InvalidArgument);
}

TEST(IsESymmetricTest, Examples) {
  EXPECT_TRUE(is_e_symmetric(all_distinct_pairs(4), AtomSet{}));
  const Relation one(4, {{1, 2}});
  EXPECT_TRUE(is_e_symmetric(one, AtomSet{1, 2}));
  // (2 3) sends (1,2) to (1,3).
  EXPECT_FALSE(is_e_symmetric(one, AtomSet{1}));
}

TEST(IsESymmetricTest, GeneratorsAgreeWithWholeStabilizer) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 5;
    // Mostly orbit unions so that both outcomes occur.
    const Relation r = oracle::random_relation(rng, n, 0.5);
    const AtomSet e = subset_of_mask(n, static_cast<unsigned>(rng()) & ((1U << n) - 1));
    EXPECT_EQ(is_e_symmetric(r, e), fixes_under_whole_stabilizer(r, e));
  }
}

TEST(IsESymmetricTest, Monotone) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 4;
    const Relation r = oracle::random_relation(rng, n, 0.5);
    const unsigned small = static_cast<unsigned>(rng()) & ((1U << n) - 1);
    const unsigned large = small | (static_cast<unsigned>(rng()) & ((1U << n) - 1));
    if (is_e_symmetric(r, subset_of_mask(n, small))) {
      EXPECT_TRUE(is_e_symmetric(r, subset_of_mask(n, large)));
    }
  }
}

TEST(OrbitClassesTest, Examples) {
  const auto orbits = orbit_classes(4, AtomSet{0});
  ASSERT_EQ(orbits.size(), 5U);
  EXPECT_EQ(orbits[0].pairs, (std::vector<Edge>{{0, 0}}));
  EXPECT_EQ(orbits[1].pairs, (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(orbits[2].pairs, (std::vector<Edge>{{1, 0}, {2, 0}, {3, 0}}));
  EXPECT_EQ(orbits[3].pairs, (std::vector<Edge>{{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_EQ(orbits[4].pairs,
            (std::vector<Edge>{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}));

  const auto singletons = orbit_classes(2, AtomSet{0, 1});
  ASSERT_EQ(singletons.size(), 4U);
  for (const auto& o : singletons) EXPECT_EQ(o.pairs.size(), 1U);

  const auto lone = orbit_classes(1, AtomSet{});
  ASSERT_EQ(lone.size(), 1U);
  EXPECT_EQ(lone[0].pairs, (std::vector<Edge>{{0, 0}}));
}

TEST(OrbitClassesTest, SymmetricRelationsAreExactlyOrbitUnions) {
  // 2^(orbits) equals a direct filter of all 2^(N^2) edge sets.
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned e = 0; e < (1U << n); ++e) {
      const AtomSet support = subset_of_mask(n, e);
      std::uint64_t symmetric = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
        if (is_e_symmetric(Relation::from_mask(n, m), support)) ++symmetric;
      }
      EXPECT_EQ(symmetric, std::uint64_t{1} << orbit_classes(n, support).size())
          << "n=" << n << " E=" << e;
    }
  }
}

TEST(LeastSupportTest, Examples) {
  EXPECT_EQ(least_support(all_distinct_pairs(4)), AtomSet{});
  EXPECT_EQ(least_support(Relation(4, {{1, 2}})), (AtomSet{1, 2}));
  const Relation order(3, {{0, 1}, {0, 2}, {1, 2}});
  // Any two atoms are enough for N = 3; with one free atom nothing moves.
  EXPECT_EQ(least_support(order), (AtomSet{0, 1}));
  EXPECT_TRUE(fixes_under_whole_stabilizer(order, AtomSet{0, 1}));
  EXPECT_FALSE(fixes_under_whole_stabilizer(order, AtomSet{0}));
  EXPECT_THROW(least_support(Relation(9)), ResourceLimit);
}

TEST(LeastSupportTest, MinimalAndLeastAmongMinimumSize) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + i % 5;
    const Relation r = oracle::random_relation(rng, n, 0.3);
    const AtomSet e = least_support(r);
    EXPECT_TRUE(is_e_symmetric(r, e));
    // No smaller subset works, and no equal-size subset earlier in
    // lexicographic order does.
    for (unsigned m = 0; m < (1U << n); ++m) {
      const AtomSet cand = subset_of_mask(n, m);
      if (cand.size() < e.size() || (cand.size() == e.size() && cand < e)) {
        EXPECT_FALSE(is_e_symmetric(r, cand));
      }
    }
  }
}

TEST(NonrigidityWitnessTest, Examples) {
  const SupportedRelation one(Relation(4, {{1, 2}}), AtomSet{1, 2});
  EXPECT_EQ(nonrigidity_witness(one), Permutation::transposition(4, 0, 3));

  const SupportedRelation full(all_distinct_pairs(5), AtomSet{});
  EXPECT_EQ(nonrigidity_witness(full), Permutation::transposition(5, 0, 1));

  const SupportedRelation pinned(Relation(3, {{0, 1}}), AtomSet{0, 1, 2});
  EXPECT_THROW(nonrigidity_witness(pinned), NotApplicable);
  const SupportedRelation nearly(Relation(3, {{0, 1}}), AtomSet{0, 1});
  EXPECT_THROW(nonrigidity_witness(nearly), NotApplicable);
}

TEST(SupportedRelationTest, RejectsNonSupport) {
  EXPECT_THROW(SupportedRelation(Relation(4, {{1, 2}}), AtomSet{1}), InvalidArgument);
}

TEST(VerifyLemmaTest, FourAtomsSupportOne) {
  const LemmaReport report = verify_lemma(4, 1);
  ASSERT_TRUE(report.applicable);
  ASSERT_EQ(report.per_support.size(), 5U);
  EXPECT_EQ(report.per_support[0].support, AtomSet{});
  EXPECT_EQ(report.per_support[0].relations_checked, 4U);
  EXPECT_EQ(report.per_support[1].support, AtomSet{0});
  EXPECT_EQ(report.per_support[1].orbit_count, 5U);
  EXPECT_EQ(report.per_support[1].relations_checked, 32U);
  EXPECT_EQ(report.relations_checked, 4U + 4 * 32U);
  EXPECT_EQ(report.failures, 0U);
}

TEST(VerifyLemmaTest, TwoAtoms) {
  const LemmaReport report = verify_lemma(2, 0);
  ASSERT_EQ(report.per_support.size(), 1U);
  EXPECT_EQ(report.per_support[0].relations_checked, 4U);
  EXPECT_EQ(report.failures, 0U);
  // Of the 16 edge sets on two atoms exactly these four are E-symmetric for
  // E = {}, and none is rigid.
  int symmetric = 0;
  for (std::uint64_t m = 0; m < 16; ++m) {
    const Relation r = Relation::from_mask(2, m);
    if (!is_e_symmetric(r, AtomSet{})) continue;
    ++symmetric;
    EXPECT_FALSE(oracle::rigid(r));
  }
  EXPECT_EQ(symmetric, 4);
}

TEST(VerifyLemmaTest, OneAtomIsNotApplicable) {
  const LemmaReport report = verify_lemma(1, 0);
  EXPECT_FALSE(report.applicable);
  EXPECT_TRUE(report.per_support.empty());
  EXPECT_FALSE(verify_lemma(0, 0).applicable);
}

TEST(VerifyLemmaTest, Errors) {
  EXPECT_THROW(verify_lemma(7, 0), ResourceLimit);
  EXPECT_THROW(verify_lemma(4, 3), InvalidArgument);
}

TEST(VerifyLemmaTest, CrossCheckedAgainstSearch) {
  LemmaOptions options;
  options.cross_check_with_search = true;
  const LemmaReport report = verify_lemma(4, 2, options);
  EXPECT_EQ(report.failures, 0U);
  // |E|=0: 2 orbits, |E|=1: 5, |E|=2: 10.
  EXPECT_EQ(report.relations_checked, 4U + 4 * 32U + 6 * 1024U);
}

TEST(VerifyLemmaTest, ThreadCountDoesNotChangeTheReport) {
  LemmaOptions serial;
  LemmaOptions parallel;
  parallel.threads = 3;
  const auto a = verify_lemma(5, 3, serial);
  const auto b = verify_lemma(5, 3, parallel);
  ASSERT_EQ(a.per_support.size(), b.per_support.size());
  for (std::size_t i = 0; i < a.per_support.size(); ++i) {
    EXPECT_EQ(a.per_support[i].support, b.per_support[i].support);
    EXPECT_EQ(a.per_support[i].relations_checked, b.per_support[i].relations_checked);
    EXPECT_EQ(a.per_support[i].failing_masks, b.per_support[i].failing_masks);
  }
}

}  // namespace
}  // namespace rigidrel
