#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "rwrs/scenery.hpp"

using namespace rwrs;
using testing_util::walk_of;

TEST(SampleScenery, SingleSite) {
  Rng rng = make_rng(1);
  Scenery s = sample_scenery(rng, 2, 0, 0);
  EXPECT_EQ(s.lo(), 0);
  EXPECT_EQ(s.hi(), 0);
  EXPECT_LT(s.color(0), 2u);
}

TEST(SampleScenery, ReplayIsDeterministic) {
  Rng a = make_rng(9, 1), b = make_rng(9, 1);
  EXPECT_EQ(sample_scenery(a, 3, -50, 50).colors(), sample_scenery(b, 3, -50, 50).colors());
}

TEST(SampleScenery, ColorFrequencies) {
  // multinomial: each of 4 colors has frequency 1/4 with standard error sqrt(3/16 / n)
  Rng rng = make_rng(201);
  const int64_t n = 100000;
  Scenery s = sample_scenery(rng, 4, 0, n - 1);
  std::vector<int64_t> counts(4, 0);
  for (uint32_t c : s.colors()) ++counts.at(c);
  const double se = std::sqrt(0.25 * 0.75 / n);
  for (int64_t c : counts) EXPECT_NEAR(static_cast<double>(c) / n, 0.25, 3 * se);
}

TEST(MakeRecord, Examples) {
  Scenery s(3, 0, {2, 1});
  Record r = make_record(walk_of("+"), s);
  EXPECT_EQ(r.steps, (std::vector<int8_t>{1}));
  EXPECT_EQ(r.colors, (std::vector<uint32_t>{2}));
  Record r2 = make_record(walk_of("+-"), s);
  EXPECT_EQ(r2.steps, (std::vector<int8_t>{1, -1}));
  EXPECT_EQ(r2.colors, (std::vector<uint32_t>{2, 1}));
}

TEST(MakeRecord, ReadbackReproducesSceneryOnVisitedSites) {
  Rng rng = make_rng(202);
  for (int trial = 0; trial < 50; ++trial) {
    Walk w = testing_util::stopped_walk(rng, 15);
    Scenery s = sample_scenery_for(rng, 3, w);
    Record r = make_record(w, s);
    std::set<int64_t> visited;
    for (int64_t t = 0; t < r.size(); ++t) {
      const int64_t x = r.walk().trace()[t];
      visited.insert(x);
      ASSERT_EQ(r.colors[t], s.color(x));
    }
    for (int64_t t = 0; t < w.size(); ++t) ASSERT_TRUE(visited.count(w.trace()[t]));
  }
}

TEST(CorruptRandom, ZeroDeltaIsIdentity) {
  Rng rng = make_rng(3);
  Record r = make_record(walk_of("++-+"), Scenery(2, -1, {0, 1, 0, 1}));
  Corruption c = corrupt_random(rng, r, 0, 2);
  EXPECT_EQ(c.record, r);
  EXPECT_TRUE(c.errors.E.empty());
}

TEST(CorruptRandom, SingleEntryBudget) {
  Rng rng = make_rng(4);
  Record r = make_record(walk_of("+"), Scenery(2, 0, {1, 0}));
  Corruption c = corrupt_random(rng, r, 0.999, 2);  // floor(0.999) = 0
  EXPECT_TRUE(c.errors.E.empty());
  Record r2 = make_record(walk_of("++"), Scenery(2, 0, {1, 0, 1}));
  Corruption c2 = corrupt_random(rng, r2, 0.5, 2);  // floor(1) = 1
  int diff = 0;
  for (int64_t t = 0; t < 2; ++t) diff += r2.steps[t] != c2.record.steps[t] || r2.colors[t] != c2.record.colors[t];
  EXPECT_EQ(diff, 1);
  EXPECT_EQ(c2.errors.E.size(), 1u);
}

TEST(CorruptRandom, ErrorSetMatchesBruteForceDiff) {
  Rng rng = make_rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    Walk w = testing_util::stopped_walk(rng, 10);
    Scenery s = sample_scenery_for(rng, 3, w);
    Record r = make_record(w, s);
    Corruption c = corrupt_random(rng, r, 0.1, 3);
    EXPECT_EQ(c.errors, diff_records(r, c.record));
  }
}

TEST(CorruptLeastVisited, ZeroDeltaIsIdentity) {
  Walk w = walk_of("++-+");
  Record r = make_record(w, Scenery(2, 0, {0, 1, 0, 1}));
  EXPECT_EQ(corrupt_least_visited(r, w, 0, 2).record, r);
}

TEST(CorruptLeastVisited, SingleVisitSiteFirst) {
  // X = 0,1,0,1,2,1 reads sites 0,1,0,1,2 at t = 0..4; site 2 is read once, at t = 4
  Walk w = walk_of("+-++-");
  Record r = make_record(w, Scenery(2, 0, {0, 0, 0}));
  Corruption c = corrupt_least_visited(r, w, 0.2, 2);
  EXPECT_EQ(c.errors.E, (std::vector<int64_t>{4}));
  EXPECT_EQ(c.record.colors[4], 1u);
}

TEST(Corruption, InvariantsAndWalkOffsetIdentity) {
  Rng rng = make_rng(204);
  for (int trial = 0; trial < 200; ++trial) {
    Walk w = testing_util::stopped_walk(rng, 12);
    Scenery s = sample_scenery_for(rng, 2, w);
    Record r = make_record(w, s);
    const double delta = 0.05 * (trial % 5);
    Corruption c = trial % 2 ? corrupt_random(rng, r, delta, 2) : corrupt_least_visited(r, w, delta, 2);
    const auto& e = c.errors;
    ASSERT_LE(static_cast<int64_t>(e.E.size()), error_budget(delta, r.size()));
    std::set<int64_t> E(e.E.begin(), e.E.end());
    for (int64_t t = 0; t < r.size(); ++t)
      if (!E.count(t)) {
        ASSERT_TRUE(r.steps[t] == c.record.steps[t] && r.colors[t] == c.record.colors[t]);
      }
    for (int64_t t : e.E_plus) ASSERT_TRUE(E.count(t));
    for (int64_t t : e.E_minus) ASSERT_TRUE(E.count(t));
    std::vector<int64_t> both;
    std::set_intersection(e.E_plus.begin(), e.E_plus.end(), e.E_minus.begin(), e.E_minus.end(),
                          std::back_inserter(both));
    ASSERT_TRUE(both.empty());
    // X_t - X'_t = 2 |E+ before t| - 2 |E- before t|
    const Walk wp = c.record.walk();
    int64_t plus = 0, minus = 0;
    size_t ip = 0, im = 0;
    for (int64_t t = 0; t <= r.size(); ++t) {
      ASSERT_EQ(w.trace()[t] - wp.trace()[t], 2 * plus - 2 * minus);
      while (ip < e.E_plus.size() && e.E_plus[ip] == t) ++plus, ++ip;
      while (im < e.E_minus.size() && e.E_minus[im] == t) ++minus, ++im;
    }
  }
}

TEST(ClassifyErrors, Examples) {
  auto [p1, m1] = classify_errors({1, -1}, {-1, -1});
  EXPECT_EQ(p1, (std::vector<int64_t>{0}));
  EXPECT_TRUE(m1.empty());
  auto [p2, m2] = classify_errors({1, -1}, {1, -1});
  EXPECT_TRUE(p2.empty() && m2.empty());
  auto [p3, m3] = classify_errors({-1}, {1});
  EXPECT_TRUE(p3.empty());
  EXPECT_EQ(m3, (std::vector<int64_t>{0}));
}

TEST(ErrorBudget, FloorOfDeltaN) {
  EXPECT_EQ(error_budget(0.1, 95), 9);
  EXPECT_EQ(error_budget(0, 1000), 0);
  EXPECT_THROW(error_budget(1.0, 10), std::invalid_argument);
}
