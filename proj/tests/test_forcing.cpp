#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "unfold/forcing.hpp"
#include "unfold/pattern.hpp"
#include "unfold/plmap.hpp"
#include "unfold/rational.hpp"
#include "unfold/sharkovsky.hpp"

using namespace unfold;

namespace {

const Pattern kThree = Pattern::parse("(1,2,3)");
const Pattern kSwap = Pattern::parse("(1,2)");
const Pattern kDiv4 = Pattern::parse("(1,3,4,2)");
const Pattern kTrimodal = Pattern::parse("(1,2,5,7,10,3,6,8,9,4,11)");

// All cyclic permutations of period q: fix the cycle to start at 1, permute
// the rest.
template <typename Fn>
void for_each_pattern(int q, Fn&& fn) {
  std::vector<int> rest(q - 1);
  std::iota(rest.begin(), rest.end(), 2);
  do {
    std::vector<int> cyc(q);
    cyc[0] = 1;
    std::copy(rest.begin(), rest.end(), cyc.begin() + 1);
    fn(Pattern::from_cycle(cyc));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

TEST_CASE("markov graphs of the basic fixtures") {
  MarkovGraph g3 = markov_graph(kThree);
  REQUIRE(g3.intervals.size() == 2);
  CHECK(g3.intervals[0] == Segment{rat(0), rat(1, 2)});
  CHECK(g3.intervals[1] == Segment{rat(1, 2), rat(1)});
  CHECK(g3.covers[0] == std::vector<int>{1});
  CHECK(g3.covers[1] == std::vector<int>{0, 1});

  MarkovGraph g2 = markov_graph(kSwap);
  REQUIRE(g2.intervals.size() == 1);
  CHECK(g2.intervals[0] == Segment{rat(0), rat(1)});
  CHECK(g2.covers[0] == std::vector<int>{0});

  MarkovGraph g4 = markov_graph(kDiv4);
  REQUIRE(g4.intervals.size() == 3);
  CHECK(g4.covers[0] == std::vector<int>{0, 1});
  CHECK(g4.covers[1] == std::vector<int>{0, 1, 2});
  CHECK(g4.covers[2] == std::vector<int>{1, 2});
  // horseshoe witness: one vertex covers itself and at least two others
  bool witness = false;
  for (std::size_t v = 0; v < g4.covers.size(); ++v) {
    const auto& cs = g4.covers[v];
    if (cs.size() >= 3 &&
        std::find(cs.begin(), cs.end(), static_cast<int>(v)) != cs.end())
      witness = true;
  }
  CHECK(witness);

  CHECK_THROWS_AS(markov_graph(Pattern({1})), std::invalid_argument);
}

TEST_CASE("markov graphs tile the endpoint images") {
  for (int q = 2; q <= 6; ++q) {
    for_each_pattern(q, [&](const Pattern& P) {
      MarkovGraph G = markov_graph(P);
      PLMap f = p_linear_map(P);
      REQUIRE(G.intervals.size() == static_cast<std::size_t>(q - 1));
      std::vector<int> indeg(q - 1, 0);
      for (int i = 0; i < q - 1; ++i) {
        const auto& cs = G.covers[i];
        REQUIRE(!cs.empty());
        CHECK(std::is_sorted(cs.begin(), cs.end()));
        // covered intervals are consecutive and tile the image exactly
        for (std::size_t t = 1; t < cs.size(); ++t) CHECK(cs[t] == cs[t - 1] + 1);
        Rat lo = std::min(f.ys[i], f.ys[i + 1]);
        Rat hi = std::max(f.ys[i], f.ys[i + 1]);
        CHECK(G.intervals[cs.front()].first == lo);
        CHECK(G.intervals[cs.back()].second == hi);
        for (int j : cs) ++indeg[j];
      }
      for (int j = 0; j < q - 1; ++j) CHECK(indeg[j] >= 1);
    });
  }
}

TEST_CASE("loop enumeration dedups rotations and powers") {
  MarkovGraph g3 = markov_graph(kThree);
  CHECK(loops_up_to(g3, 1) == std::vector<Loop>{{1}});
  CHECK(loops_up_to(g3, 2) == std::vector<Loop>{{1}, {0, 1}});
  CHECK(loops_up_to(g3, 3) == std::vector<Loop>{{1}, {0, 1}, {0, 1, 1}});

  MarkovGraph g2 = markov_graph(kSwap);
  CHECK(loops_up_to(g2, 1) == std::vector<Loop>{{0}});
  // powers of the self-loop are dropped
  CHECK(loops_up_to(g2, 4) == std::vector<Loop>{{0}});

  MarkovGraph g4 = markov_graph(kDiv4);
  CHECK(loops_up_to(g4, 1) == std::vector<Loop>{{0}, {1}, {2}});
  CHECK(loops_up_to(g4, 2) ==
        std::vector<Loop>{{0}, {1}, {2}, {0, 1}, {1, 2}});

  CHECK_THROWS_AS(loops_up_to(g3, 0), std::invalid_argument);
}

TEST_CASE("orbit pullback solves the affine chains") {
  PLMap f3 = p_linear_map(kThree);
  MarkovGraph g3 = markov_graph(kThree);

  LoopOrbit fixed = orbit_from_loop(f3, g3, {1});
  CHECK(fixed.points == std::vector<Rat>{rat(2, 3)});
  CHECK(fixed.isolated);

  LoopOrbit two = orbit_from_loop(f3, g3, {0, 1});
  CHECK(two.points == std::vector<Rat>{rat(1, 3), rat(5, 6)});
  CHECK(two.isolated);

  PLMap f2 = p_linear_map(kSwap);
  MarkovGraph g2 = markov_graph(kSwap);
  LoopOrbit fix2 = orbit_from_loop(f2, g2, {0});
  CHECK(fix2.points == std::vector<Rat>{rat(1, 2)});
  CHECK(fix2.isolated);

  // the identity branch of f^2 yields the segment midpoint, non-isolated
  LoopOrbit family =
      orbit_from_loop(f2, {Segment{rat(0), rat(1)}, Segment{rat(0), rat(1)}});
  CHECK(family.points == std::vector<Rat>{rat(1, 2), rat(1, 2)});
  CHECK_FALSE(family.isolated);

  CHECK_THROWS_AS(orbit_from_loop(
                      f3, {Segment{rat(0), rat(1, 2)}, Segment{rat(0), rat(1, 2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(orbit_from_loop(f3, std::vector<Segment>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(orbit_from_loop(f3, {Segment{rat(0), rat(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(orbit_from_loop(f3, g3, {0, 7}), std::invalid_argument);
}

TEST_CASE("forced spectra list the small fixtures") {
  auto s3 = forced_spectrum(kThree, 2);
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].period == 1);
  CHECK(s3[0].isolated);
  CHECK(s3[1].period == 2);
  CHECK(s3[1].pattern == kSwap);
  CHECK(s3[1].orp.l == 1);
  CHECK(s3[1].orp.q == 2);
  CHECK(s3[1].up.p == 1);
  CHECK(s3[1].up.q == 2);
  CHECK(s3[1].mup.t == rat(1, 2));
  CHECK(s3[1].mup.m == 1);
  CHECK_FALSE(s3[1].mup.degenerate);

  // x -> 1-x: the fixed point plus one non-isolated family of 2-cycles
  auto s2 = forced_spectrum(kSwap, 4);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].period == 1);
  CHECK(s2[1].period == 2);
  CHECK_FALSE(s2[1].isolated);
  CHECK(s2[1].pattern == kSwap);

  CHECK_THROWS_AS(forced_spectrum(kThree, 1), std::invalid_argument);
}

TEST_CASE("forced spectra respect the sharkovsky order") {
  const int N = 6;
  for (int q = 2; q <= 5; ++q) {
    for_each_pattern(q, [&](const Pattern& P) {
      auto spec = forced_spectrum(P, N);
      std::set<long long> present;
      for (const auto& e : spec) {
        present.insert(e.period);
        if (e.period >= 2 && is_convergent(e.pattern)) {
          // forced convergent patterns obey orn <= un
          CHECK(rat(e.orp.l, e.orp.q) <= rat(e.up.p, e.up.q));
        }
      }
      for (long long m : present)
        for (long long n = 1; n <= N; ++n)
          if (sharkovsky_ge(SharkValue::of(m), SharkValue::of(n)))
            CHECK(present.count(n) == 1);
    });
  }
}

TEST_CASE("trimodal spectrum snapshot") {
  // regression snapshot; orbit counts match the Markov adjacency traces
  // tr A = 1, tr A^2 = 7, tr A^3 = 19
  auto spec = forced_spectrum(kTrimodal, 3);
  REQUIRE(spec.size() == 10);
  std::vector<long long> periods;
  for (const auto& e : spec) periods.push_back(e.period);
  CHECK(periods == std::vector<long long>{1, 2, 2, 2, 3, 3, 3, 3, 3, 3});
  for (const auto& e : spec) {
    CHECK(e.isolated);
    if (e.period == 2) {
      CHECK(e.pattern == kSwap);
      CHECK(e.up.p == 1);
      CHECK(e.up.q == 2);
    }
    if (e.period == 3) {
      CHECK(e.pattern == kThree);
      CHECK(e.orp.l == 1);
      CHECK(e.orp.q == 3);
      CHECK(e.up.p == 1);
      CHECK(e.up.q == 3);
      CHECK(e.mup.t == rat(1, 3));
      CHECK(e.mup.m == 1);
    }
  }
  // smallest orbit points, frozen; the 2-cycle {4/15, 5/6} checks by hand
  auto orbs = periodic_orbits(p_linear_map(kTrimodal), 3);
  REQUIRE(orbs.size() == 10);
  CHECK(orbs[0].points == std::vector<Rat>{rat(43, 60)});
  CHECK(orbs[1].points == std::vector<Rat>{rat(4, 15), rat(5, 6)});
  CHECK(orbs[2].points.front() == rat(67, 190));
  CHECK(orbs[3].points.front() == rat(29, 55));
  CHECK(orbs[4].points.front() == rat(2, 31));
  CHECK(orbs[9].points.front() == rat(247, 490));
}

TEST_CASE("divergent realization produces the prescribed pairs") {
  Realization r16 = divergent_realization(kDiv4, 1, 6);
  CHECK(r16.pair.p == 1);
  CHECK(r16.pair.q == 6);
  CHECK(r16.pattern == Pattern::parse("(1,2,3,4,5,6)"));
  CHECK(r16.points ==
        std::vector<Rat>{rat(487, 969), rat(164, 323), rat(169, 323),
                         rat(184, 323), rat(229, 323), rat(887, 969)});

  Realization r17 = divergent_realization(kDiv4, 1, 7);
  CHECK(r17.pair.p == 1);
  CHECK(r17.pair.q == 7);
  CHECK(r17.points.size() == 7);

  Realization r29 = divergent_realization(kDiv4, 2, 9);
  CHECK(r29.pair.p == 2);
  CHECK(r29.pair.q == 9);
  CHECK(unfolding_pair(r29.pattern).p == 2);

  // orbits are genuine: forward orbit from the smallest point
  PLMap f = p_linear_map(kDiv4);
  for (const Realization* r : {&r16, &r17, &r29}) {
    CHECK(*std::min_element(r->points.begin(), r->points.end()) ==
          r->points.front());
    for (std::size_t i = 0; i < r->points.size(); ++i)
      CHECK(eval(f, r->points[i]) == r->points[(i + 1) % r->points.size()]);
  }

  CHECK_THROWS_AS(divergent_realization(kDiv4, 0, 6), std::invalid_argument);
  CHECK_THROWS_AS(divergent_realization(kDiv4, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(divergent_realization(kDiv4, 2, 8), std::invalid_argument);
  CHECK_THROWS_AS(divergent_realization(kThree, 1, 6), std::invalid_argument);
}

TEST_CASE("divergent realization sweeps the admissible window") {
  for (long long p = 1; 3 * p + 3 <= 12; ++p)
    for (long long q = 3 * p + 3; q <= 12; ++q) {
      Realization r = divergent_realization(kDiv4, p, q);
      CHECK(r.pair.p == p);
      CHECK(r.pair.q == q);
      CHECK(r.points.size() == static_cast<std::size_t>(q));
    }
}
