#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "unfold/pattern.hpp"
#include "unfold/sharkovsky.hpp"

using namespace unfold;

namespace {

// All cyclic permutations of {1..q}: fix the cycle start at 1 and permute the
// rest, (q-1)! patterns.
template <typename Fn>
void for_each_pattern(int q, Fn&& fn) {
  std::vector<int> rest(static_cast<std::size_t>(q - 1));
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<int> cyc(static_cast<std::size_t>(q));
  cyc[0] = 1;
  do {
    std::copy(rest.begin(), rest.end(), cyc.begin() + 1);
    fn(Pattern::from_cycle(cyc));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

const Pattern kTrimodal = Pattern::parse("(1,2,5,7,10,3,6,8,9,4,11)");

}  // namespace

TEST_CASE("parse: cycle notation unrolls to the image list") {
  CHECK(kTrimodal.images() == std::vector<int>{2, 5, 6, 11, 7, 8, 10, 9, 4, 3, 1});
  CHECK(kTrimodal.period() == 11);
  CHECK(kTrimodal.max_pos() == 4);
  CHECK(kTrimodal.min_pos() == 11);
  CHECK(Pattern::parse("(1 2 3)").images() == std::vector<int>{2, 3, 1});
  CHECK(Pattern::parse("2,3,1").images() == std::vector<int>{2, 3, 1});
  CHECK(Pattern::parse("( 1, 3 ,4 , 2 )").images() == std::vector<int>{3, 1, 4, 2});
  CHECK(kTrimodal.cycle_notation() == "(1,2,5,7,10,3,6,8,9,4,11)");
}

TEST_CASE("parse: malformed input throws") {
  CHECK_THROWS_AS(Pattern::parse("(1,1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::parse("(1,2,4)"), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::parse("1,2"), std::invalid_argument);  // two fixed points
  CHECK_THROWS_AS(Pattern::parse("2,1,3"), std::invalid_argument);  // 3 is fixed
  CHECK_THROWS_AS(Pattern::parse("(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::parse("(a b)"), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::parse("0,1"), std::invalid_argument);
}

TEST_CASE("trajectory walks the orbit of position 1") {
  CHECK(Pattern::parse("(1 2 3)").trajectory() == std::vector<int>{1, 2, 3});
  CHECK(kTrimodal.trajectory() ==
        std::vector<int>{1, 2, 5, 7, 10, 3, 6, 8, 9, 4, 11});
}

TEST_CASE("over-rotation pairs") {
  auto orp = over_rotation_pair(kTrimodal);
  CHECK(orp.l == 3);
  CHECK(orp.q == 11);
  orp = over_rotation_pair(Pattern::parse("(1 2)"));
  CHECK(orp.l == 1);
  CHECK(orp.q == 2);
  orp = over_rotation_pair(Pattern::parse("(1 2 3)"));
  CHECK(orp.l == 1);
  CHECK(orp.q == 3);
  orp = over_rotation_pair(Pattern::parse("(1 3 4 2)"));
  CHECK(orp.l == 1);
  CHECK(orp.q == 4);
}

TEST_CASE("unfolding index sets via the folded walk") {
  CHECK(unfolding_index_set(kTrimodal) == std::vector<int>{0, 4, 6, 8, 10});
  CHECK(unfolding_index_set(Pattern::parse("(1 2)")) == std::vector<int>{0});
  CHECK(unfolding_index_set(Pattern::parse("(1 2 3)")) == std::vector<int>{0});
  CHECK(unfolding_index_set(Pattern::parse("(1 3 4 2)")) == std::vector<int>{0});
  // Reversed-orientation 5-pattern: one gain after a three-step Up run.
  CHECK(unfolding_index_set(Pattern({4, 1, 2, 5, 3})) == std::vector<int>{0});
}

TEST_CASE("unfolding pairs") {
  auto up = unfolding_pair(kTrimodal);
  CHECK(up.p == 5);
  CHECK(up.q == 11);
  CHECK(unfolding_pair(Pattern::parse("(1 2)")).p == 1);
  CHECK(unfolding_pair(Pattern::parse("(1 2 3)")).p == 1);
  CHECK(unfolding_pair(Pattern::parse("(1 2 3 4)")).p == 1);
  CHECK(unfolding_pair(Pattern::parse("(1 3 4 2)")).p == 1);
  CHECK(unfolding_pair(Pattern({4, 1, 2, 5, 3})).p == 1);
}

TEST_CASE("observable phi is the index-set indicator") {
  CHECK(observable_phi(kTrimodal, 4) == 1);
  CHECK(observable_phi(kTrimodal, 2) == 0);
  CHECK(observable_phi(kTrimodal, 0) == 1);
  int sum = 0;
  for (int i = 0; i < 11; ++i) sum += observable_phi(kTrimodal, i);
  CHECK(sum == 5);
  CHECK_THROWS_AS(observable_phi(kTrimodal, 11), std::invalid_argument);
  CHECK_THROWS_AS(observable_phi(kTrimodal, -1), std::invalid_argument);
}

TEST_CASE("modality counts strict interior turning points") {
  CHECK(modality(kTrimodal) == 3);
  CHECK(modality(Pattern::parse("(1 2)")) == 1);
  CHECK(modality(Pattern::parse("(1 2 3)")) == 1);
  CHECK(modality(Pattern::parse("(1 3 4 2)")) == 2);
}

TEST_CASE("divergent, convergent, sheer") {
  CHECK(is_divergent(Pattern::parse("(1 3 4 2)")));
  CHECK_FALSE(is_divergent(kTrimodal));
  CHECK_FALSE(is_divergent(Pattern::parse("(1 2 3)")));
  CHECK(is_convergent(kTrimodal));
  CHECK(is_sheer(Pattern::parse("(1 2)")));
  CHECK(is_sheer(Pattern::parse("(1 2 3)")));
  CHECK_FALSE(is_sheer(kTrimodal));  // ascent 7 -> 8 inside [max_pos, min_pos]
  CHECK_FALSE(is_sheer(Pattern::parse("(1 3 4 2)")));
}

TEST_CASE("reversal symmetry preserves both pairs, exhaustively to period 6") {
  for (int q = 2; q <= 6; ++q) {
    for_each_pattern(q, [](const Pattern& P) {
      const Pattern R = P.reversed();
      const auto o1 = over_rotation_pair(P);
      const auto o2 = over_rotation_pair(R);
      CHECK(o1.l == o2.l);
      const auto u1 = unfolding_pair(P);
      const auto u2 = unfolding_pair(R);
      CHECK(u1.p == u2.p);
      CHECK(is_divergent(P) == is_divergent(R));
      CHECK(modality(P) == modality(R));
    });
  }
}

TEST_CASE("pair bounds and the comparison chain, exhaustively to period 7") {
  for (int q = 2; q <= 7; ++q) {
    for_each_pattern(q, [q](const Pattern& P) {
      const auto up = unfolding_pair(P);
      CHECK(up.p >= 1);
      CHECK(2 * up.p <= q);
      const auto orp = over_rotation_pair(P);
      CHECK(orp.l >= 1);
      CHECK(2 * orp.l <= q);
      if (is_convergent(P)) {
        // orn <= un, with equality on sheer patterns; low modality forces sheer.
        CHECK(orp.l * up.q <= up.p * orp.q);
        if (is_sheer(P)) CHECK(orp.l == up.p);
        if (modality(P) <= 2) CHECK(is_sheer(P));
      }
    });
  }
}

TEST_CASE("min-position left of max-position forces divergence") {
  for (int q = 2; q <= 7; ++q) {
    for_each_pattern(q, [](const Pattern& P) {
      if (P.min_pos() < P.max_pos()) CHECK(is_divergent(P));
    });
  }
}

TEST_CASE("modified pairs") {
  auto mp = modified_pair(5, 11);
  CHECK(mp.t == rat(5, 11));
  CHECK(mp.m == 1);
  CHECK_FALSE(mp.degenerate);
  mp = modified_pair(2, 4);
  CHECK(mp.t == rat(1, 2));
  CHECK(mp.m == 2);
  mp = modified_pair(3, 6);
  CHECK(mp.t == rat(1, 2));
  CHECK(mp.m == 3);
  mp = modified_pair(0, 4);
  CHECK(mp.t == rat(0));
  CHECK(mp.degenerate);
  CHECK_THROWS_AS(modified_pair(1, 0), std::invalid_argument);
}

TEST_CASE("sharkovsky order: chain samples") {
  auto ge = [](std::uint64_t a, std::uint64_t b) {
    return sharkovsky_ge(SharkValue::of(a), SharkValue::of(b));
  };
  CHECK(ge(3, 7));
  CHECK(ge(3, 2));
  CHECK(ge(3, 1));
  CHECK(ge(5, 10));   // 5 before 2*5
  CHECK(ge(10, 12));  // 2*5 before 4*3
  CHECK(ge(8, 4));
  CHECK(ge(4, 2));
  CHECK_FALSE(ge(5, 3));
  CHECK_FALSE(ge(2, 4));
  CHECK_FALSE(ge(1, 2));
  CHECK(ge(6, 12));
  CHECK(ge(12, 8));  // any non-power forces every power of two
  CHECK(sharkovsky_ge(SharkValue::of(6), SharkValue::inf()));
  CHECK(sharkovsky_ge(SharkValue::inf(), SharkValue::of(8)));
  CHECK_FALSE(sharkovsky_ge(SharkValue::inf(), SharkValue::of(6)));
  CHECK_FALSE(sharkovsky_ge(SharkValue::of(4), SharkValue::inf()));
  CHECK(sharkovsky_ge(SharkValue::inf(), SharkValue::inf()));
}

TEST_CASE("sharkovsky order: total order axioms on 1..32 plus 2^inf") {
  std::vector<SharkValue> vals;
  for (std::uint64_t n = 1; n <= 32; ++n) vals.push_back(SharkValue::of(n));
  vals.push_back(SharkValue::inf());
  for (const auto& a : vals) {
    CHECK(sharkovsky_ge(a, a));
    for (const auto& b : vals) {
      const bool ab = sharkovsky_ge(a, b);
      const bool ba = sharkovsky_ge(b, a);
      CHECK((ab || ba));            // totality
      if (ab && ba) CHECK(a == b);  // antisymmetry
      for (const auto& c : vals) {
        if (ab && sharkovsky_ge(b, c)) CHECK(sharkovsky_ge(a, c));
      }
    }
  }
}

TEST_CASE("hull membership") {
  const auto hull = make_hull({rat(1, 3), MSpaceMark::finite(1)},
                              {rat(1, 2), MSpaceMark::finite(3)});
  CHECK(hull_contains(hull, {rat(2, 5), MSpaceMark::finite(7)}));
  // Endpoint prong segment is the forcing down-set of the endpoint mark, and
  // 3 heads the order, so every mark sits below it.
  CHECK(hull_contains(hull, {rat(1, 2), MSpaceMark::finite(5)}));
  CHECK(hull_contains(hull, {rat(1, 2), MSpaceMark::finite(2)}));
  CHECK(hull_contains(hull, {rat(1, 3), MSpaceMark::finite(1)}));
  CHECK_FALSE(hull_contains(hull, {rat(1, 3), MSpaceMark::finite(2)}));
  CHECK_FALSE(hull_contains(hull, {rat(1, 4), MSpaceMark::finite(1)}));
  CHECK_FALSE(hull_contains(hull, {rat(2, 5), MSpaceMark::zero()}));
  CHECK(hull_contains(hull, {rat(2, 5), MSpaceMark::two_inf()}));
  CHECK_THROWS_AS(make_hull({rat(1, 2), MSpaceMark::finite(1)},
                            {rat(1, 3), MSpaceMark::finite(1)}),
                  std::invalid_argument);
}

TEST_CASE("degenerate inputs") {
  const Pattern fixed({1});
  CHECK(fixed.period() == 1);
  CHECK_THROWS_AS(over_rotation_pair(fixed), std::invalid_argument);
  CHECK_THROWS_AS(unfolding_index_set(fixed), std::invalid_argument);
  CHECK_THROWS_AS(modality(fixed), std::invalid_argument);
}
