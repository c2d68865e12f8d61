#include "unfold/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unfold/forcing.hpp"
#include "unfold/heave.hpp"
#include "unfold/pattern.hpp"
#include "unfold/rational.hpp"
#include "unfold/rotation.hpp"
#include "unfold/sharkovsky.hpp"
#include "unfold/unfolding.hpp"

namespace unfold {

namespace {

void fail(SuiteResult& r, std::string msg) {
  ++r.failures;
  if (r.failures <= 8) r.notes.push_back(std::move(msg));
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  void stamp(SuiteResult& r) const {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    r.notes.push_back("elapsed: " + std::to_string(ms) + " ms");
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Visits every cyclic permutation of {1..q} exactly once, as the cycle
// (1, a2, ..., aq) over the permutations of {2..q}.
template <typename Fn>
void for_each_pattern(int q, Fn&& fn) {
  std::vector<int> rest(static_cast<std::size_t>(q) - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<int> cyc(static_cast<std::size_t>(q));
  cyc[0] = 1;
  do {
    std::copy(rest.begin(), rest.end(), cyc.begin() + 1);
    fn(Pattern::from_cycle(cyc));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

// a <= b pointwise on a shared domain, exactly.
bool pl_le(const PLMap& a, const PLMap& b) {
  return same_function(pl_max(a, b), b);
}

// sup |a - b| over a shared domain. The difference is linear between merged
// nodes, so its extreme absolute value sits on a merged node.
Rat sup_abs_diff(const PLMap& a, const PLMap& b) {
  std::vector<Rat> xs;
  xs.reserve(a.xs.size() + b.xs.size());
  std::merge(a.xs.begin(), a.xs.end(), b.xs.begin(), b.xs.end(),
             std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Rat best = 0;
  for (const Rat& x : xs) {
    Rat d = eval(a, x) - eval(b, x);
    if (d < 0) d = -d;
    if (best < d) best = d;
  }
  return best;
}

long pick(std::mt19937_64& eng, long n) {  // uniform-ish in 0..n-1
  return static_cast<long>(eng() % static_cast<std::uint64_t>(n));
}

std::vector<Rat> random_grid(std::mt19937_64& eng) {
  std::set<Rat> interior;
  const int want = 2 + static_cast<int>(pick(eng, 4));
  for (int guard = 0; static_cast<int>(interior.size()) < want && guard < 64;
       ++guard) {
    const long den = 2 + pick(eng, 23);
    const long num = 1 + pick(eng, den - 1);
    interior.insert(rat(num, den));
  }
  std::vector<Rat> xs{rat(0)};
  xs.insert(xs.end(), interior.begin(), interior.end());
  xs.push_back(rat(1));
  return xs;
}

DegreeOneLift random_lift(std::mt19937_64& eng) {
  std::vector<Rat> xs = random_grid(eng);
  const Rat y0 = rat(pick(eng, 17) - 8, 8);
  std::vector<Rat> ys{y0};
  for (std::size_t i = 1; i + 1 < xs.size(); ++i)
    ys.push_back(y0 + rat(pick(eng, 25) - 8, 8));
  ys.push_back(y0 + 1);
  return make_lift(make_plmap(std::move(xs), std::move(ys)));
}

DegreeOneLift random_monotone_lift(std::mt19937_64& eng) {
  std::vector<Rat> xs = random_grid(eng);
  const Rat y0 = rat(pick(eng, 17) - 8, 8);
  std::vector<Rat> deltas;
  Rat total = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    deltas.push_back(rat(pick(eng, 5)));
    total += deltas.back();
  }
  if (total == 0) deltas.back() = total = 1;
  std::vector<Rat> ys{y0};
  for (const Rat& d : deltas) ys.push_back(ys.back() + d / total);
  return make_lift(make_plmap(std::move(xs), std::move(ys)));
}

// A monotone lift on the same grid dominating G node by node, hence
// everywhere.
DegreeOneLift dominating_lift(const DegreeOneLift& G, std::mt19937_64& eng) {
  const PLMap& g = G.fundamental;
  const Rat y0 = g.ys.front() + rat(pick(eng, 5), 8);
  const Rat cap = y0 + 1;
  std::vector<Rat> ys{y0};
  for (std::size_t i = 1; i + 1 < g.xs.size(); ++i) {
    Rat y = std::max(ys.back(), g.ys[i]) + rat(pick(eng, 3), 12);
    if (cap < y) y = cap;
    ys.push_back(y);
  }
  ys.push_back(cap);
  return make_lift(make_plmap(g.xs, std::move(ys)));
}

std::string rr_text(const RotationResult& r) {
  if (r.exact) return to_string(r.value);
  return "[" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
}

}  // namespace

std::string suite_summary(const SuiteResult& r) {
  std::string out = r.name + ": " + (r.passed ? "PASS" : "FAIL") + " (" +
                    std::to_string(r.cases) + " checks, " +
                    std::to_string(r.failures) + " failures)";
  for (const std::string& n : r.notes) out += "\n  " + n;
  return out;
}

SuiteResult verify_routes(int max_q) {
  SuiteResult r;
  r.name = "routes";
  Stopwatch sw;
  for (int q = 2; q <= max_q; ++q) {
    for_each_pattern(q, [&](const Pattern& P) {
      ++r.cases;
      const UnfoldingPair a = unfolding_pair(P);
      const UnfoldingPair b = unfolding_number_via_heave(P);
      if (a.p != b.p || a.q != b.q)
        fail(r, P.cycle_notation() + ": index-set route (" +
                    std::to_string(a.p) + "," + std::to_string(a.q) +
                    ") vs heave route (" + std::to_string(b.p) + "," +
                    std::to_string(b.q) + ")");
    });
  }
  r.notes.push_back("patterns through period " + std::to_string(max_q) +
                    ": " + std::to_string(r.cases));
  sw.stamp(r);
  r.passed = r.failures == 0;
  return r;
}

SuiteResult verify_comparison(int max_q) {
  SuiteResult r;
  r.name = "comparison";
  Stopwatch sw;
  long long convergent = 0;
  for (int q = 2; q <= max_q; ++q) {
    for_each_pattern(q, [&](const Pattern& P) {
      if (!is_convergent(P)) return;
      ++convergent;
      const OverRotationPair orp = over_rotation_pair(P);
      const UnfoldingPair up = unfolding_pair(P);
      const Rat orn = rat(orp.l, orp.q);
      const Rat un = rat(up.p, up.q);
      ++r.cases;
      if (un < orn)
        fail(r, P.cycle_notation() + ": orn " + to_string(orn) +
                    " exceeds un " + to_string(un));
      if (is_sheer(P)) {
        ++r.cases;
        if (orn != un)
          fail(r, P.cycle_notation() + ": sheer but orn " + to_string(orn) +
                      " != un " + to_string(un));
      }
      if (modality(P) <= 2) {
        ++r.cases;
        if (!is_sheer(P))
          fail(r, P.cycle_notation() + ": modality " +
                      std::to_string(modality(P)) + " yet not sheer");
      }
    });
  }
  r.notes.push_back("convergent patterns through period " +
                    std::to_string(max_q) + ": " + std::to_string(convergent));
  sw.stamp(r);
  r.passed = r.failures == 0;
  return r;
}

SuiteResult verify_pouring(int lifts, std::uint64_t seed) {
  SuiteResult r;
  r.name = "pouring";
  Stopwatch sw;
  std::mt19937_64 eng(seed);
  bool have_prev = false;
  DegreeOneLift prev;
  DegreeOneLift prev_lo, prev_hi;
  for (int i = 0; i < lifts; ++i) {
    const DegreeOneLift F = random_lift(eng);
    const DegreeOneLift lo = pour_lower(F);
    const DegreeOneLift hi = pour_upper(F);
    const std::string tag = "lift #" + std::to_string(i);

    ++r.cases;
    if (!pl_le(lo.fundamental, F.fundamental) ||
        !pl_le(F.fundamental, hi.fundamental))
      fail(r, tag + ": envelope sandwich violated");
    ++r.cases;
    if (!is_monotone_lift(lo) || !is_monotone_lift(hi))
      fail(r, tag + ": poured envelope not monotone");
    ++r.cases;
    if (!same_function(pour_lower(lo).fundamental, lo.fundamental) ||
        !same_function(pour_upper(hi).fundamental, hi.fundamental))
      fail(r, tag + ": pouring is not idempotent");
    if (is_monotone_lift(F)) {
      ++r.cases;
      if (!same_function(lo.fundamental, F.fundamental) ||
          !same_function(hi.fundamental, F.fundamental))
        fail(r, tag + ": monotone lift moved by pouring");
    }

    const Rat cap = water_capacity(F);
    ++r.cases;
    if (cap < 0) fail(r, tag + ": negative capacity");
    ++r.cases;
    if (!same_function(water_member(F, rat(0)).fundamental, lo.fundamental))
      fail(r, tag + ": mu = 0 is not the lower envelope");
    ++r.cases;
    if (!same_function(water_member(F, cap).fundamental, hi.fundamental))
      fail(r, tag + ": mu = capacity is not the upper envelope");

    const Rat mu1 = cap * rat(pick(eng, 9), 8);
    const Rat mu2 = cap * rat(pick(eng, 9), 8);
    const DegreeOneLift w1 = water_member(F, std::min(mu1, mu2));
    const DegreeOneLift w2 = water_member(F, std::max(mu1, mu2));
    ++r.cases;
    if (!is_monotone_lift(w1) || !is_monotone_lift(w2) ||
        !pl_le(w1.fundamental, w2.fundamental))
      fail(r, tag + ": family not monotone in mu");
    ++r.cases;
    if (!pl_le(lo.fundamental, w1.fundamental) ||
        !pl_le(w2.fundamental, hi.fundamental))
      fail(r, tag + ": family escapes the envelopes");

    if (have_prev) {
      // Pouring contracts the sup distance.
      const Rat d = sup_abs_diff(F.fundamental, prev.fundamental);
      ++r.cases;
      if (d < sup_abs_diff(lo.fundamental, prev_lo.fundamental) ||
          d < sup_abs_diff(hi.fundamental, prev_hi.fundamental))
        fail(r, tag + ": envelopes farther apart than the lifts");
    }
    prev = F;
    prev_lo = lo;
    prev_hi = hi;
    have_prev = true;
  }
  r.notes.push_back("random lifts: " + std::to_string(lifts) + ", seed " +
                    std::to_string(seed));
  sw.stamp(r);
  r.passed = r.failures == 0;
  return r;
}

SuiteResult verify_rotation(int max_den, int pairs, std::uint64_t seed) {
  SuiteResult r;
  r.name = "rotation";
  Stopwatch sw;
  long long translations = 0;
  for (long q = 1; q <= max_den; ++q) {
    for (long p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ++translations;
      const Rat shift = rat(p, q);
      const DegreeOneLift G =
          make_lift(make_plmap({rat(0), rat(1)}, {shift, shift + 1}));
      const RotationResult rr = rotation_number(G, max_den);
      ++r.cases;
      if (!rr.exact || rr.value != shift)
        fail(r, "translation by " + to_string(shift) + ": got " +
                    rr_text(rr));
    }
  }

  std::mt19937_64 eng(seed);
  for (int i = 0; i < pairs; ++i) {
    const DegreeOneLift G = random_monotone_lift(eng);
    const DegreeOneLift H = dominating_lift(G, eng);
    const std::string tag = "pair #" + std::to_string(i);
    const RotationResult rg = rotation_number(G, max_den);
    const RotationResult rh = rotation_number(H, max_den);
    ++r.cases;
    if (rh.hi < rg.lo)
      fail(r, tag + ": rho(G) = " + rr_text(rg) + " above rho(H) = " +
                  rr_text(rh));
    if (rg.exact && rh.exact) {
      ++r.cases;
      if (rh.value < rg.value)
        fail(r, tag + ": exact order violated, " + to_string(rg.value) +
                    " > " + to_string(rh.value));
    }

    PLMap up = G.fundamental;
    for (Rat& y : up.ys) y += 1;
    const RotationResult rs = rotation_number(make_lift(std::move(up)),
                                              max_den);
    ++r.cases;
    if (rs.exact != rg.exact || rs.lo != rg.lo + 1 || rs.hi != rg.hi + 1 ||
        (rg.exact && rs.value != rg.value + 1))
      fail(r, tag + ": shift law broken, rho(G) = " + rr_text(rg) +
                  " but rho(G + 1) = " + rr_text(rs));
  }
  r.notes.push_back("translations with denominator <= " +
                    std::to_string(max_den) + ": " +
                    std::to_string(translations) + "; monotone pairs: " +
                    std::to_string(pairs) + ", seed " + std::to_string(seed));
  sw.stamp(r);
  r.passed = r.failures == 0;
  return r;
}

SuiteResult verify_divergent(int max_q) {
  SuiteResult r;
  r.name = "divergent";
  Stopwatch sw;
  const Pattern base = Pattern::from_cycle({1, 3, 4, 2});
  const PLMap f = p_linear_map(base);
  for (long long p = 1; 3 * p + 3 <= max_q; ++p) {
    for (long long q = 3 * p + 3; q <= max_q; ++q) {
      ++r.cases;
      const std::string tag =
          "(p,q) = (" + std::to_string(p) + "," + std::to_string(q) + ")";
      try {
        const Realization w = divergent_realization(base, p, q);
        bool ok = w.pair.p == p && w.pair.q == q &&
                  static_cast<long long>(w.points.size()) == q;
        const UnfoldingPair up = unfolding_pair(w.pattern);
        ok = ok && up.p == p && up.q == q;
        for (std::size_t i = 0; ok && i < w.points.size(); ++i) {
          const Rat next = eval(f, w.points[i]);
          const Rat want = i + 1 < w.points.size()
                               ? w.points[i + 1]
                               : w.points.front();
          ok = next == want;
        }
        if (!ok) fail(r, tag + ": witness cycle fails its checks");
      } catch (const std::exception& e) {
        fail(r, tag + ": " + e.what());
      }
    }
  }
  r.notes.push_back("pairs with 3p + 3 <= q <= " + std::to_string(max_q) +
                    ": " + std::to_string(r.cases));
  sw.stamp(r);
  r.passed = r.failures == 0;
  return r;
}

IntervalVerdict verify_interval_detailed(int max_q, int max_period,
                                         std::size_t node_cap) {
  IntervalVerdict v;
  SuiteResult& r = v.suite;
  r.name = "interval";
  Stopwatch sw;
  long long upper_fail_all = 0, upper_fail_standard = 0, member_fail = 0;
  long long patterns = 0, orbits = 0, brackets = 0;
  for (int q = 2; q <= max_q; ++q) {
    for_each_pattern(q, [&](const Pattern& P) {
      ++patterns;
      const PLMap f = p_linear_map(P);
      const DegreeOneLift F = heaved(f);
      const UnfoldingInterval iv = unfolding_interval(f, 64, node_cap);
      const bool standard = P.max_pos() < P.min_pos();

      ++r.cases;
      if (!iv.upper_is_half) {
        ++upper_fail_all;
        if (standard) ++upper_fail_standard;
        fail(r, P.cycle_notation() + ": upper envelope rotation " +
                    rr_text(iv.upper) +
                    (standard ? "" : " (max position after min position)"));
      }

      // Sound lower bound even when u_f only came back as a bracket.
      const Rat lo_bound = iv.lower.exact ? iv.lower.value : iv.lower.lo;
      if (!iv.lower.exact) ++brackets;
      try {
        for (const PeriodicOrbit& orb :
             periodic_orbits(f, max_period, node_cap)) {
          ++orbits;
          ++r.cases;
          const AmbientPair ap =
              ambient_pair(F, orb.points.front(), orb.period);
          const Rat un = rat(ap.gain, Int(static_cast<long>(ap.period)));
          if (un < lo_bound || rat(1, 2) < un) {
            ++member_fail;
            fail(r, P.cycle_notation() + ": cycle of period " +
                        std::to_string(orb.period) + " has un " +
                        to_string(un) + " outside [" + to_string(lo_bound) +
                        ", 1/2]");
          }
        }
      } catch (const std::exception& e) {
        ++member_fail;
        ++r.cases;
        fail(r, P.cycle_notation() + ": cycle scan aborted: " + e.what());
      }
    });
  }

  const UnfoldingInterval fx =
      unfolding_interval(p_linear_map(Pattern::from_cycle({1, 2, 3})));
  ++r.cases;
  v.fixture = fx.lower.exact && fx.lower.value == rat(1, 3);
  if (!v.fixture)
    fail(r, "3-cycle fixture: u_f came back " + rr_text(fx.lower));

  v.upper_all = upper_fail_all == 0;
  v.upper_standard = upper_fail_standard == 0;
  v.membership = member_fail == 0;
  r.notes.push_back(
      "patterns: " + std::to_string(patterns) + "; cycles of period <= " +
      std::to_string(max_period) + ": " + std::to_string(orbits));
  r.notes.push_back(
      "upper endpoint 1/2: " + std::to_string(upper_fail_all) +
      " failures overall, " + std::to_string(upper_fail_standard) +
      " with max position before min position");
  if (brackets > 0)
    r.notes.push_back("patterns with only a bracketed u_f: " +
                      std::to_string(brackets));
  sw.stamp(r);
  r.passed = r.failures == 0;
  return v;
}

SuiteResult verify_interval(int max_q, int max_period, std::size_t node_cap) {
  return verify_interval_detailed(max_q, max_period, node_cap).suite;
}

SuiteResult verify_sharkovsky(int max_q, int max_period, std::uint64_t domain,
                              std::size_t node_cap) {
  SuiteResult r;
  r.name = "sharkovsky";
  Stopwatch sw;
  std::vector<SharkValue> vals;
  for (std::uint64_t n = 1; n <= domain; ++n) vals.push_back(SharkValue::of(n));
  vals.push_back(SharkValue::inf());

  for (const SharkValue& a : vals) {
    ++r.cases;
    if (!sharkovsky_ge(a, a)) fail(r, "order not reflexive");
  }
  for (const SharkValue& a : vals)
    for (const SharkValue& b : vals) {
      ++r.cases;
      if (!sharkovsky_ge(a, b) && !sharkovsky_ge(b, a))
        fail(r, "order not total");
      ++r.cases;
      if (sharkovsky_ge(a, b) && sharkovsky_ge(b, a) && !(a == b))
        fail(r, "order not antisymmetric");
    }
  for (const SharkValue& a : vals)
    for (const SharkValue& b : vals) {
      if (!sharkovsky_ge(a, b)) continue;
      for (const SharkValue& c : vals) {
        ++r.cases;
        if (sharkovsky_ge(b, c) && !sharkovsky_ge(a, c))
          fail(r, "order not transitive");
      }
    }

  // The displayed chain: odd rows by doubling factor, then 2^inf, then the
  // powers of two descending. Over {1..domain} it exhausts every value.
  std::vector<SharkValue> chain;
  for (std::uint64_t f = 1; 3 * f <= domain; f *= 2)
    for (std::uint64_t odd = 3; odd * f <= domain; odd += 2)
      chain.push_back(SharkValue::of(odd * f));
  chain.push_back(SharkValue::inf());
  std::uint64_t pow2 = 1;
  while (2 * pow2 <= domain) pow2 *= 2;
  for (std::uint64_t p = pow2; p >= 1; p /= 2) chain.push_back(SharkValue::of(p));
  ++r.cases;
  if (chain.size() != vals.size())
    fail(r, "chain misses part of the domain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    ++r.cases;
    if (!sharkovsky_ge(chain[i], chain[i + 1]) ||
        sharkovsky_ge(chain[i + 1], chain[i]))
      fail(r, "chain not strictly decreasing at step " + std::to_string(i));
  }

  long long patterns = 0;
  for (int q = 2; q <= max_q; ++q) {
    for_each_pattern(q, [&](const Pattern& P) {
      ++patterns;
      std::set<long long> periods;
      try {
        for (const SpectrumEntry& e :
             forced_spectrum(P, max_period, node_cap))
          periods.insert(e.period);
      } catch (const std::exception& e) {
        ++r.cases;
        fail(r, P.cycle_notation() + ": spectrum aborted: " + e.what());
        return;
      }
      for (const long long s : periods)
        for (long long t = 1; t <= max_period; ++t) {
          if (!sharkovsky_ge(SharkValue::of(static_cast<std::uint64_t>(s)),
                             SharkValue::of(static_cast<std::uint64_t>(t))))
            continue;
          ++r.cases;
          if (periods.count(t) == 0)
            fail(r, P.cycle_notation() + ": period " + std::to_string(s) +
                        " present but forced period " + std::to_string(t) +
                        " missing");
        }
    });
  }
  r.notes.push_back("domain {1.." + std::to_string(domain) +
                    "} with 2^inf; spectra of " + std::to_string(patterns) +
                    " patterns to period " + std::to_string(max_period));
  sw.stamp(r);
  r.passed = r.failures == 0;
  return r;
}

SuiteResult verify_realization(int max_q, int max_den, long long period_cap,
                               std::size_t node_cap) {
  SuiteResult r;
  r.name = "realization";
  Stopwatch sw;
  long long cohort = 0, skipped = 0, degenerate = 0;
  for (int q = 2; q <= max_q; ++q) {
    for_each_pattern(q, [&](const Pattern& P) {
      const PLMap f = p_linear_map(P);
      const UnfoldingInterval iv = unfolding_interval(f, 64, node_cap);
      if (!iv.lower.exact || iv.lower.value.get_den() > max_den) {
        ++skipped;
        return;
      }
      ++cohort;
      ++r.cases;
      const Rat u = iv.lower.value;
      RealizeResult res;
      try {
        res = realize_minimal(f, period_cap, node_cap);
      } catch (const std::exception& e) {
        fail(r, P.cycle_notation() + ": " + e.what());
        return;
      }
      if (u == 0) {
        ++degenerate;
        if (!res.degenerate)
          fail(r, P.cycle_notation() + ": u_f = 0 not flagged degenerate");
        return;
      }
      if (!res.found) {
        fail(r, P.cycle_notation() + ": u_f = " + to_string(u) +
                    " unrealized through period " +
                    std::to_string(res.searched_cap) +
                    (res.note.empty() ? "" : "; " + res.note));
        return;
      }
      const Rat got = rat(res.pair.gain, Int(static_cast<long>(res.pair.period)));
      if (got != u)
        fail(r, P.cycle_notation() + ": realized " + to_string(got) +
                    " instead of " + to_string(u));
    });
  }
  r.notes.push_back("cohort with exact u_f, denominator <= " +
                    std::to_string(max_den) + ": " + std::to_string(cohort) +
                    " (" + std::to_string(degenerate) + " degenerate, " +
                    std::to_string(skipped) + " outside)");
  sw.stamp(r);
  r.passed = r.failures == 0;
  return r;
}

}  // namespace unfold
