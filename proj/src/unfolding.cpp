#include "unfold/unfolding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace unfold {

namespace {

// Exact integer value of an integral rational.
Int whole(const Rat& r) { return r.get_num(); }

}  // namespace

bool operator==(const AmbientPair& a, const AmbientPair& b) {
  return a.gain == b.gain && a.period == b.period;
}

UnfoldingPair unfolding_number_via_heave(const Pattern& P) {
  if (P.period() < 2)
    throw std::invalid_argument("unfolding number needs period >= 2");
  const DegreeOneLift F = heaved(p_linear_map(P));
  Rat y = 0;
  for (int i = 0; i < P.period(); ++i) y = lift_eval(F, y);
  if (!is_integer(y))
    throw internal_error("heaved trajectory of 0 failed to close");
  return make_unfolding_pair(whole(y).get_si(), P.period());
}

AmbientPair ambient_pair(const DegreeOneLift& F, const Rat& x, long long T) {
  if (T < 1) throw std::invalid_argument("ambient pair needs a period >= 1");
  const Rat y0 = x / 2;
  Rat y = y0;
  for (long long i = 0; i < T; ++i) y = lift_eval(F, y);
  const Rat yT = y;
  if (is_integer(yT - y0)) return {whole(yT - y0), T};
  for (long long i = 0; i < T; ++i) y = lift_eval(F, y);
  // y = F^(2T)(y0). The fold of y0 is T-periodic under the miniature, so the
  // trajectory mod 1 lives on {fold, 1 - fold} orbits and one of the two
  // remaining closures must hold.
  if (is_integer(y - yT)) return {whole(y - yT), T};
  if (is_integer(y - y0)) return {whole(y - y0), 2 * T};
  throw internal_error("lift trajectory failed to close within two periods");
}

UnfoldingInterval unfolding_interval(const PLMap& f, int max_den,
                                     std::size_t node_cap) {
  const DegreeOneLift F = heaved(f);
  UnfoldingInterval out;
  out.lower = rotation_number(pour_lower(F), max_den, node_cap);
  out.upper = rotation_number(pour_upper(F), max_den, node_cap);
  out.upper_is_half = out.upper.exact && out.upper.value == rat(1, 2);
  return out;
}

std::vector<ModifiedPair> mup_set(const PLMap& f, int N,
                                  std::size_t node_cap) {
  if (N < 2) throw std::invalid_argument("mup set needs N >= 2");
  const DegreeOneLift F = heaved(f);
  std::set<ModifiedPair> acc;
  for (const PeriodicOrbit& orb : periodic_orbits(f, N, node_cap)) {
    const AmbientPair ap = ambient_pair(F, orb.points.front(), orb.period);
    acc.insert(modified_pair(ap.gain.get_si(), ap.period));
  }
  return {acc.begin(), acc.end()};
}

UnfoldingEstimate unfolding_set_estimate(const PLMap& f, const Rat& x,
                                         int horizon) {
  if (horizon < 1) throw std::invalid_argument("estimate needs horizon >= 1");
  if (x < domain_lo(f) || domain_hi(f) < x)
    throw std::invalid_argument("estimate point outside the domain");
  const DegreeOneLift F = heaved(f);
  UnfoldingEstimate out;
  out.horizon = horizon;

  std::vector<Rat> traj;
  traj.reserve(static_cast<std::size_t>(horizon) + 1);
  traj.push_back(x / 2);
  std::map<Rat, int> seen;
  seen.emplace(frac_part(traj[0]), 0);
  for (int n = 1; n <= horizon; ++n) {
    traj.push_back(lift_eval(F, traj.back()));
    const auto [it, fresh] = seen.emplace(frac_part(traj.back()), n);
    if (!fresh) {
      // Same point mod 1: the trajectory is periodic from step it->second on
      // and the average displacement converges to gain / period.
      const int start = it->second;
      const Rat gain = traj[static_cast<std::size_t>(n)] -
                       traj[static_cast<std::size_t>(start)];
      out.lower = out.upper = gain / rat(n - start);
      out.exact = true;
      return out;
    }
  }

  bool first = true;
  for (int n = std::max(1, horizon / 2); n <= horizon; ++n) {
    const Rat avg = (traj[static_cast<std::size_t>(n)] - traj[0]) / rat(n);
    if (first || avg < out.lower) out.lower = avg;
    if (first || out.upper < avg) out.upper = avg;
    first = false;
  }
  return out;
}

RealizeResult realize_minimal(const PLMap& f, long long period_cap,
                              std::size_t node_cap) {
  const UnfoldingInterval iv = unfolding_interval(f, 64, node_cap);
  if (!iv.lower.exact)
    throw std::invalid_argument(
        "u_f is not certified rational at the default denominator budget");
  const Rat u = iv.lower.value;

  RealizeResult res;
  if (u == 0) {
    // Pairs with zero gain correspond to no cycle; nothing to search for.
    res.degenerate = true;
    return res;
  }

  const long long den = u.get_den().get_si();
  const long long num = u.get_num().get_si();
  if (period_cap <= 0) period_cap = 3 * den;

  const DegreeOneLift F = heaved(f);

  // Probe: a rational cycle of the lower envelope that avoids its flat spots
  // is a genuine trajectory of F, and its fold is a cycle of f realizing
  // u_f. That bounds the minimal period from above, so the scan below never
  // needs to look past it (and cannot come back empty once the probe hits).
  long long scan_to = period_cap;
  try {
    const CycleSearch cs = find_cycle(
        pour_lower(F), static_cast<long>(num), static_cast<int>(den),
        node_cap);
    if (!cs.meets_flat_closure) {
      const Rat x0 = 2 * fold_point(cs.points.front());
      long long T = 0;
      Rat z = x0;
      for (long long t = 1; t <= den; ++t) {
        z = eval(f, z);
        if (z == x0) {
          T = t;
          break;
        }
      }
      if (T > 0) {
        const AmbientPair ap = ambient_pair(F, x0, T);
        // A hit pins the answer at period <= T even when T exceeds the
        // caller's budget; a genuine realization beats a budget NotFound.
        if (ap.gain > 0 && rat(ap.gain, Int(static_cast<long>(ap.period))) == u) scan_to = T;
      }
    }
  } catch (const std::invalid_argument&) {
    // No clean envelope cycle; scan the full budget.
  }
  // Scan period by period so a node-budget blowup at some period k still
  // leaves the verdict for periods below k standing.
  for (long long k = 1; k <= scan_to; ++k) {
    std::vector<PeriodicOrbit> orbits;
    try {
      orbits = periodic_orbits(f, static_cast<int>(k), node_cap);
    } catch (const internal_error&) {
      res.note = "node budget exhausted before period " + std::to_string(k);
      return res;
    }
    for (const PeriodicOrbit& orb : orbits) {
      if (orb.period != k) continue;
      const AmbientPair ap = ambient_pair(F, orb.points.front(), orb.period);
      if (ap.gain > 0 &&
          rat(ap.gain, Int(static_cast<long>(ap.period))) == u) {
        res.found = true;
        res.points = orb.points;
        res.period = orb.period;
        res.pair = ap;
        res.searched_cap = k;
        return res;
      }
    }
    res.searched_cap = k;
  }
  return res;
}

}  // namespace unfold
