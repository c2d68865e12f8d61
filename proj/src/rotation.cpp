#include "unfold/rotation.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace unfold {

namespace {

// Running extreme of F over [domain_lo, x] (prefix) or [x, domain_hi]
// (suffix). Piecewise: on each segment the envelope is the pointwise extreme
// of F and the value carried from the processed side, so at most one new
// node appears per segment.
PLMap prefix_envelope(const PLMap& F, bool want_min) {
  std::vector<Rat> xs{F.xs.front()}, ys{F.ys.front()};
  auto push = [&](const Rat& x, const Rat& y) {
    if (xs.back() == x) return;
    xs.push_back(x);
    ys.push_back(y);
  };
  auto better = [&](const Rat& u, const Rat& v) -> const Rat& {
    return want_min ? (u < v ? u : v) : (u > v ? u : v);
  };
  Rat c = F.ys.front();
  for (std::size_t j = 1; j < F.xs.size(); ++j) {
    const Rat& yL = F.ys[j - 1];
    const Rat& yR = F.ys[j];
    if (c == yL) {
      push(F.xs[j], better(c, yR));
      c = better(c, yR);
    } else if (want_min ? (yR < c) : (yR > c)) {
      Rat t = F.xs[j - 1] + (c - yL) * (F.xs[j] - F.xs[j - 1]) / (yR - yL);
      push(t, c);
      push(F.xs[j], yR);
      c = yR;
    } else {
      push(F.xs[j], c);
    }
  }
  return simplify(make_plmap(std::move(xs), std::move(ys)));
}

PLMap suffix_envelope(const PLMap& F, bool want_min) {
  std::vector<Rat> xs{F.xs.back()}, ys{F.ys.back()};
  auto push = [&](const Rat& x, const Rat& y) {
    if (xs.back() == x) return;
    xs.push_back(x);
    ys.push_back(y);
  };
  auto better = [&](const Rat& u, const Rat& v) -> const Rat& {
    return want_min ? (u < v ? u : v) : (u > v ? u : v);
  };
  Rat c = F.ys.back();
  for (std::size_t j = F.xs.size() - 1; j-- > 0;) {
    const Rat& yR = F.ys[j + 1];
    const Rat& yL = F.ys[j];
    if (c == yR) {
      push(F.xs[j], better(c, yL));
      c = better(c, yL);
    } else if (want_min ? (yL < c) : (yL > c)) {
      Rat t = F.xs[j] + (c - yL) * (F.xs[j + 1] - F.xs[j]) / (yR - yL);
      push(t, c);
      push(F.xs[j], yL);
      c = yL;
    } else {
      push(F.xs[j], c);
    }
  }
  std::reverse(xs.begin(), xs.end());
  std::reverse(ys.begin(), ys.end());
  return simplify(make_plmap(std::move(xs), std::move(ys)));
}

// -1: H < id + p everywhere; +1: H > id + p everywhere; 0: rotation number
// of the q-th power is exactly p. Extremes of H - id sit at nodes.
int classify(const PLMap& H, const Rat& p) {
  Rat m = H.ys.front() - H.xs.front() - p;
  Rat M = m;
  for (std::size_t i = 1; i < H.xs.size(); ++i) {
    Rat d = H.ys[i] - H.xs[i] - p;
    if (d < m) m = d;
    if (d > M) M = d;
  }
  if (M < 0) return -1;
  if (m > 0) return 1;
  return 0;
}

}  // namespace

DegreeOneLift pour_lower(const DegreeOneLift& F) {
  PLMap s = suffix_envelope(F.fundamental, true);
  PLMap p = prefix_envelope(F.fundamental, true);
  for (Rat& y : p.ys) y += 1;
  return make_lift(pl_min(s, p));
}

DegreeOneLift pour_upper(const DegreeOneLift& F) {
  PLMap p = prefix_envelope(F.fundamental, false);
  PLMap s = suffix_envelope(F.fundamental, false);
  for (Rat& y : s.ys) y -= 1;
  return make_lift(pl_max(p, s));
}

bool is_monotone_lift(const DegreeOneLift& F) {
  for (std::size_t i = 0; i + 1 < F.fundamental.ys.size(); ++i)
    if (F.fundamental.ys[i + 1] < F.fundamental.ys[i]) return false;
  return true;
}

std::vector<std::pair<Rat, Rat>> flat_spots(const DegreeOneLift& F) {
  PLMap f = simplify(F.fundamental);
  std::vector<std::pair<Rat, Rat>> runs;
  std::vector<Rat> vals;
  for (std::size_t i = 0; i + 1 < f.xs.size(); ++i) {
    if (f.ys[i] == f.ys[i + 1]) {
      runs.emplace_back(f.xs[i], f.xs[i + 1]);
      vals.push_back(f.ys[i]);
    }
  }
  if (runs.size() >= 2 && runs.front().first == 0 && runs.back().second == 1 &&
      vals.back() == vals.front() + 1) {
    runs.back().second = runs.front().second + 1;
    runs.erase(runs.begin());
  }
  return runs;
}

RotationResult rotation_number(const DegreeOneLift& G, int max_den,
                               std::size_t node_cap) {
  if (!is_monotone_lift(G))
    throw std::invalid_argument("rotation number needs a monotone lift");
  if (max_den < 1) throw std::invalid_argument("max_den must be positive");
  const PLMap& g = G.fundamental;
  Rat dlo = g.ys.front() - g.xs.front(), dhi = dlo;
  for (std::size_t i = 1; i < g.xs.size(); ++i) {
    Rat d = g.ys[i] - g.xs[i];
    if (d < dlo) dlo = d;
    if (d > dhi) dhi = d;
  }
  auto exact = [](Rat v) {
    RotationResult r;
    r.exact = true;
    r.value = v;
    r.lo = v;
    r.hi = r.value;
    return r;
  };
  Int nlo = rat_floor(dlo);
  Int nhi = rat_floor(dhi) + 1;
  Int n = nlo;
  for (;; ++n) {
    if (n > nhi) throw internal_error("integer rotation scan ran away");
    int c = classify(g, Rat(n));
    if (c == 0) return exact(Rat(n));
    if (c < 0) break;  // the number sits strictly inside (n-1, n)
  }
  Int ln = n - 1, ld = 1, rn = n, rd = 1;
  DegreeOneLift L = G, R = G;
  while (true) {
    Int md = ld + rd;
    if (md > max_den) {
      RotationResult r;
      r.exact = false;
      r.lo = rat(ln, ld);
      r.hi = rat(rn, rd);
      return r;
    }
    DegreeOneLift M = lift_compose(L, R, node_cap);
    Int mn = ln + rn;
    int c = classify(M.fundamental, Rat(mn));
    if (c == 0) return exact(rat(mn, md));
    if (c < 0) {
      rn = mn;
      rd = md;
      R = M;
    } else {
      ln = mn;
      ld = md;
      L = M;
    }
  }
}

std::pair<RotationResult, RotationResult> rotation_set(const DegreeOneLift& F,
                                                       int max_den,
                                                       std::size_t node_cap) {
  return {rotation_number(pour_lower(F), max_den, node_cap),
          rotation_number(pour_upper(F), max_den, node_cap)};
}

Rat water_capacity(const DegreeOneLift& F) {
  DegreeOneLift Fl = pour_lower(F);
  std::vector<Rat> grid;
  std::merge(F.fundamental.xs.begin(), F.fundamental.xs.end(),
             Fl.fundamental.xs.begin(), Fl.fundamental.xs.end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  Rat cap = rat(0);
  for (const Rat& x : grid) {
    Rat d = eval(F.fundamental, x) - eval(Fl.fundamental, x);
    if (d > cap) cap = d;
  }
  return cap;
}

DegreeOneLift water_member(const DegreeOneLift& F, const Rat& mu) {
  if (mu < 0 || mu > water_capacity(F))
    throw std::invalid_argument("water level outside [0, capacity]");
  DegreeOneLift Fl = pour_lower(F);
  PLMap shifted = Fl.fundamental;
  for (Rat& y : shifted.ys) y += mu;
  return pour_upper(make_lift(pl_min(F.fundamental, shifted)));
}

CycleSearch find_cycle(const DegreeOneLift& G, long p, int q,
                       std::size_t node_cap) {
  if (q < 1) throw std::invalid_argument("period must be positive");
  if (std::gcd(p < 0 ? -p : p, static_cast<long>(q)) != 1)
    throw std::invalid_argument("rotation pair must be reduced");
  if (!is_monotone_lift(G))
    throw std::invalid_argument("cycle search needs a monotone lift");
  DegreeOneLift H = lift_iterate(G, q, node_cap);
  const PLMap& h = H.fundamental;
  std::vector<Rat> r(h.xs.size());
  for (std::size_t i = 0; i < h.xs.size(); ++i)
    r[i] = h.ys[i] - h.xs[i] - p;

  // root components of H - id - p on [0,1]: points (a == b) and intervals
  std::vector<std::pair<Rat, Rat>> comps;
  auto add_comp = [&](const Rat& a, const Rat& b) {
    if (!comps.empty() && comps.back().second == a)
      comps.back().second = b;
    else
      comps.emplace_back(a, b);
  };
  for (std::size_t i = 0; i + 1 < h.xs.size(); ++i) {
    const Rat& rL = r[i];
    const Rat& rR = r[i + 1];
    if (rL == 0 && rR == 0) {
      add_comp(h.xs[i], h.xs[i + 1]);
    } else if (rL == 0) {
      add_comp(h.xs[i], h.xs[i]);
    } else if (rR == 0) {
      add_comp(h.xs[i + 1], h.xs[i + 1]);
    } else if ((rL < 0 && rR > 0) || (rL > 0 && rR < 0)) {
      Rat t = h.xs[i] + rL * (h.xs[i + 1] - h.xs[i]) / (rL - rR);
      add_comp(t, t);
    }
  }
  if (!comps.empty() && comps.back().first == 1 && comps.back().second == 1 &&
      comps.front().first == 0)
    comps.pop_back();  // the circle point 1 duplicates 0
  if (comps.empty())
    throw std::invalid_argument("the lift has no cycle with this rotation pair");

  std::vector<Rat> starts;
  for (const auto& [a, b] : comps) {
    if (a == b) {
      if (a < 1) starts.push_back(a);
    } else {
      starts.push_back(a);
      starts.push_back((a + b) / 2);
      if (b < 1) starts.push_back(b);
    }
  }

  auto flats = flat_spots(G);
  auto hits_open_flat = [&](const Rat& u) {
    for (const auto& [fa, fb] : flats) {
      if (fa < u && u < fb) return true;
      Rat u1 = u + 1;
      if (fa < u1 && u1 < fb) return true;
    }
    return false;
  };
  auto orbit_points = [&](const Rat& x0) {
    std::vector<Rat> pts;
    pts.reserve(static_cast<std::size_t>(q));
    Rat x = x0;
    for (int t = 0; t < q; ++t) {
      pts.push_back(x - rat_floor(x));
      x = lift_eval(G, x);
    }
    if (x != x0 + p) throw internal_error("cycle search start was not a root");
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      throw internal_error("cycle of a reduced pair revisited a point");
    return pts;
  };

  for (const Rat& x0 : starts) {
    std::vector<Rat> pts = orbit_points(x0);
    bool clean = true;
    for (const Rat& u : pts)
      if (hits_open_flat(u)) {
        clean = false;
        break;
      }
    if (clean) return {std::move(pts), false};
  }
  return {orbit_points(starts.front()), true};
}

}  // namespace unfold
