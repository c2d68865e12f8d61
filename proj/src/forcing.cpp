#include "unfold/forcing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "unfold/plmap.hpp"

namespace unfold {

namespace {

// Exact image of f over [s, t]: extremes occur at the ends or interior nodes.
Segment seg_image(const PLMap& f, const Segment& seg) {
  Rat lo = eval(f, seg.first), hi = lo;
  auto absorb = [&](const Rat& v) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  };
  absorb(eval(f, seg.second));
  for (std::size_t i = 0; i < f.xs.size(); ++i)
    if (seg.first < f.xs[i] && f.xs[i] < seg.second) absorb(f.ys[i]);
  return {lo, hi};
}

bool covers_segment(const PLMap& f, const Segment& from, const Segment& to) {
  Segment img = seg_image(f, from);
  return img.first <= to.first && to.second <= img.second;
}

// Clip [dl, dh] to the set where lo <= a*x + b <= hi; false when empty.
bool clip_affine(Rat& dl, Rat& dh, const Rat& a, const Rat& b, const Rat& lo,
                 const Rat& hi) {
  if (a == 0) return lo <= b && b <= hi;
  Rat u = (lo - b) / a, v = (hi - b) / a;
  if (a < 0) std::swap(u, v);
  if (u > dl) dl = u;
  if (v < dh) dh = v;
  return dl <= dh;
}

// Depth-first affine pullback of an interval itinerary. At depth j the branch
// a*x + b equals f^j on [dl, dh] and the image already lies in itinerary[j].
struct LoopSolver {
  const PLMap& f;
  const std::vector<Segment>& itin;
  bool found = false;
  bool isolated = true;
  Rat x;

  void dfs(std::size_t j, Rat dl, Rat dh, const Rat& a, const Rat& b) {
    if (found) return;
    if (j == itin.size()) {
      if (a == 1) {
        // identity branch: the whole segment closes up
        if (b == 0) {
          found = true;
          isolated = false;
          x = (dl + dh) / 2;
        }
        return;
      }
      Rat cand = b / (1 - a);
      if (dl <= cand && cand <= dh) {
        found = true;
        x = cand;
      }
      return;
    }
    for (std::size_t i = 0; i + 1 < f.xs.size(); ++i) {
      Rat ndl = dl, ndh = dh;
      if (!clip_affine(ndl, ndh, a, b, f.xs[i], f.xs[i + 1])) continue;
      Rat m = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
      Rat na = m * a;
      Rat nb = m * b + (f.ys[i] - m * f.xs[i]);
      if (j + 1 < itin.size() &&
          !clip_affine(ndl, ndh, na, nb, itin[j + 1].first, itin[j + 1].second))
        continue;
      dfs(j + 1, ndl, ndh, na, nb);
      if (found) return;
    }
  }
};

}  // namespace

MarkovGraph markov_graph(const Pattern& P) {
  if (P.period() < 2)
    throw std::invalid_argument("markov graph needs a pattern of period >= 2");
  PLMap f = p_linear_map(P);
  const int n = P.period() - 1;
  MarkovGraph G;
  G.intervals.reserve(n);
  G.covers.assign(n, {});
  for (int i = 0; i < n; ++i) G.intervals.push_back({f.xs[i], f.xs[i + 1]});
  for (int i = 0; i < n; ++i) {
    Rat lo = std::min(f.ys[i], f.ys[i + 1]);
    Rat hi = std::max(f.ys[i], f.ys[i + 1]);
    for (int j = 0; j < n; ++j)
      if (lo <= G.intervals[j].first && G.intervals[j].second <= hi)
        G.covers[i].push_back(j);
  }
  return G;
}

std::vector<Loop> loops_up_to(const MarkovGraph& G, int L) {
  if (L < 1) throw std::invalid_argument("loop length bound must be at least 1");
  const int n = static_cast<int>(G.intervals.size());

  auto canonical = [](const Loop& w) {
    Loop best = w;
    Loop rot = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    return best;
  };
  auto primitive = [](const Loop& w) {
    for (std::size_t d = 1; d < w.size(); ++d) {
      if (w.size() % d != 0) continue;
      bool rep = true;
      for (std::size_t i = d; i < w.size() && rep; ++i) rep = w[i] == w[i % d];
      if (rep) return false;
    }
    return true;
  };

  auto by_length_then_lex = [](const Loop& a, const Loop& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::set<Loop, decltype(by_length_then_lex)> out(by_length_then_lex);

  // Closed walks from s over vertices >= s; rotation dedup via the set.
  Loop path;
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    auto explore = [&](auto&& self, int v) -> void {
      for (int w : G.covers[v]) {
        if (w < s) continue;
        if (w == s) {
          Loop c = canonical(path);
          if (primitive(c)) out.insert(std::move(c));
        }
        if (static_cast<int>(path.size()) < L) {
          path.push_back(w);
          self(self, w);
          path.pop_back();
        }
      }
    };
    explore(explore, s);
  }
  return {out.begin(), out.end()};
}

LoopOrbit orbit_from_loop(const PLMap& f, const std::vector<Segment>& itinerary) {
  const std::size_t k = itinerary.size();
  if (k == 0) throw std::invalid_argument("empty itinerary");
  for (const Segment& seg : itinerary)
    if (!(seg.first < seg.second) || seg.first < domain_lo(f) ||
        domain_hi(f) < seg.second)
      throw std::invalid_argument("itinerary segment outside the map's domain");
  for (std::size_t j = 0; j < k; ++j)
    if (!covers_segment(f, itinerary[j], itinerary[(j + 1) % k]))
      throw std::invalid_argument("itinerary step is not a covering");

  LoopSolver solver{f, itinerary};
  solver.dfs(0, itinerary[0].first, itinerary[0].second, Rat(1), Rat(0));
  // a covering loop always carries a periodic point
  if (!solver.found) throw internal_error("loop pullback found no periodic point");

  LoopOrbit orbit;
  orbit.isolated = solver.isolated;
  orbit.points.reserve(k);
  Rat x = solver.x;
  for (std::size_t j = 0; j < k; ++j) {
    if (x < itinerary[j].first || itinerary[j].second < x)
      throw internal_error("loop orbit left its itinerary");
    orbit.points.push_back(x);
    x = eval(f, x);
  }
  if (x != solver.x) throw internal_error("loop orbit failed to close");
  return orbit;
}

LoopOrbit orbit_from_loop(const PLMap& f, const MarkovGraph& G, const Loop& loop) {
  std::vector<Segment> itinerary;
  itinerary.reserve(loop.size());
  for (int v : loop) {
    if (v < 0 || v >= static_cast<int>(G.intervals.size()))
      throw std::invalid_argument("loop vertex out of range");
    itinerary.push_back(G.intervals[v]);
  }
  return orbit_from_loop(f, itinerary);
}

std::vector<SpectrumEntry> forced_spectrum(const Pattern& P, int N,
                                           std::size_t node_cap) {
  if (N < 2) throw std::invalid_argument("spectrum horizon must be at least 2");
  PLMap f = p_linear_map(P);
  std::vector<SpectrumEntry> out;
  for (const PeriodicOrbit& orb : periodic_orbits(f, N, node_cap)) {
    if (orb.period == 1) {
      out.push_back(SpectrumEntry{1, Pattern({1}), orb.isolated,
                                  OverRotationPair{0, 1}, UnfoldingPair{0, 1},
                                  modified_pair(0, 1)});
      continue;
    }
    Pattern pat = orbit_pattern(f, orb.points);
    UnfoldingPair up = unfolding_pair(pat);
    out.push_back(SpectrumEntry{orb.period, pat, orb.isolated,
                                over_rotation_pair(pat), up,
                                modified_pair(up.p, up.q)});
  }
  return out;
}

Realization divergent_realization(const Pattern& P, long long p, long long q) {
  if (!is_divergent(P)) throw std::invalid_argument("pattern is not divergent");
  if (p < 1 || q < 3 * p + 3)
    throw std::invalid_argument(
        "pair outside the realized family p >= 1, q >= 3p + 3");

  const int qP = P.period();
  PLMap f = p_linear_map(P);

  // lexicographically smallest divergence witness (x, y, z)
  int wx = 0, wy = 0, wz = 0;
  for (int x = 1; wx == 0 && x <= qP; ++x) {
    if (P.image(x) >= x) continue;
    for (int y = x + 1; wx == 0 && y <= qP; ++y)
      for (int z = y + 1; z <= qP; ++z)
        if (P.image(y) >= z && P.image(z) <= x) {
          wx = x;
          wy = y;
          wz = z;
          break;
        }
  }
  if (wx == 0) throw internal_error("divergent pattern lost its witness");

  auto coord = [&](int i) { return rat(i - 1, qP - 1); };
  const Rat X = coord(wx), Y = coord(wy), Z = coord(wz);

  // smallest fixed points strictly inside (X, Y) and (Y, Z)
  FixedPoints fp = fixed_points(f);
  Rat a, b;
  bool have_a = false, have_b = false;
  for (const Rat& r : fp.points) {
    if (X < r && r < Y && (!have_a || r < a)) {
      a = r;
      have_a = true;
    }
    if (Y < r && r < Z && (!have_b || r < b)) {
      b = r;
      have_b = true;
    }
  }
  if (!have_a || !have_b)
    throw internal_error("witness intervals carry no fixed point");

  // smallest preimage of b strictly inside (a, Y)
  Rat c;
  bool have_c = false;
  for (std::size_t i = 0; i + 1 < f.xs.size(); ++i) {
    Rat lo = std::max(f.xs[i], a), hi = std::min(f.xs[i + 1], Y);
    if (lo > hi || f.ys[i] == f.ys[i + 1]) continue;
    Rat m = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
    Rat t = f.xs[i] + (b - f.ys[i]) / m;
    if (lo <= t && t <= hi && a < t && t < Y && (!have_c || t < c)) {
      c = t;
      have_c = true;
    }
  }
  if (!have_c) throw internal_error("maximum point has no usable preimage");

  const Segment J{a, c}, K1{c, Y}, K2{Y, b}, L{b, Z};
  std::vector<Segment> itin;
  itin.reserve(static_cast<std::size_t>(q));
  for (long long i = 0; i < q - 3 * p; ++i) itin.push_back(J);
  itin.push_back(K2);
  for (long long i = 0; i + 1 < p; ++i) {
    itin.push_back(L);
    itin.push_back(J);
    itin.push_back(K1);
  }
  itin.push_back(L);
  itin.push_back(J);

  LoopOrbit lo = orbit_from_loop(f, itin);

  // rotate the forward orbit to start at its smallest point
  auto mn = std::min_element(lo.points.begin(), lo.points.end());
  std::rotate(lo.points.begin(), mn, lo.points.end());
  std::vector<Rat> sorted = lo.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw internal_error("realized loop orbit collapsed");

  Pattern pat = orbit_pattern(f, lo.points);
  UnfoldingPair up = unfolding_pair(pat);
  if (up.p != p || up.q != q)
    throw internal_error("realized cycle has the wrong unfolding pair");
  return Realization{std::move(lo.points), std::move(pat), up};
}

}  // namespace unfold
