#include "unfold/plmap.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace unfold {

namespace {

// Index of the segment containing x: the last node at or below x, clamped so
// the right endpoint belongs to the final segment.
std::size_t segment_of(const PLMap& f, const Rat& x) {
  auto it = std::upper_bound(f.xs.begin(), f.xs.end(), x);
  std::size_t i = static_cast<std::size_t>(it - f.xs.begin());
  if (i >= f.xs.size()) i = f.xs.size() - 1;
  return i - 1;
}

struct Affine {
  Rat a, b;  // x -> a*x + b
};

Affine segment_affine(const PLMap& f, std::size_t s) {
  Rat a = (f.ys[s + 1] - f.ys[s]) / (f.xs[s + 1] - f.xs[s]);
  Rat b = f.ys[s] - a * f.xs[s];
  return {a, b};
}

PLMap merge_extreme(const PLMap& A, const PLMap& B, bool take_min) {
  if (A.xs.front() != B.xs.front() || A.xs.back() != B.xs.back())
    throw std::invalid_argument("pointwise min/max needs matching domains");
  std::vector<Rat> grid;
  std::merge(A.xs.begin(), A.xs.end(), B.xs.begin(), B.xs.end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<Rat> cand = grid;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    Rat d0 = eval(A, grid[i]) - eval(B, grid[i]);
    Rat d1 = eval(A, grid[i + 1]) - eval(B, grid[i + 1]);
    if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0))
      cand.push_back(grid[i] + d0 * (grid[i + 1] - grid[i]) / (d0 - d1));
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Rat> vals;
  vals.reserve(cand.size());
  for (const Rat& x : cand) {
    Rat a = eval(A, x), b = eval(B, x);
    if (take_min)
      vals.push_back(a < b ? a : b);
    else
      vals.push_back(a > b ? a : b);
  }
  return simplify(make_plmap(std::move(cand), std::move(vals)));
}

}  // namespace

PLMap make_plmap(std::vector<Rat> xs, std::vector<Rat> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("node coordinate counts differ");
  if (xs.size() < 2) throw std::invalid_argument("a map needs at least two nodes");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1]))
      throw std::invalid_argument("abscissae must be strictly increasing");
  return {std::move(xs), std::move(ys)};
}

Rat eval(const PLMap& f, const Rat& x) {
  if (x < f.xs.front() || x > f.xs.back())
    throw std::invalid_argument("evaluation outside the domain");
  std::size_t s = segment_of(f, x);
  return f.ys[s] +
         (x - f.xs[s]) * (f.ys[s + 1] - f.ys[s]) / (f.xs[s + 1] - f.xs[s]);
}

PLMap simplify(const PLMap& f) {
  std::vector<Rat> xs{f.xs.front()}, ys{f.ys.front()};
  for (std::size_t i = 1; i + 1 < f.xs.size(); ++i) {
    bool collinear = (f.ys[i] - ys.back()) * (f.xs[i + 1] - f.xs[i]) ==
                     (f.ys[i + 1] - f.ys[i]) * (f.xs[i] - xs.back());
    if (!collinear) {
      xs.push_back(f.xs[i]);
      ys.push_back(f.ys[i]);
    }
  }
  xs.push_back(f.xs.back());
  ys.push_back(f.ys.back());
  return {std::move(xs), std::move(ys)};
}

bool same_function(const PLMap& a, const PLMap& b) {
  PLMap sa = simplify(a), sb = simplify(b);
  return sa.xs == sb.xs && sa.ys == sb.ys;
}

PLMap compose(const PLMap& outer, const PLMap& inner, std::size_t node_cap) {
  Rat lo = inner.ys.front(), hi = lo;
  for (const Rat& y : inner.ys) {
    if (y < lo) lo = y;
    if (y > hi) hi = y;
  }
  if (lo < domain_lo(outer) || hi > domain_hi(outer))
    throw std::invalid_argument("composition needs range(inner) within domain(outer)");
  std::vector<Rat> cand = inner.xs;
  for (std::size_t i = 0; i + 1 < inner.xs.size(); ++i) {
    const Rat& v0 = inner.ys[i];
    const Rat& v1 = inner.ys[i + 1];
    if (v0 == v1) continue;
    const Rat& vlo = v0 < v1 ? v0 : v1;
    const Rat& vhi = v0 < v1 ? v1 : v0;
    auto first = std::upper_bound(outer.xs.begin(), outer.xs.end(), vlo);
    auto last = std::lower_bound(outer.xs.begin(), outer.xs.end(), vhi);
    for (auto it = first; it != last; ++it)
      cand.push_back(inner.xs[i] +
                     (*it - v0) * (inner.xs[i + 1] - inner.xs[i]) / (v1 - v0));
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  if (cand.size() > node_cap)
    throw internal_error("exact composition exceeded the node budget");
  std::vector<Rat> vals;
  vals.reserve(cand.size());
  for (const Rat& x : cand) vals.push_back(eval(outer, eval(inner, x)));
  return simplify(make_plmap(std::move(cand), std::move(vals)));
}

PLMap iterate(const PLMap& f, int n, std::size_t node_cap) {
  if (n < 0) throw std::invalid_argument("iterate needs n >= 0");
  if (n == 0)
    return make_plmap({domain_lo(f), domain_hi(f)}, {domain_lo(f), domain_hi(f)});
  PLMap r = f;
  for (int t = 1; t < n; ++t) r = compose(f, r, node_cap);
  return r;
}

PLMap pl_min(const PLMap& a, const PLMap& b) { return merge_extreme(a, b, true); }
PLMap pl_max(const PLMap& a, const PLMap& b) { return merge_extreme(a, b, false); }

Extrema extrema(const PLMap& f) {
  Extrema e;
  e.argmax = f.xs.front();
  e.maxval = f.ys.front();
  e.argmin = f.xs.front();
  e.minval = f.ys.front();
  for (std::size_t i = 1; i < f.xs.size(); ++i) {
    if (f.ys[i] > e.maxval) {
      e.maxval = f.ys[i];
      e.argmax = f.xs[i];
    }
    if (f.ys[i] < e.minval) {
      e.minval = f.ys[i];
      e.argmin = f.xs[i];
    }
  }
  int maxc = 0, minc = 0;
  for (const Rat& y : f.ys) {
    if (y == e.maxval) ++maxc;
    if (y == e.minval) ++minc;
  }
  e.max_unique = maxc == 1;
  e.min_unique = minc == 1;
  return e;
}

FixedPoints fixed_points(const PLMap& f0) {
  PLMap f = simplify(f0);
  FixedPoints out;
  for (std::size_t s = 0; s + 1 < f.xs.size(); ++s) {
    Affine A = segment_affine(f, s);
    if (A.a == 1) {
      if (A.b == 0) out.intervals.emplace_back(f.xs[s], f.xs[s + 1]);
      continue;
    }
    Rat x = A.b / (rat(1) - A.a);
    if (f.xs[s] <= x && x <= f.xs[s + 1]) out.points.push_back(x);
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()),
                   out.points.end());
  auto inside = [&](const Rat& x) {
    for (const auto& [u, v] : out.intervals)
      if (u <= x && x <= v) return true;
    return false;
  };
  out.points.erase(
      std::remove_if(out.points.begin(), out.points.end(), inside),
      out.points.end());
  return out;
}

std::vector<PeriodicOrbit> periodic_orbits(const PLMap& f0, int N,
                                           std::size_t node_cap) {
  if (N < 1) throw std::invalid_argument("orbit search needs N >= 1");
  PLMap f = simplify(f0);
  {
    Rat lo = f.ys.front(), hi = lo;
    for (const Rat& y : f.ys) {
      if (y < lo) lo = y;
      if (y > hi) hi = y;
    }
    if (lo < domain_lo(f) || hi > domain_hi(f))
      throw std::invalid_argument("orbit search needs a self-map of the domain");
  }
  const std::size_t m = f.xs.size() - 1;
  std::vector<Affine> seg(m);
  for (std::size_t s = 0; s < m; ++s) seg[s] = segment_affine(f, s);

  std::vector<PeriodicOrbit> out;
  std::map<std::string, std::size_t> by_key;
  std::set<std::string> families;
  // path[j] is f^j as an affine map on the branch domain reached at depth j.
  std::vector<Affine> path{{rat(1), rat(0)}};
  std::size_t budget = node_cap;

  auto orbit_of = [&](const Rat& x0, int k) {
    std::vector<Rat> pts;
    pts.reserve(static_cast<std::size_t>(k));
    Rat x = x0;
    for (int t = 0; t < k; ++t) {
      pts.push_back(x);
      x = eval(f, x);
    }
    if (x != x0) throw internal_error("orbit solve failed to close");
    return pts;
  };

  auto least_period = [](const std::vector<Rat>& pts) {
    const int k = static_cast<int>(pts.size());
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      bool ok = true;
      for (int t = 0; t + d < k && ok; ++t) ok = pts[t + d] == pts[t];
      if (ok) return d;
    }
    return k;
  };

  auto canonical = [](std::vector<Rat> pts) {
    std::size_t mi = 0;
    for (std::size_t t = 1; t < pts.size(); ++t)
      if (pts[t] < pts[mi]) mi = t;
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(mi),
                pts.end());
    return pts;
  };

  // Returns false only when the candidate's least period is below k.
  auto record = [&](const Rat& x, int k, bool isolated) {
    std::vector<Rat> pts = orbit_of(x, k);
    if (least_period(pts) != k) return false;
    pts = canonical(std::move(pts));
    std::string key = std::to_string(k) + "@" + to_string(pts.front());
    auto it = by_key.find(key);
    if (it != by_key.end()) {
      if (!isolated) out[it->second].isolated = false;
      return true;
    }
    by_key[key] = out.size();
    out.push_back({std::move(pts), k, isolated});
    return true;
  };

  // f^k is the identity on [dl, dr], dl < dr: a continuum of period-k points.
  // Report one representative of least period exactly k. Points of lower
  // period inside the piece are fixed points of the proper-divisor affines,
  // so there are finitely many to dodge.
  auto record_family = [&](const Rat& dl, const Rat& dr, int k) {
    std::vector<std::pair<Rat, Rat>> legs;
    legs.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      const Affine& A = path[static_cast<std::size_t>(j)];
      Rat u = A.a * dl + A.b;
      Rat v = A.a * dr + A.b;
      if (v < u) std::swap(u, v);
      legs.emplace_back(std::move(u), std::move(v));
    }
    std::sort(legs.begin(), legs.end());
    std::string fkey = std::to_string(k);
    for (const auto& [u, v] : legs) fkey += ";" + to_string(u) + ":" + to_string(v);
    if (!families.insert(fkey).second) return;

    std::vector<Rat> bad;
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      const Affine& A = path[static_cast<std::size_t>(d)];
      if (A.a == 1) continue;
      Rat p = A.b / (rat(1) - A.a);
      if (dl <= p && p <= dr) bad.push_back(std::move(p));
    }
    auto clean = [&](const Rat& x) {
      for (const Rat& p : bad)
        if (p == x) return false;
      return true;
    };
    Rat repx;
    bool found = false;
    for (const Rat& c : {Rat((dl + dr) / 2), dl, dr}) {
      if (clean(c)) {
        repx = c;
        found = true;
        break;
      }
    }
    Rat denom = rat(4);
    while (!found) {
      for (const Rat& c : {Rat(dl + (dr - dl) / denom), Rat(dr - (dr - dl) / denom)}) {
        if (clean(c)) {
          repx = c;
          found = true;
          break;
        }
      }
      denom *= 2;
    }
    if (!record(repx, k, false))
      throw internal_error("family representative had a lower least period");
  };

  std::function<void(const Rat&, const Rat&, int)> dfs = [&](const Rat& dl,
                                                             const Rat& dr,
                                                             int depth) {
    if (budget == 0) throw internal_error("orbit search exceeded its node budget");
    --budget;
    const Affine C = path.back();
    if (depth >= 1) {
      if (C.a == 1 && C.b == 0) {
        if (dl == dr)
          record(dl, depth, true);
        else
          record_family(dl, dr, depth);
        return;  // f^depth is the identity here; deeper structure repeats
      }
      if (C.a != 1) {
        Rat x = C.b / (rat(1) - C.a);
        if (dl <= x && x <= dr) record(x, depth, true);
      }
    }
    if (depth == N) return;
    Rat u = C.a * dl + C.b;
    Rat v = C.a * dr + C.b;
    if (v < u) std::swap(u, v);
    for (std::size_t s = segment_of(f, u); s < m && f.xs[s] <= v; ++s) {
      Rat il = u > f.xs[s] ? u : f.xs[s];
      Rat ih = v < f.xs[s + 1] ? v : f.xs[s + 1];
      if (ih < il) continue;
      if (il == ih && u < v) continue;  // node touch, covered by the neighbor branch
      Rat ndl, ndr;
      if (C.a == 0) {
        ndl = dl;
        ndr = dr;
      } else {
        ndl = (il - C.b) / C.a;
        ndr = (ih - C.b) / C.a;
        if (ndr < ndl) std::swap(ndl, ndr);
      }
      path.push_back({seg[s].a * C.a, seg[s].a * C.b + seg[s].b});
      dfs(ndl, ndr, depth + 1);
      path.pop_back();
    }
  };
  dfs(domain_lo(f), domain_hi(f), 0);

  std::sort(out.begin(), out.end(),
            [](const PeriodicOrbit& A, const PeriodicOrbit& B) {
              if (A.period != B.period) return A.period < B.period;
              return A.points.front() < B.points.front();
            });
  return out;
}

PLMap p_linear_map(const Pattern& P) {
  const int q = P.period();
  if (q < 2)
    throw std::invalid_argument("connect-the-dots map needs period >= 2");
  std::vector<Rat> xs, ys;
  xs.reserve(static_cast<std::size_t>(q));
  ys.reserve(static_cast<std::size_t>(q));
  for (int i = 1; i <= q; ++i) {
    xs.push_back(rat(i - 1, q - 1));
    ys.push_back(rat(P.image(i) - 1, q - 1));
  }
  return make_plmap(std::move(xs), std::move(ys));
}

PLMap pl_from_points(const std::vector<Rat>& xs, const Pattern& P) {
  const int q = P.period();
  if (static_cast<int>(xs.size()) != q)
    throw std::invalid_argument("abscissa count must match the period");
  std::vector<Rat> ys;
  ys.reserve(xs.size());
  for (int i = 1; i <= q; ++i)
    ys.push_back(xs[static_cast<std::size_t>(P.image(i) - 1)]);
  return make_plmap(xs, std::move(ys));
}

Pattern orbit_pattern(const PLMap& f, const std::vector<Rat>& orbit) {
  if (orbit.size() < 2)
    throw std::invalid_argument("orbit pattern needs at least two points");
  std::vector<Rat> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("orbit points must be distinct");
  std::vector<int> images(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Rat y = eval(f, sorted[i]);
    auto it = std::lower_bound(sorted.begin(), sorted.end(), y);
    if (it == sorted.end() || *it != y)
      throw std::invalid_argument("set is not invariant under the map");
    images[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Pattern(std::move(images));
}

}  // namespace unfold
