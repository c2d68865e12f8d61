#include "unfold/heave.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace unfold {

HeaveDecomposition miniature(const PLMap& f) {
  if (domain_lo(f) != 0 || domain_hi(f) != 1)
    throw std::invalid_argument("heave needs a map on [0,1]");
  Extrema e = extrema(f);
  if (e.maxval != 1 || e.minval != 0)
    throw std::invalid_argument("heave needs a map onto [0,1]");
  if (!e.max_unique || !e.min_unique)
    throw std::invalid_argument("heave needs unique extreme points");
  HeaveDecomposition H;
  std::vector<Rat> xs, ys;
  xs.reserve(f.xs.size());
  ys.reserve(f.ys.size());
  for (std::size_t i = 0; i < f.xs.size(); ++i) {
    xs.push_back(f.xs[i] / 2);
    ys.push_back(f.ys[i] / 2);
  }
  H.g = make_plmap(std::move(xs), std::move(ys));
  H.M_g = e.argmax / 2;
  H.m_g = e.argmin / 2;
  H.c_g = f.ys.front() / 2;
  H.d_g = f.ys.back() / 2;
  return H;
}

DegreeOneLift make_lift(PLMap fundamental) {
  if (domain_lo(fundamental) != 0 || domain_hi(fundamental) != 1)
    throw std::invalid_argument("a lift's fundamental piece lives on [0,1]");
  if (fundamental.ys.back() != fundamental.ys.front() + 1)
    throw std::invalid_argument("a degree-one lift needs F(1) = F(0) + 1");
  return {std::move(fundamental)};
}

DegreeOneLift heaved(const PLMap& f) {
  HeaveDecomposition H = miniature(f);
  const PLMap& g = H.g;
  const std::size_t n = g.xs.size();
  std::vector<Rat> xs, ys;
  auto add = [&](Rat x, Rat y) {
    if (!xs.empty() && xs.back() == x) {
      if (ys.back() != y) throw internal_error("heave pieces disagree at a seam");
      return;
    }
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  };
  for (std::size_t i = 0; i < n && g.xs[i] <= H.M_g; ++i) add(g.xs[i], g.ys[i]);
  for (std::size_t i = 0; i < n; ++i)
    if (g.xs[i] >= H.M_g) add(g.xs[i], rat(1) - g.ys[i]);
  for (std::size_t i = n; i-- > 0;)
    if (g.xs[i] >= H.m_g) add(rat(1) - g.xs[i], rat(1) - g.ys[i]);
  for (std::size_t i = n; i-- > 0;)
    if (g.xs[i] <= H.m_g) add(rat(1) - g.xs[i], rat(1) + g.ys[i]);
  return make_lift(simplify(make_plmap(std::move(xs), std::move(ys))));
}

Rat lift_eval(const DegreeOneLift& F, const Rat& x) {
  Int k = rat_floor(x);
  Rat u = x - k;
  return eval(F.fundamental, u) + k;
}

std::vector<Rat> lift_orbit(const DegreeOneLift& F, const Rat& x0, int n) {
  if (n < 0) throw std::invalid_argument("orbit length must be nonnegative");
  std::vector<Rat> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  pts.push_back(x0);
  for (int t = 0; t < n; ++t) pts.push_back(lift_eval(F, pts.back()));
  return pts;
}

DegreeOneLift lift_compose(const DegreeOneLift& outer, const DegreeOneLift& inner,
                           std::size_t node_cap) {
  const PLMap& bf = inner.fundamental;
  const PLMap& af = outer.fundamental;
  std::vector<Rat> cand = bf.xs;
  for (std::size_t i = 0; i + 1 < bf.xs.size(); ++i) {
    const Rat& v0 = bf.ys[i];
    const Rat& v1 = bf.ys[i + 1];
    if (v0 == v1) continue;
    const Rat& vlo = v0 < v1 ? v0 : v1;
    const Rat& vhi = v0 < v1 ? v1 : v0;
    Int klo = rat_floor(vlo) - 1;
    Int khi = rat_floor(vhi) + 1;
    for (Int k = klo; k <= khi; ++k) {
      for (std::size_t j = 0; j + 1 < af.xs.size(); ++j) {
        Rat X = af.xs[j] + k;
        if (vlo < X && X < vhi)
          cand.push_back(bf.xs[i] +
                         (X - v0) * (bf.xs[i + 1] - bf.xs[i]) / (v1 - v0));
      }
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  if (cand.size() > node_cap)
    throw internal_error("exact composition exceeded the node budget");
  std::vector<Rat> vals;
  vals.reserve(cand.size());
  for (const Rat& x : cand) vals.push_back(lift_eval(outer, eval(bf, x)));
  return make_lift(simplify(make_plmap(std::move(cand), std::move(vals))));
}

DegreeOneLift lift_iterate(const DegreeOneLift& F, int n, std::size_t node_cap) {
  if (n < 0) throw std::invalid_argument("iterate needs n >= 0");
  if (n == 0) return make_lift(make_plmap({rat(0), rat(1)}, {rat(0), rat(1)}));
  DegreeOneLift r = F;
  for (int t = 1; t < n; ++t) r = lift_compose(F, r, node_cap);
  return r;
}

Rat fold_point(const Rat& x) {
  Rat u = x - rat_floor(x);
  return u <= rat(1, 2) ? u : rat(1) - u;
}

}  // namespace unfold
