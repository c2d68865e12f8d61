#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "unfold/pattern.hpp"
#include "unfold/rational.hpp"

namespace unfold {

// Continuous piecewise-linear map given by its nodes; xs strictly increasing,
// at least two nodes, exact rational coordinates.
struct PLMap {
  std::vector<Rat> xs;
  std::vector<Rat> ys;
};

PLMap make_plmap(std::vector<Rat> xs, std::vector<Rat> ys);

inline const Rat& domain_lo(const PLMap& f) { return f.xs.front(); }
inline const Rat& domain_hi(const PLMap& f) { return f.xs.back(); }

// Throws std::invalid_argument outside the domain.
Rat eval(const PLMap& f, const Rat& x);

// Drop interior nodes collinear with their neighbors.
PLMap simplify(const PLMap& f);

// Exact equality as functions (simplified node lists compared).
bool same_function(const PLMap& a, const PLMap& b);

// Node-growth budget for exact composition; exceeding it is an internal
// error, never a silent approximation.
inline constexpr std::size_t kDefaultNodeCap = 200000;

// outer ∘ inner; requires range(inner) ⊆ domain(outer).
PLMap compose(const PLMap& outer, const PLMap& inner,
              std::size_t node_cap = kDefaultNodeCap);

// n-fold self-composition; n = 0 gives the identity on the domain. Requires a
// self-map for n >= 2.
PLMap iterate(const PLMap& f, int n, std::size_t node_cap = kDefaultNodeCap);

// Pointwise min / max; domains must coincide. Crossings become exact nodes.
PLMap pl_min(const PLMap& a, const PLMap& b);
PLMap pl_max(const PLMap& a, const PLMap& b);

struct Extrema {
  Rat argmax, maxval;
  Rat argmin, minval;
  bool max_unique = false;
  bool min_unique = false;
};

// Leftmost attaining node reported as argument; uniqueness is uniqueness of
// the attaining point over the whole domain.
Extrema extrema(const PLMap& f);

struct FixedPoints {
  std::vector<Rat> points;                      // isolated solutions of f(x) = x
  std::vector<std::pair<Rat, Rat>> intervals;   // maximal slope-1 diagonal segments
};

FixedPoints fixed_points(const PLMap& f);

struct PeriodicOrbit {
  std::vector<Rat> points;  // forward orbit starting at its smallest point
  long long period = 0;     // least period, = points.size()
  bool isolated = true;     // false: representative of a continuum (identity piece of f^k)
};

// All periodic orbits of least period <= N, exact. Requires f to map its
// domain into itself. Identity pieces of f^k are reported as one
// representative orbit flagged non-isolated; pieces entirely of lower period
// appear only at that lower period.
std::vector<PeriodicOrbit> periodic_orbits(const PLMap& f, int N,
                                           std::size_t node_cap = kDefaultNodeCap);

// The connect-the-dots map of a pattern on the grid x_i = (i-1)/(q-1).
PLMap p_linear_map(const Pattern& P);

// Same pattern on caller-chosen strictly increasing abscissae (size q);
// node i maps to the abscissa of its image position.
PLMap pl_from_points(const std::vector<Rat>& xs, const Pattern& P);

// The pattern of a periodic orbit of f: positions sorted by coordinate,
// images matched exactly through f.
Pattern orbit_pattern(const PLMap& f, const std::vector<Rat>& orbit);

}  // namespace unfold
