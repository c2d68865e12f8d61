#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "unfold/heave.hpp"
#include "unfold/plmap.hpp"
#include "unfold/rational.hpp"

namespace unfold {

// Largest nondecreasing lift below F / smallest one above F.
DegreeOneLift pour_lower(const DegreeOneLift& F);
DegreeOneLift pour_upper(const DegreeOneLift& F);

bool is_monotone_lift(const DegreeOneLift& F);

// Maximal open intervals of constancy, reduced mod 1: each (a, b) has
// 0 <= a < 1 and b - a < 1; an interval running over the seam keeps b > 1,
// e.g. (3/4, 5/4).
std::vector<std::pair<Rat, Rat>> flat_spots(const DegreeOneLift& F);

struct RotationResult {
  bool exact = false;
  Rat value;    // meaningful when exact
  Rat lo, hi;   // always set; lo == hi == value when exact
};

// Rotation number of a monotone degree-one lift. Any rational value with
// denominator at most max_den is certified exactly; otherwise the result is
// an enclosing interval of width at most 1/max_den whose endpoints are Farey
// neighbors straddling the true value.
RotationResult rotation_number(const DegreeOneLift& G, int max_den = 64,
                               std::size_t node_cap = kDefaultNodeCap);

// Rotation numbers of the two poured envelopes of an arbitrary lift.
std::pair<RotationResult, RotationResult> rotation_set(
    const DegreeOneLift& F, int max_den = 64,
    std::size_t node_cap = kDefaultNodeCap);

// sup(F - pour_lower(F)): how much water the graph can hold.
Rat water_capacity(const DegreeOneLift& F);

// pour_upper(min(F, pour_lower(F) + mu)): a monotone family climbing from
// the lower envelope (mu = 0) to the upper one (mu >= capacity).
DegreeOneLift water_member(const DegreeOneLift& F, const Rat& mu);

struct CycleSearch {
  std::vector<Rat> points;         // one period of the projected cycle, sorted, in [0,1)
  bool meets_flat_closure = false; // set when every cycle ran through open flat spots
};

// A cycle of the projected circle map of a monotone lift G whose rotation
// number equals the reduced fraction p/q: points x with G^q(x) = x + p.
// Prefers a cycle avoiding every open flat spot, scanning roots left to
// right; when none exists the leftmost cycle is returned flagged. Throws
// std::invalid_argument when the rotation number differs from p/q.
CycleSearch find_cycle(const DegreeOneLift& G, long p, int q,
                       std::size_t node_cap = kDefaultNodeCap);

}  // namespace unfold
