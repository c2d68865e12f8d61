#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unfold/heave.hpp"
#include "unfold/pattern.hpp"
#include "unfold/plmap.hpp"
#include "unfold/rational.hpp"
#include "unfold/rotation.hpp"

namespace unfold {

// Unfolding pair of a pattern read off its heaved lift: the trajectory of 0
// advances by an integer after exactly period() steps, and that integer is
// the number of gains of the combinatorial walk. Requires period >= 2.
UnfoldingPair unfolding_number_via_heave(const Pattern& P);

// Integer advance and circle period of the eventual cycle of a heaved
// trajectory. gain / period is the unfolding number of the point that
// launched it.
struct AmbientPair {
  Int gain;
  long long period = 0;
};

bool operator==(const AmbientPair& a, const AmbientPair& b);

// For x on a cycle of f with least period T and F = heaved(f), the lift
// trajectory of x/2 either closes after T steps, or is periodic with period
// T from step T on, or closes after 2T steps; nothing else can happen, so 2T
// exact steps decide. Throws internal_error if none of the three cases
// holds, which would mean x was not T-periodic.
AmbientPair ambient_pair(const DegreeOneLift& F, const Rat& x, long long T);

// Endpoints of the unfolding interval of a surjective map: rotation numbers
// of the two poured envelopes of the heaved lift. The upper endpoint equals
// 1/2 whenever the map moves its maximum point before its minimum one, but
// can drop below 1/2 otherwise; upper_is_half records which happened instead
// of treating the drop as an error.
struct UnfoldingInterval {
  RotationResult lower;  // u_f
  RotationResult upper;
  bool upper_is_half = false;
};

UnfoldingInterval unfolding_interval(const PLMap& f, int max_den = 64,
                                     std::size_t node_cap = kDefaultNodeCap);

// Modified unfolding pairs of every cycle of f with period at most N,
// deduplicated and sorted. Periods come from the ambient pair, not from the
// cycle length: a reflected cycle of f-period T contributes period 2T.
std::vector<ModifiedPair> mup_set(const PLMap& f, int N,
                                  std::size_t node_cap = kDefaultNodeCap);

// Window of observed displacement averages of the heaved trajectory of x/2.
// When the trajectory is detected to be eventually periodic the window
// collapses to the exact limit and exact is set.
struct UnfoldingEstimate {
  Rat lower;
  Rat upper;
  int horizon = 0;
  bool exact = false;
};

UnfoldingEstimate unfolding_set_estimate(const PLMap& f, const Rat& x,
                                         int horizon);

// Search for a cycle of f whose unfolding number equals u_f. degenerate is
// set (and the search skipped) when u_f = 0, since pairs with zero gain
// correspond to no cycle. Otherwise the lower envelope's rational cycle is
// folded back into the interval and checked; if that fails, cycles of f are
// scanned by increasing period up to period_cap. period_cap <= 0 selects the
// default budget of three times the denominator of u_f.
struct RealizeResult {
  bool found = false;
  bool degenerate = false;
  std::vector<Rat> points;  // forward orbit from the smallest point
  long long period = 0;
  AmbientPair pair;
  long long searched_cap = 0;  // last period fully scanned
  std::string note;            // set when the scan stopped early
};

RealizeResult realize_minimal(const PLMap& f, long long period_cap = 0,
                              std::size_t node_cap = kDefaultNodeCap);

}  // namespace unfold
