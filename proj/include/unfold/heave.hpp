#pragma once

#include <cstddef>
#include <vector>

#include "unfold/plmap.hpp"
#include "unfold/rational.hpp"

namespace unfold {

// Half-scale copy of a surjective interval map: g(x) = f(2x)/2 on [0, 1/2],
// together with its extreme points and boundary values.
struct HeaveDecomposition {
  PLMap g;
  Rat M_g, m_g;  // argmax, argmin of g
  Rat c_g, d_g;  // g(0), g(1/2)
};

// Requires f on [0,1] with max 1 and min 0, each attained once.
HeaveDecomposition miniature(const PLMap& f);

// A continuous degree-one lift, stored by its fundamental piece on [0,1];
// F(x+1) = F(x) + 1 extends it to the line.
struct DegreeOneLift {
  PLMap fundamental;
};

// Validates domain [0,1] and F(1) = F(0) + 1.
DegreeOneLift make_lift(PLMap fundamental);

// The heaved lift of f: the miniature on [0, M_g], flipped to 1 - g up to
// 1/2, mirrored to 1 - g(1-x) up to 1 - m_g, then raised to 1 + g(1-x).
// Degenerate pieces vanish. The fold h(x) = min(x mod 1, 1 - x mod 1)
// semiconjugates the result onto g.
DegreeOneLift heaved(const PLMap& f);

// Evaluation anywhere on the line via periodicity.
Rat lift_eval(const DegreeOneLift& F, const Rat& x);

// x0, F(x0), ..., F^n(x0).
std::vector<Rat> lift_orbit(const DegreeOneLift& F, const Rat& x0, int n);

DegreeOneLift lift_compose(const DegreeOneLift& outer, const DegreeOneLift& inner,
                           std::size_t node_cap = kDefaultNodeCap);
DegreeOneLift lift_iterate(const DegreeOneLift& F, int n,
                           std::size_t node_cap = kDefaultNodeCap);

// The 1-periodic fold onto [0, 1/2].
Rat fold_point(const Rat& x);

}  // namespace unfold
