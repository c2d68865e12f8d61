#pragma once

#include <cstdint>

#include "unfold/rational.hpp"

namespace unfold {

// An element of N ∪ {2^inf}, the index set of the Sharkovsky order
// 3 > 5 > 7 > ... > 2*3 > 2*5 > ... > 4*3 > ... > 2^inf > ... > 8 > 4 > 2 > 1.
struct SharkValue {
  bool two_inf = false;
  std::uint64_t n = 0;  // >= 1 when !two_inf

  static SharkValue inf() { return SharkValue{true, 0}; }
  static SharkValue of(std::uint64_t v);
};

bool operator==(const SharkValue& a, const SharkValue& b);

// True iff a = b or a precedes b in the Sharkovsky order (a forces b).
bool sharkovsky_ge(const SharkValue& a, const SharkValue& b);

// Mark on the Sharkovsky prong at a point of the marked real line: 0 for bare
// real-line points, a finite period, or 2^inf.
struct MSpaceMark {
  enum class Kind { Zero, Finite, TwoInf };
  Kind kind = Kind::Zero;
  std::uint64_t n = 0;  // >= 1 when Finite

  static MSpaceMark zero() { return MSpaceMark{Kind::Zero, 0}; }
  static MSpaceMark finite(std::uint64_t v);
  static MSpaceMark two_inf() { return MSpaceMark{Kind::TwoInf, 0}; }
};

bool operator==(const MSpaceMark& a, const MSpaceMark& b);

struct MSpaceMarker {
  Rat t;
  MSpaceMark mark;
};

// Connected hull between two markers, lo.t <= hi.t enforced.
struct MSpaceHull {
  MSpaceMarker lo;
  MSpaceMarker hi;
};

MSpaceHull make_hull(MSpaceMarker lo, MSpaceMarker hi);

// Strictly between the endpoints: any nonzero mark belongs. At an endpoint:
// the endpoint's mark must force the queried mark. Zero marks (bare real-line
// points) are never members.
bool hull_contains(const MSpaceHull& h, const MSpaceMarker& x);

}  // namespace unfold
