#pragma once

#include <string>
#include <vector>

#include "unfold/rational.hpp"

namespace unfold {

// A cyclic permutation of {1..q}, stored as the image list: image(i) is where
// position i moves. Positions are 1-based everywhere in this module.
class Pattern {
 public:
  // Validates: every entry in 1..q, bijective, and a single q-cycle.
  explicit Pattern(std::vector<int> images);

  // Cycle notation (a1 a2 ... aq): a1 -> a2 -> ... -> aq -> a1. Entries must be
  // a permutation of 1..q.
  static Pattern from_cycle(const std::vector<int>& cycle);

  // "(a1 a2 ... aq)" or "(a1,a2,...)" is cycle notation; a bare list
  // "i1,i2,...,iq" is an image list. Commas and whitespace both separate.
  static Pattern parse(const std::string& text);

  int period() const { return static_cast<int>(images_.size()); }
  int image(int i) const;  // 1-based, checked
  const std::vector<int>& images() const { return images_; }

  // Position of the unique point with image q / image 1.
  int max_pos() const { return max_pos_; }
  int min_pos() const { return min_pos_; }

  // Orbit of position 1 through one period: t_0 = 1, t_{j+1} = image(t_j).
  std::vector<int> trajectory() const;

  // Conjugate by the flip i -> q+1-i.
  Pattern reversed() const;

  // Canonical "(1,a2,...,aq)" text, cycle starting at position 1.
  std::string cycle_notation() const;

  bool operator==(const Pattern& o) const { return images_ == o.images_; }
  bool operator!=(const Pattern& o) const { return !(*this == o); }

 private:
  std::vector<int> images_;
  int max_pos_ = 0;
  int min_pos_ = 0;
};

Pattern parse_pattern(const std::string& text);

// l counts position pairs traversed against the orientation; q is the period.
struct OverRotationPair {
  long long l;
  long long q;
};

// p gains of the folded walk per period q. Factory asserts 0 <= p <= q/2 + 1;
// property tests pin the sharper 1 <= p, 2p <= q.
struct UnfoldingPair {
  long long p;
  long long q;
};

UnfoldingPair make_unfolding_pair(long long p, long long q);

// t = p/q reduced, m = gcd(p, q); degenerate marks p = 0 (no corresponding
// cycle).
struct ModifiedPair {
  Rat t;
  long long m = 1;
  bool degenerate = false;
};

bool operator==(const ModifiedPair& a, const ModifiedPair& b);
bool operator<(const ModifiedPair& a, const ModifiedPair& b);

// Requires period >= 2. Sum of chi(i) = 1/2 over positions moving against
// their image's direction; the count is always even.
OverRotationPair over_rotation_pair(const Pattern& P);

// Arrival indices (mod q) at which the folded Down/Up walk of the orbit of
// position 1 crosses an integer. Sorted ascending. Requires period >= 2.
std::vector<int> unfolding_index_set(const Pattern& P);

// (|index set|, q).
UnfoldingPair unfolding_pair(const Pattern& P);

// 1 if i is in the unfolding index set, else 0. i in 0..q-1.
int observable_phi(const Pattern& P, int i);

// Number of strict interior turning points of i -> image(i); period 2 counts
// as 1 by convention. Requires period >= 2.
int modality(const Pattern& P);

// Positions x < y < z with image(x) < x, image(y) >= z, image(z) <= x.
bool is_divergent(const Pattern& P);
bool is_convergent(const Pattern& P);

// Convergent and strictly decreasing on positions [max_pos, min_pos]. When
// min_pos < max_pos the pattern is provably divergent, so the convergence
// conjunct already decides.
bool is_sheer(const Pattern& P);

ModifiedPair modified_pair(long long p, long long q);

}  // namespace unfold
