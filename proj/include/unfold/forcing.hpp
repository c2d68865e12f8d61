#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "unfold/pattern.hpp"
#include "unfold/plmap.hpp"
#include "unfold/rational.hpp"

namespace unfold {

// Closed segment with rational endpoints, lo < hi.
using Segment = std::pair<Rat, Rat>;

// Markov graph of a pattern on its connect-the-dots map: vertices are the
// basic intervals [x_i, x_{i+1}] of the grid, an edge i -> j means the image
// f(I_i), taken from the exact endpoint images, covers I_j.
struct MarkovGraph {
  std::vector<Segment> intervals;
  std::vector<std::vector<int>> covers;  // sorted adjacency per vertex
};

MarkovGraph markov_graph(const Pattern& P);

// Cyclic itinerary of vertex indices, every step a covering edge.
using Loop = std::vector<int>;

// All primitive loops of length <= L up to cyclic rotation (loops are
// directed; no reflection), each reported as its lexicographically smallest
// rotation, ordered by (length, itinerary). Powers of shorter loops are
// dropped.
std::vector<Loop> loops_up_to(const MarkovGraph& G, int L);

// A periodic point following a prescribed interval itinerary.
struct LoopOrbit {
  std::vector<Rat> points;  // x, f(x), ..., f^{k-1}(x)
  bool isolated = true;     // false: f^k is the identity on a whole subsegment
};

// Exact periodic point x with f^j(x) in itinerary[j] for all j and
// f^k(x) = x, found by pulling the interval chain back through the affine
// branches of f and solving the fixed-point equation of the composed branch.
// Branches are scanned left to right; the first solution wins. Throws
// std::invalid_argument when some step is not a covering; an empty pullback
// after the coverings held is an internal error.
LoopOrbit orbit_from_loop(const PLMap& f, const std::vector<Segment>& itinerary);

// Convenience overload resolving vertex indices through a graph.
LoopOrbit orbit_from_loop(const PLMap& f, const MarkovGraph& G, const Loop& loop);

// One row of a forced-orbit table: a periodic orbit of the connect-the-dots
// map together with the invariants of its pattern. Rows of period 1 carry the
// trivial pattern and zeroed pairs (the invariants need period >= 2).
struct SpectrumEntry {
  long long period;
  Pattern pattern;
  bool isolated;
  OverRotationPair orp;
  UnfoldingPair up;
  ModifiedPair mup;
};

// Patterns of all periodic orbits of the connect-the-dots map of P with least
// period <= N, each with both pair invariants, sorted by (period, smallest
// orbit point).
std::vector<SpectrumEntry> forced_spectrum(const Pattern& P, int N,
                                           std::size_t node_cap = kDefaultNodeCap);

// Witness cycle for a prescribed unfolding pair inside a divergent pattern's
// connect-the-dots map.
struct Realization {
  std::vector<Rat> points;  // forward orbit from its smallest point
  Pattern pattern;
  UnfoldingPair pair;
};

// Builds the intervals J = [a,c], K1 = [c,y], K2 = [y,b], L = [b,z] from the
// lexicographically smallest divergence witness (a, b the smallest fixed
// points inside (x,y) and (y,z), c the smallest preimage of b inside (a,y)),
// threads the loop with q-3p leading J's, K2, p-1 blocks (L,J,K1) and a final
// (L,J), and extracts its periodic orbit. The orbit's pattern is verified to
// have unfolding pair exactly (p, q). Requires is_divergent(P), p >= 1 and
// q >= 3p + 3.
Realization divergent_realization(const Pattern& P, long long p, long long q);

}  // namespace unfold
