#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "unfold/plmap.hpp"

namespace unfold {

// Outcome of one self-check suite. cases counts individual checks (or check
// bundles where one subject gets several related assertions); notes carries
// context lines plus the first few failure transcripts.
struct SuiteResult {
  std::string name;
  bool passed = false;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> notes;
};

// "name: PASS (n checks)" plus indented note lines.
std::string suite_summary(const SuiteResult& r);

inline constexpr std::uint64_t kDefaultVerifySeed = 20260818;

// Both routes to the unfolding pair agree on every pattern of period
// 2..max_q: the index-set scan against the heaved trajectory of 0.
SuiteResult verify_routes(int max_q = 9);

// Over-rotation vs unfolding comparison over the convergent patterns of
// period 2..max_q: orn <= un, equality on sheer patterns, and modality <= 2
// forcing sheerness.
SuiteResult verify_comparison(int max_q = 9);

// Water-pouring laws on seeded random lifts: envelope sandwich and
// monotonicity, idempotence, sup-distance contraction, and the mu-family
// matching the envelopes at mu = 0 and mu = capacity.
SuiteResult verify_pouring(int lifts = 200,
                           std::uint64_t seed = kDefaultVerifySeed);

// Rotation-number laws: exact values on every translation with denominator
// <= max_den, order preservation on seeded monotone pairs, and the integer
// shift law.
SuiteResult verify_rotation(int max_den = 64, int pairs = 100,
                            std::uint64_t seed = kDefaultVerifySeed);

// Witness cycles with unfolding pair (p, q) inside the divergent 4-pattern's
// connect-the-dots map, for every p >= 1 with 3p + 3 <= q <= max_q.
SuiteResult verify_divergent(int max_q = 15);

// Unfolding-interval laws, clause by clause. The all-patterns upper clause
// is reported separately from its restriction to patterns whose maximum
// position precedes the minimum one: reversed patterns genuinely break the
// blanket 1/2 claim, and the split keeps that visible.
struct IntervalVerdict {
  bool upper_all = false;       // rho(F_u) = 1/2 for every pattern
  bool upper_standard = false;  // same, max position before min position
  bool membership = false;      // every cycle's un lies in [u_f, 1/2]
  bool fixture = false;         // u_f of the 3-cycle is exactly 1/3
  SuiteResult suite;            // aggregate; passed requires all four
};

IntervalVerdict verify_interval_detailed(int max_q = 7, int max_period = 10,
                                         std::size_t node_cap = 20000000);
SuiteResult verify_interval(int max_q = 7, int max_period = 10,
                            std::size_t node_cap = 20000000);

// Sharkovsky order: reflexivity, antisymmetry, totality and transitivity on
// {1..domain} with 2^inf adjoined, strictness along the displayed chain, and
// downward closure of the forced period spectra of all patterns of period
// <= max_q scanned to max_period.
SuiteResult verify_sharkovsky(int max_q = 7, int max_period = 8,
                              std::uint64_t domain = 64,
                              std::size_t node_cap = kDefaultNodeCap);

// Minimal realization of u_f across the patterns of period <= max_q whose
// u_f is exact with denominator <= max_den: positive values must be realized
// by a cycle within the period cap, zero values must come back degenerate.
SuiteResult verify_realization(int max_q = 7, int max_den = 6,
                               long long period_cap = 18,
                               std::size_t node_cap = kDefaultNodeCap);

}  // namespace unfold
