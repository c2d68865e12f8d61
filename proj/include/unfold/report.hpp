#pragma once

#include <string>
#include <vector>

#include "unfold/pattern.hpp"
#include "unfold/rotation.hpp"
#include "unfold/unfolding.hpp"

namespace unfold {

enum class Route { Combinatorial, Heave, Both };

// Everything the CLI reports about one pattern. Rationals cross the
// JSON/CSV boundary as "p/q" strings, never as floats.
struct ReportRecord {
  Pattern pattern{std::vector<int>{1}};
  OverRotationPair orp{0, 0};
  UnfoldingPair up{0, 0};
  ModifiedPair mup;
  std::vector<int> index_set;
  int modality = 0;
  bool divergent = false;
  bool sheer = false;
  UnfoldingInterval interval;
  double analyze_ms = -1;  // < 0: timing collection was not requested
};

// Full analysis of one pattern. Route::Both runs the combinatorial scan and
// the heaved-orbit walk and throws internal_error when they disagree.
ReportRecord analyze_pattern(const Pattern& P, Route route = Route::Both,
                             int max_den = 64, bool with_timings = false);

std::string record_json(const ReportRecord& r, int indent = 2);
std::string records_json(const std::vector<ReportRecord>& rs, int indent = 2);

// Column order: pattern,period,orp_l,orp_q,up_p,up_q,mup_t,mup_m,orn,un,
// u_f,modality,divergent,sheer. Bracket-valued u_f prints as "lo..hi".
std::string csv_header();
std::string record_csv_row(const ReportRecord& r);

}  // namespace unfold
