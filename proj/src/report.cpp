#include "unfold/report.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

#include "unfold/plmap.hpp"
#include "unfold/rational.hpp"

namespace unfold {

namespace {

using nlohmann::json;

json rotation_result_json(const RotationResult& r) {
  if (r.exact) return json{{"exact", to_string(r.value)}};
  return json{{"bracket", {to_string(r.lo), to_string(r.hi)}}};
}

std::string rotation_result_csv(const RotationResult& r) {
  if (r.exact) return to_string(r.value);
  return to_string(r.lo) + ".." + to_string(r.hi);
}

}  // namespace

ReportRecord analyze_pattern(const Pattern& P, Route route, int max_den,
                             bool with_timings) {
  const auto t0 = std::chrono::steady_clock::now();

  ReportRecord r;
  r.pattern = P;
  r.orp = over_rotation_pair(P);
  switch (route) {
    case Route::Combinatorial:
      r.up = unfolding_pair(P);
      break;
    case Route::Heave:
      r.up = unfolding_number_via_heave(P);
      break;
    case Route::Both: {
      r.up = unfolding_pair(P);
      const UnfoldingPair h = unfolding_number_via_heave(P);
      if (h.p != r.up.p || h.q != r.up.q)
        throw internal_error("combinatorial and heaved unfolding pairs differ for " +
                             P.cycle_notation());
      break;
    }
  }
  r.mup = modified_pair(r.up.p, r.up.q);
  r.index_set = unfolding_index_set(P);
  r.modality = modality(P);
  r.divergent = is_divergent(P);
  r.sheer = is_sheer(P);
  r.interval = unfolding_interval(p_linear_map(P), max_den);

  if (with_timings) {
    const auto t1 = std::chrono::steady_clock::now();
    r.analyze_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
  return r;
}

namespace {

json record_to_json(const ReportRecord& r) {
  json j;
  j["pattern"] = r.pattern.cycle_notation();
  j["images"] = r.pattern.images();
  j["period"] = r.pattern.period();
  j["orp"] = {{"l", r.orp.l}, {"q", r.orp.q}};
  j["up"] = {{"p", r.up.p}, {"q", r.up.q}};
  j["mup"] = {{"t", to_string(r.mup.t)},
              {"m", r.mup.m},
              {"degenerate", r.mup.degenerate}};
  j["orn"] = to_string(rat(r.orp.l, r.orp.q));
  j["un"] = to_string(rat(r.up.p, r.up.q));
  j["index_set"] = r.index_set;
  j["modality"] = r.modality;
  j["divergent"] = r.divergent;
  j["sheer"] = r.sheer;
  j["u_f"] = rotation_result_json(r.interval.lower);
  j["interval"] = {{"lower", rotation_result_json(r.interval.lower)},
                   {"upper", rotation_result_json(r.interval.upper)},
                   {"upper_is_half", r.interval.upper_is_half}};
  if (r.analyze_ms >= 0) j["timings"] = {{"analyze_ms", r.analyze_ms}};
  return j;
}

}  // namespace

std::string record_json(const ReportRecord& r, int indent) {
  return record_to_json(r).dump(indent);
}

std::string records_json(const std::vector<ReportRecord>& rs, int indent) {
  json arr = json::array();
  for (const ReportRecord& r : rs) arr.push_back(record_to_json(r));
  return arr.dump(indent);
}

std::string csv_header() {
  return "pattern,period,orp_l,orp_q,up_p,up_q,mup_t,mup_m,orn,un,u_f,"
         "modality,divergent,sheer";
}

std::string record_csv_row(const ReportRecord& r) {
  std::ostringstream os;
  os << '"' << r.pattern.cycle_notation() << '"' << ','
     << r.pattern.period() << ',' << r.orp.l << ',' << r.orp.q << ','
     << r.up.p << ',' << r.up.q << ',' << to_string(r.mup.t) << ','
     << r.mup.m << ',' << to_string(rat(r.orp.l, r.orp.q)) << ','
     << to_string(rat(r.up.p, r.up.q)) << ','
     << rotation_result_csv(r.interval.lower) << ',' << r.modality << ','
     << (r.divergent ? "true" : "false") << ','
     << (r.sheer ? "true" : "false");
  return os.str();
}

}  // namespace unfold
