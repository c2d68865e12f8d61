#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "unfold/heave.hpp"
#include "unfold/pattern.hpp"
#include "unfold/plmap.hpp"
#include "unfold/rational.hpp"
#include "unfold/report.hpp"
#include "unfold/rotation.hpp"
#include "unfold/svg.hpp"
#include "unfold/verify.hpp"

namespace {

using namespace unfold;

Route route_from(const std::string& name) {
  if (name == "comb") return Route::Combinatorial;
  if (name == "heave") return Route::Heave;
  return Route::Both;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open " + out_path);
  os << text;
  os.flush();
  if (!os) throw std::invalid_argument("write to " + out_path + " failed");
}

int run_analyze(const std::string& text, const std::string& route,
                int max_den, const std::string& format, bool timings,
                const std::string& out) {
  const ReportRecord rec =
      analyze_pattern(parse_pattern(text), route_from(route), max_den,
                      timings);
  if (format == "csv")
    emit(csv_header() + "\n" + record_csv_row(rec) + "\n", out);
  else
    emit(record_json(rec) + "\n", out);
  return 0;
}

int run_enumerate(int q, const std::string& route, int max_den,
                  const std::string& format, bool only_sheer,
                  bool only_divergent, int want_modality,
                  const std::string& out) {
  if (q < 2 || q > 10)
    throw std::invalid_argument("period must be between 2 and 10");
  std::vector<ReportRecord> recs;
  std::vector<int> rest(static_cast<std::size_t>(q) - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<int> cyc(static_cast<std::size_t>(q));
  cyc[0] = 1;
  do {
    std::copy(rest.begin(), rest.end(), cyc.begin() + 1);
    const Pattern P = Pattern::from_cycle(cyc);
    if (only_sheer && !is_sheer(P)) continue;
    if (only_divergent && !is_divergent(P)) continue;
    if (want_modality > 0 && modality(P) != want_modality) continue;
    recs.push_back(analyze_pattern(P, route_from(route), max_den));
  } while (std::next_permutation(rest.begin(), rest.end()));

  if (format == "json") {
    emit(records_json(recs) + "\n", out);
  } else {
    std::string body = csv_header() + "\n";
    for (const ReportRecord& r : recs) body += record_csv_row(r) + "\n";
    emit(body, out);
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int max_period,
               int max_den, const std::string& out) {
  SuiteResult r;
  if (suite == "routes") {
    r = verify_routes(max_period > 0 ? max_period : 9);
  } else if (suite == "pouring") {
    r = verify_pouring(200, seed);
  } else if (suite == "rotation") {
    r = verify_rotation(max_den, 100, seed);
  } else if (suite == "divergent") {
    r = verify_divergent(max_period > 0 ? max_period : 15);
  } else if (suite == "interval") {
    r = verify_interval(7, max_period > 0 ? max_period : 10);
  } else if (suite == "sharkovsky") {
    r = verify_sharkovsky(7, max_period > 0 ? max_period : 8, 64);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  emit(suite_summary(r) + "\n", out);
  return r.passed ? 0 : 1;
}

int run_render(const std::string& text, const std::string& which,
               const std::string& out) {
  const Pattern P = parse_pattern(text);
  const PLMap f = p_linear_map(P);
  PLMap graph;
  if (which == "f")
    graph = f;
  else if (which == "g")
    graph = miniature(f).g;
  else if (which == "F")
    graph = heaved(f).fundamental;
  else if (which == "Fl")
    graph = pour_lower(heaved(f)).fundamental;
  else if (which == "Fu")
    graph = pour_upper(heaved(f)).fundamental;
  else
    throw std::invalid_argument("unknown graph: " + which);
  emit(render_plmap_svg(graph, P.cycle_notation() + " " + which), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unfolding numbers, intervals and forced spectra of cycles"};
  app.require_subcommand(1);

  std::string pattern_text, which, route = "both", format, out;
  std::string suite;
  int q = 0, max_den = 64, max_period = 0, want_modality = 0;
  std::uint64_t seed = unfold::kDefaultVerifySeed;
  bool timings = false, only_sheer = false, only_divergent = false;

  const auto route_check = CLI::IsMember({"comb", "heave", "both"});
  const auto format_check = CLI::IsMember({"json", "csv"});

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full report for one pattern in cycle notation");
  analyze->add_option("pattern", pattern_text, "e.g. \"(1,2,3)\"")
      ->required();
  analyze->add_option("--route", route, "comb, heave or both (cross-check)")
      ->check(route_check);
  analyze->add_option("--max-den", max_den,
                      "denominator budget for rotation numbers");
  analyze->add_option("--format", format, "json (default) or csv")
      ->check(format_check);
  analyze->add_flag("--timings", timings, "include wall-clock timings");
  analyze->add_option("--out", out, "output path (default stdout)");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "reports for every pattern of period q");
  enumerate->add_option("q", q, "period, 2..10")->required();
  enumerate->add_option("--route", route)->check(route_check);
  enumerate->add_option("--max-den", max_den);
  enumerate->add_option("--format", format, "csv (default) or json")
      ->check(format_check);
  enumerate->add_flag("--sheer", only_sheer, "keep sheer patterns only");
  enumerate->add_flag("--divergent", only_divergent,
                      "keep divergent patterns only");
  enumerate->add_option("--modality", want_modality,
                        "keep patterns of this modality only");
  enumerate->add_option("--out", out);

  CLI::App* verify = app.add_subcommand(
      "verify", "self-check suites: routes, pouring, rotation, divergent, "
                "interval, sharkovsky");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", seed, "seed for the randomized suites");
  verify->add_option("--max-period", max_period,
                     "override the suite's sweep bound");
  verify->add_option("--max-den", max_den);
  verify->add_option("--out", out);

  CLI::App* render = app.add_subcommand(
      "render", "SVG of a pattern's graph: f, g, F, Fl or Fu");
  render->add_option("pattern", pattern_text)->required();
  render->add_option("which", which, "f, g, F, Fl or Fu")->required();
  render->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed())
      return run_analyze(pattern_text, route, max_den,
                         format.empty() ? "json" : format, timings, out);
    if (enumerate->parsed())
      return run_enumerate(q, route, max_den,
                           format.empty() ? "csv" : format, only_sheer,
                           only_divergent, want_modality, out);
    if (verify->parsed())
      return run_verify(suite, seed, max_period, max_den, out);
    if (render->parsed()) return run_render(pattern_text, which, out);
  } catch (const unfold::internal_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
