// corridor: exact counting, enumeration and bijection mapping for diagonal
// lattice walks confined to [0..h].
//
// Exit codes: 0 success, 1 verification failure or mismatch, 2 usage or
// domain error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "corridor/bijection.hpp"
#include "corridor/closed_form.hpp"
#include "corridor/dp.hpp"
#include "corridor/enumerate.hpp"
#include "corridor/ta.hpp"
#include "corridor/transfer_matrix.hpp"
#include "corridor/verify.hpp"

namespace {

using corridor::Count;
using nlohmann::json;

long long enumeration_cap() {
  if (const char* env = std::getenv("CORRIDOR_ENUM_CAP")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::domain_error("CORRIDOR_ENUM_CAP is not a number");
    }
  }
  return corridor::kDefaultEnumerationCap;
}

json report_to_json(const corridor::SweepReport& rep) {
  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back({{"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"suite", rep.suite}, {"checked", rep.checked}, {"failures", failures}};
}

struct CountArgs {
  int h = 0;
  long long n = 0;
  int start = 0;
  std::optional<int> end;
  std::optional<int> center;
  std::optional<int> halfwidth;
  std::string engine = "dp";
};

int run_count(const CountArgs& a, bool as_json) {
  bool window_mode = a.center.has_value();
  if (window_mode != a.halfwidth.has_value())
    throw std::domain_error("--center and --halfwidth go together");
  if (window_mode == a.end.has_value())
    throw std::domain_error("give either --end or --center/--halfwidth");
  int j = window_mode ? *a.halfwidth : 0;
  if (!corridor::counting_valid(a.h, a.n, a.start, window_mode ? j : 0))
    throw std::domain_error("instance is not counting-valid");
  if (!window_mode && (*a.end < 0 || *a.end > a.h))
    throw std::domain_error("--end outside [0..h]");

  Count result;
  if (a.engine == "dp") {
    result = window_mode ? corridor::dp_count_window(a.h, a.start, *a.center, j, a.n)
                         : corridor::dp_count_endpoint(a.h, a.start, *a.end, a.n);
  } else if (a.engine == "cf") {
    result = window_mode ? corridor::cf_count_window(a.h, a.start, *a.center, j, a.n)
                         : corridor::cf_count_endpoint(a.h, a.start, *a.end, a.n);
  } else if (a.engine == "tm") {
    result = window_mode ? corridor::tm_count_window(a.h, a.start, *a.center, j, a.n)
                         : corridor::tm_count_vector(a.h, a.start,
                                                     a.n)[static_cast<std::size_t>(*a.end)];
  } else if (a.engine == "oracle") {
    std::set<int> filter;
    if (window_mode)
      for (int l : corridor::feasible_endpoints(a.h, a.n, a.start, *a.center, j))
        filter.insert(l);
    else
      filter.insert(*a.end);
    corridor::PathStream stream(a.h, a.start, a.n, filter, enumeration_cap());
    Count total = 0;
    while (stream.next()) ++total;
    result = total;
  } else {
    throw std::domain_error("unknown engine: " + a.engine);
  }

  if (as_json)
    std::cout << json{{"count", result.str()}}.dump() << "\n";
  else
    std::cout << result.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact corridor walk counting, enumeration and bijections"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "count walks to an endpoint or window");
  count->add_option("--h", count_args.h, "corridor height")->required();
  count->add_option("--n", count_args.n, "number of steps")->required();
  count->add_option("--start", count_args.start, "start ordinate")->required();
  count->add_option("--end", count_args.end, "single endpoint");
  count->add_option("--center", count_args.center, "window center k");
  count->add_option("--halfwidth", count_args.halfwidth, "window half-width j");
  count->add_option("--engine", count_args.engine, "dp|cf|tm|oracle")
      ->check(CLI::IsMember({"dp", "cf", "tm", "oracle"}));

  struct {
    int h = 0;
    long long n = 0;
    int start = 0;
    std::optional<int> end;
    std::optional<long long> limit;
  } enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "list walks, one per line");
  enumerate->add_option("--h", enum_args.h)->required();
  enumerate->add_option("--n", enum_args.n)->required();
  enumerate->add_option("--start", enum_args.start)->required();
  enumerate->add_option("--end", enum_args.end, "endpoint filter");
  enumerate->add_option("--limit", enum_args.limit, "print at most this many");

  struct {
    int h = 0;
    int center = 0;
    int i = 0;
    int j = 0;
    std::string path;
    std::string variant = "main";
  } map_args;
  auto* mapcmd = app.add_subcommand("map", "map a path to its counterpart");
  mapcmd->add_option("--h", map_args.h)->required();
  mapcmd->add_option("--center", map_args.center)->required();
  mapcmd->add_option("--i", map_args.i)->required();
  mapcmd->add_option("--j", map_args.j)->required();
  mapcmd->add_option("--path", map_args.path)->required();
  mapcmd->add_option("--variant", map_args.variant, "main|reverse|flip-reverse")
      ->check(CLI::IsMember({"main", "reverse", "flip-reverse"}));

  struct {
    int h = 0;
    int start = 0;
    std::optional<int> center;
    std::optional<int> halfwidth;
    long long terms = 0;
    std::string ref;
  } seq_args;
  auto* seq = app.add_subcommand("sequence", "window counts F(0..T-1)");
  seq->add_option("--h", seq_args.h)->required();
  seq->add_option("--start", seq_args.start)->required();
  seq->add_option("--center", seq_args.center);
  seq->add_option("--halfwidth", seq_args.halfwidth);
  seq->add_option("--terms", seq_args.terms)->required();
  seq->add_option("--ref", seq_args.ref, "compare against an embedded OEIS prefix");

  struct {
    int h = 0;
    long long nmax = 0;
    bool golden = false;
  } table_args;
  auto* table = app.add_subcommand("table", "CSV of every positive (i, ell, n) cell");
  table->add_option("--h", table_args.h)->required();
  table->add_option("--nmax", table_args.nmax)->required();
  table->add_flag("--golden", table_args.golden, "compare against the expected table");

  struct {
    std::string suite = "all";
    std::optional<int> hmax;
    std::optional<long long> nmax;
    bool diagnostics = false;
  } verify_args;
  auto* verify = app.add_subcommand("verify", "run identity and engine sweeps");
  verify->add_option("--suite", verify_args.suite, "identities|engines|bijections|all")
      ->check(CLI::IsMember({"identities", "engines", "bijections", "all"}));
  verify->add_option("--hmax", verify_args.hmax);
  verify->add_option("--nmax", verify_args.nmax);
  verify->add_flag("--diagnostics", verify_args.diagnostics,
                   "also print excluded-frame inequalities");

  for (auto* sub : {count, enumerate, mapcmd, seq, table, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) return run_count(count_args, as_json);

    if (enumerate->parsed()) {
      if (!corridor::counting_valid(enum_args.h, enum_args.n, enum_args.start, 0))
        throw std::domain_error("instance is not counting-valid");
      std::optional<std::set<int>> filter;
      if (enum_args.end) filter = std::set<int>{*enum_args.end};
      corridor::PathStream stream(enum_args.h, enum_args.start, enum_args.n, filter,
                                  enumeration_cap());
      long long printed = 0;
      bool truncated = false;
      json paths = json::array();
      while (auto p = stream.next()) {
        if (enum_args.limit && printed >= *enum_args.limit) {
          truncated = true;
          break;
        }
        ++printed;
        if (as_json)
          paths.push_back(p->str());
        else
          std::cout << p->str() << "\n";
      }
      if (as_json) std::cout << json{{"paths", paths}, {"truncated", truncated}}.dump() << "\n";
      return 0;
    }

    if (mapcmd->parsed()) {
      corridor::Path p = corridor::Path::parse(map_args.path);
      corridor::TAWord input_word = corridor::ta_encode(p, map_args.center);
      corridor::Path out;
      std::string tag;
      if (map_args.variant == "main") {
        auto res = corridor::correspond(p, map_args.h, map_args.center, map_args.i, map_args.j);
        out = res.path;
        tag = corridor::to_string(res.tag);
      } else {
        auto alt = map_args.variant == "reverse"
                       ? corridor::alt_full_reverse(p, map_args.h, map_args.center, map_args.i,
                                                    map_args.j)
                       : corridor::alt_flip_reverse(p, map_args.h, map_args.center, map_args.i,
                                                    map_args.j);
        if (!alt) throw std::domain_error("not applicable for this input");
        out = *alt;
        tag = map_args.variant;
      }
      corridor::TAWord output_word = corridor::ta_encode(out, map_args.center);
      if (as_json) {
        std::cout << json{{"case", tag},
                          {"input", p.str()},
                          {"input_word", input_word.str()},
                          {"output", out.str()},
                          {"output_word", output_word.str()}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "case: " << tag << "\n"
                  << "input: " << p.str() << "\n"
                  << "input_word: " << input_word.str() << "\n"
                  << "output: " << out.str() << "\n"
                  << "output_word: " << output_word.str() << "\n";
      }
      return 0;
    }

    if (seq->parsed()) {
      if (seq_args.terms < 1) throw std::domain_error("--terms must be positive");
      if (seq_args.center.has_value() != seq_args.halfwidth.has_value())
        throw std::domain_error("--center and --halfwidth go together");
      corridor::Window w = seq_args.center
                               ? corridor::Window{*seq_args.center, *seq_args.halfwidth}
                               : corridor::full_corridor_window(seq_args.h);
      auto terms =
          corridor::sequence(seq_args.h, seq_args.start, w.k, w.j, seq_args.terms - 1);
      const corridor::ReferenceSequence* ref = nullptr;
      if (!seq_args.ref.empty()) {
        ref = corridor::find_reference(seq_args.ref);
        if (!ref) throw std::domain_error("unknown reference label: " + seq_args.ref);
      }
      corridor::SweepReport rep;
      if (ref) rep = corridor::compare_sequence(terms, *ref);
      if (as_json) {
        json jterms = json::array();
        for (const auto& t : terms) jterms.push_back(t.str());
        json doc{{"terms", jterms}};
        if (ref) {
          doc["ref"] = ref->label;
          doc["match"] = rep.pass();
        }
        std::cout << doc.dump() << "\n";
      } else {
        for (std::size_t t = 0; t < terms.size(); ++t)
          std::cout << (t ? "," : "") << terms[t].str();
        std::cout << "\n";
        if (ref)
          std::cout << "ref " << ref->label << ": " << (rep.pass() ? "match" : "MISMATCH")
                    << " (" << rep.checked << " terms)\n";
      }
      return ref && !rep.pass() ? 1 : 0;
    }

    if (table->parsed()) {
      std::string csv = corridor::render_table(table_args.h, table_args.nmax);
      corridor::GoldenDiff diff;
      if (table_args.golden) diff = corridor::compare_golden(table_args.h, table_args.nmax);
      if (as_json) {
        json doc{{"csv", csv}};
        if (table_args.golden) {
          doc["golden_match"] = diff.match;
          if (!diff.match) doc["first_difference"] = diff.first_difference;
        }
        std::cout << doc.dump() << "\n";
      } else {
        std::cout << csv;
        if (table_args.golden && !diff.match)
          std::cerr << "golden mismatch: " << diff.first_difference << "\n";
      }
      return table_args.golden && !diff.match ? 1 : 0;
    }

    if (verify->parsed()) {
      std::vector<corridor::SweepReport> reports;
      bool run_identities = verify_args.suite == "identities" || verify_args.suite == "all";
      bool run_engines = verify_args.suite == "engines" || verify_args.suite == "all";
      bool run_bijections = verify_args.suite == "bijections" || verify_args.suite == "all";
      if (run_identities) {
        auto reps = corridor::check_identities(verify_args.hmax.value_or(5),
                                               verify_args.nmax.value_or(12));
        reports.insert(reports.end(), reps.begin(), reps.end());
      }
      if (run_engines) {
        reports.push_back(corridor::check_engines(verify_args.hmax.value_or(8),
                                                  verify_args.nmax.value_or(24), 12));
      }
      if (run_bijections) {
        auto reps = corridor::check_bijections(verify_args.hmax.value_or(5),
                                               verify_args.nmax.value_or(10));
        reports.insert(reports.end(), reps.begin(), reps.end());
      }
      json out = json::array();
      for (const auto& rep : reports) out.push_back(report_to_json(rep));
      if (verify_args.diagnostics) {
        // Frames just outside the theorem domain, where the symmetry breaks.
        json diag = json::array();
        auto [lhs, rhs] = corridor::window_symmetry_pair(4, 3, 2, 1, 9);
        diag.push_back(
            {{"instance", "h=4 n=9 k=3 i=2 j=1"}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
        out.push_back({{"suite", "window-symmetry-diagnostic"},
                       {"checked", 1},
                       {"failures", json::array()},
                       {"excluded", diag}});
      }
      std::cout << out.dump(2) << "\n";
      for (const auto& rep : reports)
        if (!rep.pass()) return 1;
      return 0;
    }
  } catch (const corridor::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  return 2;
}
