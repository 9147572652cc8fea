// Command-line front end: weyl-stats, sieve, strings, verify, root-datum.
//
// Exit codes: 0 success, 1 failed verification / unexpected error,
// 2 unsupported type, 3 s-rho not in the orbit of rho, 4 infinite family
// (I(s) non-empty), 5 missing factor catalog, 6 catalog parse error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "diracsieve/report.hpp"

namespace {

using namespace ds;

constexpr int kExitFailure = 1;
constexpr int kExitUnsupportedType = 2;
constexpr int kExitNotInOrbit = 3;
constexpr int kExitInfiniteFamily = 4;
constexpr int kExitMissingCatalog = 5;
constexpr int kExitParseError = 6;

ReportFormat parse_format(const std::string& f) {
  if (f == "json") return ReportFormat::json;
  if (f == "table") return ReportFormat::table;
  throw CLI::ValidationError("--format must be json or table");
}

std::string catalog_dir() {
  if (const char* env = std::getenv("DS_CATALOG_DIR")) return env;
  return "data/catalogs";
}

std::map<std::string, std::vector<ScatteredEntry>> load_factor_catalogs(
    const std::vector<std::string>& types) {
  std::map<std::string, std::vector<ScatteredEntry>> out;
  for (const auto& t : types) {
    std::string fname = t;
    for (auto& c : fname) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::string path = catalog_dir() + "/" + fname + ".json";
    if (!std::filesystem::exists(path)) throw MissingCatalog("catalog file not found: " + path);
    out[t] = load_catalog(path);
  }
  return out;
}

int cmd_weyl_stats(const std::string& type, ReportFormat fmt) {
  RootDatum rd(TypeLabel::parse(type));
  WeylGroup wg = WeylGroup::enumerate(rd);
  std::cout << render_weyl_stats(wg, fmt);
  return 0;
}

int cmd_root_datum(const std::string& type, ReportFormat fmt) {
  RootDatum rd(TypeLabel::parse(type));
  std::cout << render_root_datum(rd, fmt);
  return 0;
}

int cmd_sieve(const std::string& type, const std::string& s_rho_text, bool all, int jobs,
              bool step1_only, ReportFormat fmt) {
  RootDatum rd(TypeLabel::parse(type));
  WeylGroup wg = WeylGroup::enumerate(rd);
  std::vector<FamilyReport> reports;
  if (all) {
    RunOptions opts;
    opts.jobs = jobs;
    opts.step1_count_only = step1_only;
    reports = run_all_families(wg, opts);
  } else {
    Involution s = wg.involution_from_rho_image(parse_weight(s_rho_text));
    reports.push_back(run_family(s, wg, step1_only));
  }
  SieveRenderOptions ropts;
  ropts.step1_count_only = step1_only;
  std::cout << render_families(reports, wg, fmt, ropts);
  return 0;
}

int cmd_strings(const std::string& type, int size_filter, ReportFormat fmt) {
  RootDatum rd(TypeLabel::parse(type));
  WeylGroup wg = WeylGroup::enumerate(rd);
  LeviCensus census = levi_census(rd);
  std::vector<std::string> needed;
  for (const auto& [size, kinds] : census.by_size)
    for (const auto& [key, cnt] : kinds) {
      std::string item;
      for (char c : key) {
        if (c == 'x') {
          if (!item.empty()) needed.push_back(item);
          item.clear();
        } else {
          item.push_back(c);
        }
      }
      if (!item.empty()) needed.push_back(item);
    }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  auto catalogs = load_factor_catalogs(needed);
  auto strings = build_strings(wg, catalogs);
  std::cout << render_strings(strings, census, wg, fmt, size_filter);
  return 0;
}

int cmd_verify(const std::vector<std::string>& paths, bool with_conjecture, bool fast, int jobs,
               ReportFormat fmt) {
  std::vector<CatalogVerification> results;
  std::map<std::string, std::vector<ScatteredEntry>> by_type;
  std::map<std::string, WeylGroup> groups;
  for (const auto& path : paths) {
    auto entries = load_catalog(path);
    if (entries.empty()) {
      results.push_back(CatalogVerification{path, "(empty)", {}, {}});
      results.back().report.all_passed = true;
      continue;
    }
    TypeLabel t = entries.front().group_type;
    auto it = groups.find(t.str());
    if (it == groups.end())
      it = groups.emplace(t.str(), WeylGroup::enumerate(RootDatum(t))).first;
    CatalogVerification v{path, t.str(), entries,
                          verify_catalog(entries, it->second, /*run_c7=*/!fast)};
    by_type[t.str()] = entries;
    results.push_back(std::move(v));
  }
  ConjectureReport conj;
  bool have_conj = false;
  if (with_conjecture) {
    conj = conjecture_a_check(by_type, jobs);
    have_conj = true;
  }
  std::cout << render_verification(results, have_conj ? &conj : nullptr, fmt);
  for (const auto& r : results)
    if (!r.report.all_passed) return kExitFailure;
  if (have_conj && !(conj.tables_match && conj.a6_consistent)) return kExitFailure;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic classification toolkit for unitary representations with "
               "non-zero Dirac cohomology of complex simple Lie groups"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --format after the subcommand name
  std::string format = "json";
  app.add_option("--format", format, "Output format: json or table")->capture_default_str();

  std::string type, s_rho_text;
  bool all = false, step1_only = false, with_conjecture = false, fast = false;
  int jobs = 0, size_filter = -1;
  std::vector<std::string> paths;

  auto* ws = app.add_subcommand("weyl-stats", "Weyl group and involution census");
  ws->add_option("type", type, "Type label, e.g. E6")->required();

  auto* rdcmd = app.add_subcommand("root-datum", "Cartan/Gram data of a root system");
  rdcmd->add_option("type", type, "Type label")->required();

  auto* sv = app.add_subcommand("sieve", "Two-step Dirac-inequality sieve for s-families");
  sv->add_option("type", type, "Type label")->required();
  auto* opt_srho = sv->add_option("--s-rho", s_rho_text, "Involution selector: its rho-image");
  auto* opt_all = sv->add_flag("--all", all, "Run every folded scattered family");
  sv->add_flag("--step1-count-only", step1_only, "Stop after the step-1 count");
  sv->add_option("--jobs", jobs, "Worker threads (default: hardware)");
  opt_srho->excludes(opt_all);

  auto* st = app.add_subcommand("strings", "String part built from Levi factor catalogs");
  st->add_option("type", type, "Type label")->required();
  st->add_option("--size", size_filter, "Only strings with |S| = this size");

  auto* vf = app.add_subcommand("verify", "Check catalog rows (C1-C7) and counts");
  vf->add_option("catalogs", paths, "Catalog JSON files")->required()->expected(-1);
  vf->add_flag("--conjecture", with_conjecture, "Also run the N_{A_n} = 2^{n-1} check");
  vf->add_flag("--fast", fast, "Skip the per-row sieve rerun (C7)");
  vf->add_option("--jobs", jobs, "Worker threads for the A6 sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    ReportFormat fmt = parse_format(format);
    if (ws->parsed()) return cmd_weyl_stats(type, fmt);
    if (rdcmd->parsed()) return cmd_root_datum(type, fmt);
    if (sv->parsed()) {
      if (!all && s_rho_text.empty()) {
        std::cerr << "sieve: give --s-rho=... or --all\n";
        return kExitFailure;
      }
      return cmd_sieve(type, s_rho_text, all, jobs, step1_only, fmt);
    }
    if (st->parsed()) return cmd_strings(type, size_filter, fmt);
    if (vf->parsed()) return cmd_verify(paths, with_conjecture, fast, jobs, fmt);
  } catch (const UnsupportedType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupportedType;
  } catch (const NotInOrbit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotInOrbit;
  } catch (const InfiniteFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfiniteFamily;
  } catch (const MissingCatalog& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMissingCatalog;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
