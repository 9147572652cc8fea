#include "diracsieve/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ds {

namespace {

using json = nlohmann::ordered_json;

json envelope(const std::string& command, const std::string& type_label, json payload) {
  json env;
  env["command"] = command;
  env["type"] = type_label;
  env["tool_version"] = kToolVersion;
  env["payload"] = std::move(payload);
  return env;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json weight_json(const Weight& w) {
  json arr = json::array();
  for (const auto& x : w) {
    if (is_integer(x) && x.get_num().fits_slong_p())
      arr.push_back(static_cast<std::int64_t>(x.get_num().get_si()));
    else
      arr.push_back(rational_str(x));
  }
  return arr;
}

json rational_weight_json(const Weight& w) {
  json arr = json::array();
  for (const auto& x : w) arr.push_back(rational_str(x));
  return arr;
}

json matrix_json(const std::vector<std::vector<Rational>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rational_str(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

json candidate_json(const Candidate& c) {
  json j;
  j["lambda"] = rational_weight_json(c.lambda);
  j["mu"] = weight_json(c.mu);
  j["t_param"] = weight_json(c.t_param);
  j["a_param"] = weight_json(c.a_param);
  j["delta1"] = rational_str(c.delta1);
  j["delta2"] = rational_str(c.delta2);
  j["starred"] = c.starred;
  return j;
}

std::string word_str(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(word[i]);
  }
  return out.empty() ? "e" : out;
}

struct WeylStats {
  std::size_t order, involutions, self_dual, empty_fixed, empty_fixed_self_dual, folded;
};

WeylStats weyl_stats_of(const WeylGroup& wg) {
  WeylStats st{};
  st.order = wg.size();
  st.involutions = wg.involutions().size();
  st.self_dual = wg.self_dual_involution_count();
  auto empties = wg.empty_Is_involutions();
  st.empty_fixed = empties.size();
  for (const auto& s : empties)
    if (s.self_dual) ++st.empty_fixed_self_dual;
  st.folded = st.empty_fixed_self_dual + (st.empty_fixed - st.empty_fixed_self_dual) / 2;
  return st;
}

}  // namespace

std::string render_weyl_stats(const WeylGroup& wg, ReportFormat fmt) {
  WeylStats st = weyl_stats_of(wg);
  const std::string type = wg.datum().label().str();
  if (fmt == ReportFormat::json) {
    json p;
    p["order"] = st.order;
    p["involutions"] = st.involutions;
    p["self_dual_involutions"] = st.self_dual;
    p["empty_fixed_set"] = st.empty_fixed;
    p["empty_fixed_set_self_dual"] = st.empty_fixed_self_dual;
    p["folded_families"] = st.folded;
    return dump(envelope("weyl-stats", type, std::move(p)));
  }
  std::ostringstream os;
  os << "Weyl group of " << type << "\n"
     << "  |W|                          " << st.order << "\n"
     << "  involutions                  " << st.involutions << "\n"
     << "  self-dual involutions        " << st.self_dual << "\n"
     << "  empty I(s)                   " << st.empty_fixed << "\n"
     << "  empty I(s), self-dual        " << st.empty_fixed_self_dual << "\n"
     << "  folded scattered families    " << st.folded << "\n";
  return os.str();
}

std::string render_root_datum(const RootDatum& rd, ReportFormat fmt) {
  const int n = rd.rank();
  if (fmt == ReportFormat::json) {
    json p;
    json cartan = json::array();
    for (int i = 1; i <= n; ++i) {
      json row = json::array();
      for (int j = 1; j <= n; ++j) row.push_back(rd.pairing(i, j));
      cartan.push_back(std::move(row));
    }
    p["cartan"] = std::move(cartan);
    p["cartan_inverse"] = matrix_json(rd.cartan_inverse());
    p["gram"] = matrix_json(rd.gram());
    p["rho"] = weight_json(rd.rho());
    p["highest_root"] = weight_json(rd.highest_root());
    p["rho_norm_sq"] = rational_str(rd.norm_sq(rd.rho()));
    p["two_rho_norm_sq"] = rational_str(rd.norm_sq(Rational(2) * rd.rho()));
    json roots = json::array();
    for (int i = 1; i <= n; ++i) roots.push_back(weight_json(rd.simple_root(i)));
    p["simple_roots"] = std::move(roots);
    return dump(envelope("root-datum", rd.label().str(), std::move(p)));
  }
  std::ostringstream os;
  os << "Root datum " << rd.label().str() << "\n";
  os << "  cartan pairing <a_i, a_j^v>:\n";
  for (int i = 1; i <= n; ++i) {
    os << "   ";
    for (int j = 1; j <= n; ++j) os << " " << rd.pairing(i, j);
    os << "\n";
  }
  os << "  rho            " << weight_str(rd.rho()) << "\n";
  os << "  highest root   " << weight_str(rd.highest_root()) << "\n";
  os << "  (rho,rho)      " << rational_str(rd.norm_sq(rd.rho())) << "\n";
  os << "  ||2rho||^2     " << rational_str(rd.norm_sq(Rational(2) * rd.rho())) << "\n";
  return os.str();
}

std::string render_families(const std::vector<FamilyReport>& reports, const WeylGroup& wg,
                            ReportFormat fmt, const SieveRenderOptions& opts) {
  const std::string type = wg.datum().label().str();
  if (fmt == ReportFormat::json) {
    json fams = json::array();
    for (const auto& rep : reports) {
      json f;
      f["s_rho"] = weight_json(rep.s.element.rho_image);
      f["s_word"] = rep.s.element.word;
      f["length"] = rep.s.element.word.size();
      f["self_dual"] = rep.s.self_dual;
      f["step1_count"] = rep.step1_count;
      if (!opts.step1_count_only) {
        json surv = json::array();
        for (const auto& c : rep.step2_survivors) surv.push_back(candidate_json(c));
        f["step2_survivors"] = std::move(surv);
        json folded = json::array();
        for (const auto& c : rep.folded_survivors) folded.push_back(candidate_json(c));
        f["folded_survivors"] = std::move(folded);
      }
      fams.push_back(std::move(f));
    }
    json p;
    p["family_count"] = reports.size();
    p["families"] = std::move(fams);
    return dump(envelope("sieve", type, std::move(p)));
  }
  std::ostringstream os;
  for (const auto& rep : reports) {
    os << "family s.rho = " << weight_str(rep.s.element.rho_image) << "  (word "
       << word_str(rep.s.element.word) << ", " << (rep.s.self_dual ? "self-dual" : "dual pair")
       << ")\n";
    os << "  step-1 candidates: " << rep.step1_count << "\n";
    if (opts.step1_count_only) continue;
    os << "  step-2 survivors:  " << rep.step2_survivors.size() << "\n";
    for (const auto& c : rep.folded_survivors) {
      os << "    lambda = " << weight_str(c.lambda) << (c.starred ? "*" : " ") << "  T = "
         << weight_str(c.t_param) << "  A = " << weight_str(c.a_param)
         << "  delta2 = " << rational_str(c.delta2) << "\n";
    }
  }
  return os.str();
}

std::string t_template_str(const StringDescriptor& sd) {
  std::string out = "[";
  const std::size_t n = sd.t_const.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ",";
    const bool free_i =
        std::find(sd.free_indices.begin(), sd.free_indices.end(), static_cast<int>(i + 1)) !=
        sd.free_indices.end();
    if (!free_i) {
      out += rational_str(sd.t_const[i]);
      continue;
    }
    out += "2*l" + std::to_string(i + 1);
    if (sd.t_const[i] != 0) {
      if (sd.t_const[i] > 0) out += "+";
      out += rational_str(sd.t_const[i]);
    }
  }
  return out + "]";
}

std::string render_strings(const std::vector<StringDescriptor>& strings, const LeviCensus& census,
                           const WeylGroup& wg, ReportFormat fmt, int size_filter) {
  const std::string type = wg.datum().label().str();
  std::vector<const StringDescriptor*> selected;
  for (const auto& sd : strings)
    if (size_filter < 0 || static_cast<int>(sd.fixed_set.size()) == size_filter)
      selected.push_back(&sd);

  std::map<int, int> counts;
  for (const auto& sd : strings) counts[static_cast<int>(sd.fixed_set.size())]++;

  if (fmt == ReportFormat::json) {
    json p;
    json cs;
    for (const auto& [size, kinds] : census.by_size) {
      json k;
      for (const auto& [key, cnt] : kinds) k[key.empty() ? "(empty)" : key] = cnt;
      cs[std::to_string(size)] = std::move(k);
    }
    p["census"] = std::move(cs);
    json by_size;
    for (const auto& [size, cnt] : counts) by_size[std::to_string(size)] = cnt;
    p["strings_by_size"] = std::move(by_size);
    p["total"] = strings.size();
    if (size_filter >= 0) p["size_filter"] = size_filter;
    json arr = json::array();
    for (const StringDescriptor* sd : selected) {
      json s;
      s["fixed_set"] = sd->fixed_set;
      s["free_indices"] = sd->free_indices;
      s["s_rho"] = weight_json(sd->ambient_involution.element.rho_image);
      s["s_word"] = sd->ambient_involution.element.word;
      json fl;
      for (const auto& [i, v] : sd->fixed_lambda) fl[std::to_string(i)] = rational_str(v);
      s["fixed_lambda"] = std::move(fl);
      s["t_template"] = t_template_str(*sd);
      s["a_param"] = weight_json(sd->a_const);
      json srcs = json::array();
      for (const auto& src : sd->sources) {
        json sj;
        sj["factor"] = src.factor_type.str();
        sj["s_rho"] = weight_json(src.factor_s_rho);
        sj["lambda"] = rational_weight_json(src.factor_lambda);
        srcs.push_back(std::move(sj));
      }
      s["sources"] = std::move(srcs);
      arr.push_back(std::move(s));
    }
    p["strings"] = std::move(arr);
    return dump(envelope("strings", type, std::move(p)));
  }

  std::ostringstream os;
  os << "strings of " << type << ": total " << strings.size() << "  (";
  bool first = true;
  for (const auto& [size, cnt] : counts) {
    if (!first) os << ", ";
    os << "N" << size << "=" << cnt;
    first = false;
  }
  os << ")\n";
  for (const StringDescriptor* sd : selected) {
    os << "  S={";
    for (std::size_t i = 0; i < sd->fixed_set.size(); ++i)
      os << (i ? "," : "") << sd->fixed_set[i];
    os << "}  s.rho=" << weight_str(sd->ambient_involution.element.rho_image)
       << "  T=" << t_template_str(*sd) << "  A=" << weight_str(sd->a_const) << "\n";
  }
  return os.str();
}

std::string render_verification(const std::vector<CatalogVerification>& results,
                                const ConjectureReport* conjecture, ReportFormat fmt) {
  bool all = true;
  for (const auto& r : results) all = all && r.report.all_passed;
  if (conjecture) all = all && conjecture->tables_match && conjecture->a6_consistent;

  if (fmt == ReportFormat::json) {
    json arr = json::array();
    for (const auto& r : results) {
      json c;
      c["source"] = r.source;
      c["catalog_type"] = r.type_label;
      c["rows"] = r.report.rows;
      c["stars"] = r.report.stars;
      c["unfolded_count"] = r.report.unfolded_count;
      c["all_passed"] = r.report.all_passed;
      json rows = json::array();
      for (std::size_t i = 0; i < r.report.entries.size(); ++i) {
        const EntryCheck& e = r.report.entries[i];
        json rj;
        rj["row"] = i + 1;
        rj["c1_involution"] = e.c1_element_is_involution;
        rj["c2_empty_fixed_set"] = e.c2_empty_fixed_set;
        rj["c3_in_family"] = e.c3_lambda_in_family;
        rj["c4_dirac_equality"] = e.c4_dirac_equality;
        rj["c5_usmall"] = e.c5_usmall_flag;
        rj["c6_stars"] = e.c6_star_consistency;
        rj["c7_sieve"] = e.c7_ran ? json(e.c7_survives_sieve) : json(nullptr);
        rj["delta2_equality"] = e.delta2_equality;
        if (e.review) rj["review"] = true;
        if (!e.detail.empty()) rj["detail"] = e.detail;
        rows.push_back(std::move(rj));
      }
      c["entries"] = std::move(rows);
      arr.push_back(std::move(c));
    }
    json p;
    p["catalogs"] = std::move(arr);
    if (conjecture) {
      json cj;
      for (const auto& [n, pair] : conjecture->verified)
        cj["A" + std::to_string(n)] = {{"count", pair.first}, {"expected", pair.second}};
      cj["tables_match"] = conjecture->tables_match;
      cj["A6_folded_families"] = conjecture->a6_folded_families;
      cj["A6_unfolded_survivors"] = conjecture->a6_unfolded_survivors;
      cj["A6_sieve_consistent"] = conjecture->a6_consistent;
      p["conjecture_2_pow_n_minus_1"] = std::move(cj);
    }
    p["all_passed"] = all;
    std::string type = results.size() == 1 ? results.front().type_label : "multi";
    return dump(envelope("verify", type, std::move(p)));
  }

  std::ostringstream os;
  for (const auto& r : results) {
    os << r.source << " (" << r.type_label << "): rows=" << r.report.rows
       << " stars=" << r.report.stars << " N=" << r.report.unfolded_count << "  "
       << (r.report.all_passed ? "PASS" : "FAIL") << "\n";
    for (std::size_t i = 0; i < r.report.entries.size(); ++i) {
      const EntryCheck& e = r.report.entries[i];
      if (i < r.entries.size()) {
        const ScatteredEntry& row = r.entries[i];
        os << "  " << weight_str(row.s_rho) << (row.s_starred ? "*" : " ") << " | "
           << weight_str(row.lambda) << (row.lambda_starred ? "*" : " ") << " | "
           << weight_str(row.spin_lkt) << " | " << row.mult << " | "
           << (row.u_small ? "u-small" : "not u-small") << "\n";
      }
      os << "  row " << (i + 1) << ": C1 " << (e.c1_element_is_involution ? "ok" : "FAIL")
         << " | C2 " << (e.c2_empty_fixed_set ? "ok" : "FAIL") << " | C3 "
         << (e.c3_lambda_in_family ? "ok" : "FAIL") << " | C4 "
         << (e.c4_dirac_equality ? "ok" : "FAIL") << " | C5 " << (e.c5_usmall_flag ? "ok" : "FAIL")
         << " | C6 " << (e.c6_star_consistency ? "ok" : "FAIL") << " | C7 "
         << (e.c7_ran ? (e.c7_survives_sieve ? "ok" : "FAIL") : "skipped")
         << (e.delta2_equality ? " | delta2=0" : "") << (e.review ? " | REVIEW" : "");
      if (!e.detail.empty()) os << "  -- " << e.detail;
      os << "\n";
    }
  }
  if (conjecture) {
    os << "conjecture N_{A_n} = 2^(n-1): ";
    for (const auto& [n, pair] : conjecture->verified)
      os << "A" << n << " " << pair.first << "/" << pair.second << "  ";
    os << (conjecture->tables_match ? "MATCH" : "MISMATCH") << "; A6 sieve-level: "
       << conjecture->a6_unfolded_survivors << " unfolded survivors across "
       << conjecture->a6_folded_families << " families, "
       << (conjecture->a6_consistent ? "consistent" : "INCONSISTENT") << "\n";
  }
  os << (all ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace ds
