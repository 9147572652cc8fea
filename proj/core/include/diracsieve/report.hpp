#pragma once

#include <string>
#include <vector>

#include "diracsieve/catalog.hpp"
#include "diracsieve/levi.hpp"

namespace ds {

inline constexpr const char* kToolVersion = "1.0.0";

enum class ReportFormat { json, table };

/// Everything below renders deterministically: same inputs, same bytes.

std::string render_weyl_stats(const WeylGroup& wg, ReportFormat fmt);

std::string render_root_datum(const RootDatum& rd, ReportFormat fmt);

struct SieveRenderOptions {
  bool step1_count_only = false;
};
std::string render_families(const std::vector<FamilyReport>& reports, const WeylGroup& wg,
                            ReportFormat fmt, const SieveRenderOptions& opts = {});

std::string render_strings(const std::vector<StringDescriptor>& strings, const LeviCensus& census,
                           const WeylGroup& wg, ReportFormat fmt, int size_filter = -1);

struct CatalogVerification {
  std::string source;
  std::string type_label;  // empty catalog => "(empty)"
  std::vector<ScatteredEntry> entries;
  VerificationReport report;
};
std::string render_verification(const std::vector<CatalogVerification>& results,
                                const ConjectureReport* conjecture, ReportFormat fmt);

/// T-parameter template of a string: constants on fixed coordinates,
/// "2*l<i>(+c)" on free ones. Example: "[0,2*l2,0,2*l4+1,2*l5,2*l6]".
std::string t_template_str(const StringDescriptor& sd);

}  // namespace ds
