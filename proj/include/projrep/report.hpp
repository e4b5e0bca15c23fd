#pragma once

// JSON and CSV persistence: group files, cocycles, multipliers, degree and
// representation exports, and verification reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "projrep/verifier.hpp"

namespace projrep {

using ojson = nlohmann::ordered_json;

/// {"name", "points", "generators"} with 1-based one-line images.
ojson group_to_json(const FiniteGroup& g);
/// Validates the document; throws ParseError, or ClosureTooLarge above `cap`.
GroupPtr group_from_json(const ojson& doc, int cap = kDefaultOrderCap);
GroupPtr load_group(const std::string& path, int cap = kDefaultOrderCap);
void export_group(const FiniteGroup& g, const std::string& path);

ojson cayley_table_json(const FiniteGroup& g);
ojson cocycle_to_json(const Cocycle& a);
ojson multiplier_to_json(const SchurMultiplier& m);
/// Degrees, c-regular class representatives, seed and residual of one context.
ojson degrees_to_json(const TwistedContext& ctx, std::uint64_t seed);
/// Matrices at the generators as {"re": [...], "im": [...]} row-major arrays.
ojson rep_to_json(const ProjRep& r, const std::string& cocycle_ref);

ojson check_to_json(const CheckResult& r, const VerifyConfig& cfg);
/// One compact JSON object per line.
std::string to_jsonl(const std::vector<CheckResult>& results, const VerifyConfig& cfg);
/// group,check,pass,fail,inapplicable rows in first-seen order.
std::string summary_csv(const std::vector<CheckResult>& results);

struct SuiteTotals {
  int pass = 0, fail = 0, inapplicable = 0;
};
SuiteTotals totals(const std::vector<CheckResult>& results);

void write_text(const std::string& path, const std::string& text);

}  // namespace projrep
