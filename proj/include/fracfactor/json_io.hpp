#pragma once

#include <string>

#include "json.hpp"

#include "fracfactor/factor_oracle.hpp"
#include "fracfactor/spectral.hpp"
#include "fracfactor/theorem.hpp"

namespace fracfactor {

using Json = nlohmann::ordered_json;

/// {"S":[...],"T":[...],"theta":int,"epsilon":int,"rule":"deleted"|"factor"}
Json to_json(const DeficiencyWitness& w);
/// [{"u":int,"v":int,"h":number}, ...] over edges with h > 0.
Json to_json(const FractionalAssignment& h);
Json to_json(const TheoremReport& r);
Json to_json(const SharpnessReport& r);
Json to_json(const ScanSummary& s);
/// {"line","graph6","report"} or {"line","graph6","error"}.
Json to_json(const ScanRecord& r);

/// Tab-separated: id, theorem, hypothesis_met, oracle, consistent, rho, q, e, delta.
std::string tsv_header();
std::string to_tsv(const ScanRecord& r, TheoremId theorem);

}  // namespace fracfactor
