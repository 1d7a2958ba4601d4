#pragma once

// Structured (JSON) rendering of invariant reports. Object keys are sorted,
// so equal reports serialize to identical bytes.

#include "json.hpp"
#include "mcmgr/analysis.hpp"

namespace mcmgr {

nlohmann::json report_to_json(const InvariantReport& report);

/// Inverse of report_to_json for every serialized field (levels are not
/// serialized and come back empty). Throws InputError on malformed input.
InvariantReport report_from_json(const nlohmann::json& doc);

}  // namespace mcmgr
