#pragma once

#include "json.hpp"

#include "gsqr/bounds.hpp"
#include "gsqr/diagnostics.hpp"
#include "gsqr/factorization.hpp"

namespace gsqr {

void to_json(nlohmann::json& j, const AssumptionReport& r);
void from_json(const nlohmann::json& j, AssumptionReport& r);
void to_json(nlohmann::json& j, const PrefixAudit& r);
void from_json(const nlohmann::json& j, PrefixAudit& r);
/// Includes a redundant "summary" object (the k = n row) for readers that
/// only want the headline numbers; from_json ignores it.
void to_json(nlohmann::json& j, const DiagnosticsReport& r);
void from_json(const nlohmann::json& j, DiagnosticsReport& r);
void to_json(nlohmann::json& j, const FinalAudit& r);
void from_json(const nlohmann::json& j, FinalAudit& r);

}  // namespace gsqr
