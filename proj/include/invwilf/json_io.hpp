#pragma once

#include <json.hpp>

#include "invwilf/bijections.hpp"
#include "invwilf/exchange.hpp"
#include "invwilf/verify.hpp"

namespace invwilf {

nlohmann::json trace_json(const TraceNode& node);
nlohmann::json audit_json(const AuditReport& report);
nlohmann::json equivalence_json(const EquivalenceReport& report);
nlohmann::json classification_json(const ClassificationResult& result);
nlohmann::json distribution_json(const JointDistribution& dist);

}  // namespace invwilf
