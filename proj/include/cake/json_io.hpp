#pragma once

#include <string>

#include <json.hpp>

#include "cake/brute_force.hpp"
#include "cake/construction.hpp"
#include "cake/decision.hpp"
#include "cake/fixtures.hpp"
#include "cake/model.hpp"

namespace cake {

using json = nlohmann::ordered_json;

// A JSON integer or a "p/q" string. Throws InvalidInstance otherwise.
Rational rational_from_json(const json& node);
json rational_to_json(const Rational& q);

// {"agents": [{"name", "segments": [{"width", "value"}]}], "entitlements": [...]}
// Segment values may be given at any positive scale per agent; they are
// normalized and the scale is kept in Instance::scales().
Instance instance_from_json(const json& doc);
// Values are written back at the recorded scale.
json instance_to_json(const Instance& instance);
Instance load_instance(const std::string& path);

json ledger_to_json(const QueryLedger& ledger);
json decision_to_json(const Decision& decision);
json allocation_to_json(const Allocation& allocation, const Instance& instance);
Allocation allocation_from_json(const json& doc);
json report_to_json(const VerifierReport& report, Mode mode);
json provenance_to_json(const FamilyParams& params);

json read_json_file(const std::string& path);

}  // namespace cake
