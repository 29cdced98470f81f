#pragma once

#include "json.hpp"

#include "symspace/catalog.hpp"
#include "symspace/classify.hpp"
#include "symspace/verify.hpp"

namespace symspace {

/// {root_system, class_id, theta0, grading, orbit_size, inner, dim_G, dim_K,
///  dim_T_fixed, quasi_split, split_rank?, k_type?, real_form?}
nlohmann::json to_json(const SymmetricSpaceReport& report);
/// Inverse of to_json; throws nlohmann::json::exception on schema mismatch.
SymmetricSpaceReport report_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const VerificationOutcome& outcome);
nlohmann::json to_json(const FamilyResult& result);
nlohmann::json to_json(const RealFormTable& table);

bool operator==(const SymmetricSpaceReport& a, const SymmetricSpaceReport& b);

}  // namespace symspace
