#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ybelab/verify.hpp"

namespace ybelab {

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const VerificationReport& r);
// {"reports": [...]} ordered as given
nlohmann::json to_json(const std::vector<VerificationReport>& rs);

// copy with every elapsed_ms removed
nlohmann::json strip_timing(nlohmann::json j);

std::string summary_line(const CheckResult& c);
std::string summary(const VerificationReport& r);

}  // namespace ybelab
