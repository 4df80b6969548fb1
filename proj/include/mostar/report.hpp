#pragma once

#include <string>

#include <json.hpp>

#include "mostar/enumerate.hpp"
#include "mostar/mostar.hpp"
#include "mostar/verify.hpp"

namespace mostar::report {

// Machine format: JSON with sorted object keys and two-space indentation,
// so equal reports serialize to equal bytes.

nlohmann::json to_json(const verify::CounterexampleRecord& rec);
nlohmann::json to_json(const verify::ClaimVerdict& verdict);
nlohmann::json to_json(const verify::VerificationReport& report);
nlohmann::json to_json(const enumerate::ExtremalResult& result);
nlohmann::json to_json(const EdgeContribution& c);

std::string render_machine(const verify::VerificationReport& report);

/// Markdown rendering: a summary table, then one section per claim.
std::string render_table(const verify::VerificationReport& report);

}  // namespace mostar::report
