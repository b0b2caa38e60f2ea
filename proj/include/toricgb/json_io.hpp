#ifndef TORICGB_JSON_IO_HPP
#define TORICGB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "toricgb/harness.hpp"

namespace toricgb {

// Configuration wire format: {"alpha": 4, "d": 2, "generators": [[3,1],[1,3]]}.
// Vertices are implied; generator order is preserved.
Configuration config_from_json_text(const std::string& text);
nlohmann::ordered_json config_to_json(const Configuration& cfg);

nlohmann::ordered_json basis_to_json(const BinomialBasis& basis);
nlohmann::ordered_json invariant_report_to_json(const Configuration& cfg,
                                                const InvariantReport& report);

// Timings are excluded by default so identical campaigns serialize
// byte-identically.
nlohmann::ordered_json campaign_outcome_to_json(const CampaignOutcome& outcome,
                                                bool include_timings = false);

}  // namespace toricgb

#endif
