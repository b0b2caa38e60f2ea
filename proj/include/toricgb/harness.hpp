#ifndef TORICGB_HARNESS_HPP
#define TORICGB_HARNESS_HPP

#include <map>
#include <string>
#include <vector>

#include "toricgb/invariants.hpp"

namespace toricgb {

struct Campaign {
    int alpha = 0;
    int d = 0;
    bool exhaustive = true;
    int sample_count = 0;
    unsigned long long seed = 0;
    int c_min = 2;
    int c_max = -1;  // -1: up to every non-vertex point
    std::vector<std::string> orders = {"revlex"};
    std::vector<std::string> checks = {"eg", "a1", "a3", "a4", "a6", "a2"};
    int jobs = 1;
    double per_config_timeout_s = 30.0;
    BuchbergerOptions buchberger;
};

struct BoundViolation {
    std::string bound;
    long long observed = 0;
    long long allowed = 0;
};

struct CheckResult {
    int config_ordinal = 0;
    Configuration config;
    std::string order;
    int gb_max_degree = 0;
    std::map<std::string, long long> bound_values;
    std::vector<BoundViolation> violations;   // proven bounds; any entry fails the campaign
    std::vector<BoundViolation> eg_findings;  // the open Question; reported, not failed
    bool skipped = false;
    std::string skip_reason;
    double seconds = 0.0;
};

struct CampaignOutcome {
    Campaign campaign;
    std::vector<CheckResult> results;
    bool proven_bound_violated = false;
    long long eg_finding_count = 0;
    long long skipped_count = 0;
};

// All configurations over the non-vertex points of M_{alpha,d} with
// c in [c_min, c_max], generators ascending, deterministic order. Refuses
// when more than 20 candidate points would make exhaustion unreasonable.
std::vector<Configuration> enumerate_configs(int alpha, int d, int c_min, int c_max);

// Seeded uniform sampling (c uniform in range, then a uniform c-subset),
// deduplicated; deterministic for a fixed seed.
std::vector<Configuration> sample_configs(int alpha, int d, int count, unsigned long long seed,
                                          int c_min = 2, int c_max = -1);

CampaignOutcome run_campaign(const Campaign& campaign);

struct ExampleOutcome {
    std::string name;
    bool passed = true;
    std::vector<std::string> checks;  // one "ok/FAIL: ..." line per assertion
};

// Registry of the worked examples: after-a3, a1b, a5, c1b, b2-fig3,
// b2-facet7. Parameters: a1b takes alpha,d; a5 takes beta,c.
ExampleOutcome run_example(const std::string& name, std::map<std::string, long long> params = {});
std::vector<std::string> example_names();

// Named configurations used by the registry and the verification suite.
Configuration after_a3_config();
Configuration a1b_config(int alpha, int d);
Configuration a5_config(int beta, int c);
Configuration c1b_config();
Configuration m_minus_points_config(int alpha, int d, const PointSet& deleted);
std::vector<Configuration> fig3_configs();    // both interior points of two opposite edges deleted
std::vector<Configuration> fig4_configs();    // one interior point per 4-cycle edge deleted
std::vector<Configuration> facet7_configs();  // Prop B2 subcase 2a facet semigroups

std::string report_text(const CampaignOutcome& outcome);

}  // namespace toricgb

#endif
