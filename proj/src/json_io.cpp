#include "toricgb/json_io.hpp"

#include <stdexcept>

namespace toricgb {

using nlohmann::ordered_json;

Configuration config_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("alpha") || !j.contains("d") || !j.contains("generators"))
        throw std::invalid_argument("config JSON needs alpha, d and generators");
    Configuration cfg;
    cfg.alpha = j.at("alpha").get<int>();
    cfg.d = j.at("d").get<int>();
    for (const auto& g : j.at("generators")) {
        Point p;
        for (const auto& v : g) p.push_back(v.get<long long>());
        cfg.generators.push_back(std::move(p));
    }
    return cfg;
}

ordered_json config_to_json(const Configuration& cfg) {
    ordered_json j;
    j["alpha"] = cfg.alpha;
    j["d"] = cfg.d;
    j["generators"] = cfg.generators;
    return j;
}

ordered_json basis_to_json(const BinomialBasis& basis) {
    ordered_json j;
    j["order"] = order_name(basis.order.kind);
    j["c"] = basis.universe.c;
    j["d"] = basis.universe.d;
    j["max_degree"] = basis.max_degree;
    ordered_json elems = ordered_json::array();
    for (const Binomial& b : basis.elements)
        elems.push_back(ordered_json{{"lead", b.lead}, {"tail", b.tail}});
    j["elements"] = std::move(elems);
    return j;
}

namespace {

ordered_json face_to_json(const FaceData& f) {
    std::vector<int> one_based;
    for (int i : f.zero_set) one_based.push_back(i + 1);
    ordered_json j;
    j["zero_set"] = one_based;
    j["dimension"] = f.dimension;
    j["points_in_config"] = f.points_in_config;
    j["points_in_m"] = f.points_in_m;
    j["full"] = f.is_full;
    return j;
}

ordered_json gcm_to_json(const GcmResult& g) {
    ordered_json j;
    switch (g.status) {
        case GcmResult::Status::Yes:
            j["status"] = "yes";
            j["difference"] = g.finite_difference;
            break;
        case GcmResult::Status::No:
            j["status"] = "no";
            j["witness"] = g.witness;
            j["direction"] = g.witness_direction + 1;
            break;
        case GcmResult::Status::Unknown:
            j["status"] = "unknown";
            break;
    }
    j["degree_cap"] = g.degree_cap;
    return j;
}

ordered_json violation_to_json(const BoundViolation& v) {
    return ordered_json{{"bound", v.bound}, {"observed", v.observed}, {"allowed", v.allowed}};
}

}  // namespace

ordered_json invariant_report_to_json(const Configuration& cfg, const InvariantReport& rep) {
    ordered_json j;
    j["config"] = config_to_json(cfg);
    j["r"] = rep.r;
    j["deg"] = rep.deg;
    j["codim"] = rep.codim;
    j["hilbert_numerator"] = rep.hilbert_numerator;
    ordered_json faces = ordered_json::array();
    for (const FaceData& f : rep.faces) faces.push_back(face_to_json(f));
    j["faces"] = std::move(faces);
    j["normal"] = rep.normal;
    j["gcm"] = gcm_to_json(rep.gcm);
    j["isolated_singularity"] = rep.isolated_singularity;
    j["bounds"] = rep.bounds;
    j["gb_degrees"] = rep.gb_degrees;
    return j;
}

ordered_json campaign_outcome_to_json(const CampaignOutcome& outcome, bool include_timings) {
    const Campaign& c = outcome.campaign;
    ordered_json j;
    j["campaign"] = {{"alpha", c.alpha},
                     {"d", c.d},
                     {"mode", c.exhaustive ? "exhaustive" : "sample"},
                     {"samples", c.sample_count},
                     {"seed", c.seed},
                     {"c_min", c.c_min},
                     {"c_max", c.c_max},
                     {"orders", c.orders},
                     {"checks", c.checks}};
    ordered_json results = ordered_json::array();
    for (const CheckResult& r : outcome.results) {
        ordered_json rj;
        rj["config_ordinal"] = r.config_ordinal;
        rj["config"] = config_to_json(r.config);
        rj["order"] = r.order;
        if (r.skipped) {
            rj["skipped"] = r.skip_reason;
        } else {
            rj["gb_max_degree"] = r.gb_max_degree;
            rj["bounds"] = r.bound_values;
            ordered_json vs = ordered_json::array();
            for (const auto& v : r.violations) vs.push_back(violation_to_json(v));
            rj["violations"] = std::move(vs);
            ordered_json egs = ordered_json::array();
            for (const auto& v : r.eg_findings) egs.push_back(violation_to_json(v));
            rj["eg_findings"] = std::move(egs);
        }
        if (include_timings) rj["seconds"] = r.seconds;
        results.push_back(std::move(rj));
    }
    j["results"] = std::move(results);
    j["summary"] = {{"proven_bound_violated", outcome.proven_bound_violated},
                    {"eg_findings", outcome.eg_finding_count},
                    {"skipped", outcome.skipped_count}};
    return j;
}

}  // namespace toricgb
