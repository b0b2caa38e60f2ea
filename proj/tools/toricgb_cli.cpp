// Command line front end: every operation is reproducible from its argument
// vector alone. Results go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 proven-bound or regression violation,
//             2 input error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toricgb/ints.hpp"
#include "toricgb/json_io.hpp"

using namespace toricgb;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

Configuration load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Configuration cfg = config_from_json_text(buf.str());
    auto violations = validate(cfg);
    bool bad = has_errors(violations);
    for (const auto& v : violations)
        std::cerr << (v.severity == Severity::Error ? "error: " : "warning: ") << v.message << "\n";
    if (bad) throw std::invalid_argument("configuration is invalid");
    return cfg;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void parse_c_range(const std::string& s, int& lo, int& hi) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw std::invalid_argument("c-range must look like LO..HI");
    lo = std::stoi(s.substr(0, pos));
    hi = std::stoi(s.substr(pos + 2));
}

int cmd_gb(const std::string& config_path, const std::string& order_name, long long truncate_cap,
           const std::string& via, const std::string& format, long long budget) {
    Configuration cfg = load_config(config_path);
    Universe xy{cfg.c(), cfg.d, false};
    BuchbergerOptions opts;
    if (budget > 0) opts.pair_budget = budget;
    BinomialBasis gens = via == "lattice" ? toric_ideal_by_lattice(cfg, opts)
                                          : toric_ideal_by_elimination(cfg, opts);
    TermOrder order = xy_order(order_name, xy);
    BinomialBasis gb = truncate_cap >= 0
                           ? truncated_groebner(gens.elements, order, truncate_cap, opts)
                           : reduced_groebner_basis(gens.elements, order, opts);
    if (format == "json")
        std::cout << basis_to_json(gb).dump(2) << "\n";
    else
        std::cout << format_basis_text(gb);
    return 0;
}

int cmd_invariants(const std::string& config_path, int gcm_cap, const std::string& orders) {
    Configuration cfg = load_config(config_path);
    InvariantOptions opts;
    if (gcm_cap >= 0) opts.gcm_degree_cap = gcm_cap;
    if (!orders.empty()) opts.gb_orders = split_list(orders);
    InvariantReport rep = compute_invariants(cfg, opts);
    std::cout << invariant_report_to_json(cfg, rep).dump(2) << "\n";
    return 0;
}

int cmd_verify(const Campaign& camp, const std::string& out_path, const std::string& format,
               bool timings) {
    CampaignOutcome outcome = run_campaign(camp);
    std::string rendered = format == "text"
                               ? report_text(outcome)
                               : campaign_outcome_to_json(outcome, timings).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << rendered;
        std::cerr << "report written to " << out_path << "\n";
    }
    return outcome.proven_bound_violated ? kExitViolation : 0;
}

int cmd_example(const std::string& name, const std::string& params_text) {
    std::map<std::string, long long> params;
    for (const std::string& kv : split_list(params_text)) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("params must look like key=value");
        params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
    ExampleOutcome out = run_example(name, params);
    for (const auto& line : out.checks) std::cout << line << "\n";
    std::cout << (out.passed ? "PASSED " : "FAILED ") << out.name << "\n";
    return out.passed ? 0 : kExitViolation;
}

int cmd_enumerate(int alpha, int d, const std::string& c_range) {
    int lo = 2, hi = -1;
    if (!c_range.empty()) parse_c_range(c_range, lo, hi);
    for (const Configuration& cfg : enumerate_configs(alpha, d, lo, hi))
        std::cout << config_to_json(cfg).dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Groebner bases and invariants of simplicial toric ideals"};
    app.require_subcommand(1);

    std::string config_path, order_name = "revlex", via = "elim", format = "text";
    long long truncate_cap = -1, gb_budget = -1;
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a configuration");
    gb->add_option("--config", config_path, "configuration JSON file")->required();
    gb->add_option("--order", order_name, "revlex | lex | xblock");
    gb->add_option("--truncate", truncate_cap, "degree-truncated run (homogeneous only)");
    gb->add_option("--via", via, "generator route: elim | lattice")
        ->check(CLI::IsMember({"elim", "lattice"}));
    gb->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    gb->add_option("--budget", gb_budget, "S-pair budget (exit 3 when exceeded)");

    std::string inv_config, inv_orders;
    int gcm_cap = -1;
    auto* inv = app.add_subcommand("invariants", "semigroup and ring invariants, all bounds");
    inv->add_option("--config", inv_config, "configuration JSON file")->required();
    inv->add_option("--gcm-cap", gcm_cap, "degree cap for the generalized-CM search");
    inv->add_option("--orders", inv_orders, "extra orders for GB degrees, comma separated");

    Campaign camp;
    bool exhaustive = false;
    std::string camp_orders = "revlex", camp_checks, camp_c_range, out_path, verify_format = "json";
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "bound verification campaign");
    verify->add_option("--alpha", camp.alpha)->required();
    verify->add_option("--dim", camp.d)->required();
    verify->add_flag("--exhaustive", exhaustive, "enumerate every configuration");
    verify->add_option("--samples", camp.sample_count, "number of sampled configurations");
    verify->add_option("--seed", camp.seed, "sampling seed");
    verify->add_option("--orders", camp_orders, "comma separated order list");
    verify->add_option("--checks", camp_checks,
                       "subset of eg,a1,a3,a4,a6,a2,hilbert-oracle,truncation");
    verify->add_option("--c-range", camp_c_range, "LO..HI codimension range");
    verify->add_option("--jobs", camp.jobs, "worker threads");
    verify->add_option("--timeout", camp.per_config_timeout_s, "per-config seconds");
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_option("--format", verify_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_flag("--timings", timings, "include per-config timings in JSON");

    std::string ex_name, ex_params;
    auto* example = app.add_subcommand("example", "run a worked example from the registry");
    example->add_option("--name", ex_name, "after-a3 | a1b | a5 | c1b | b2-fig3 | b2-facet7")
        ->required();
    example->add_option("--params", ex_params, "key=value,... (a1b: alpha,d; a5: beta,c)");

    int en_alpha = 0, en_d = 0;
    std::string en_c_range;
    auto* enumerate = app.add_subcommand("enumerate", "list configurations as JSON lines");
    enumerate->add_option("--alpha", en_alpha)->required();
    enumerate->add_option("--dim", en_d)->required();
    enumerate->add_option("--c-range", en_c_range, "LO..HI codimension range");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gb->parsed()) return cmd_gb(config_path, order_name, truncate_cap, via, format, gb_budget);
        if (inv->parsed()) return cmd_invariants(inv_config, gcm_cap, inv_orders);
        if (verify->parsed()) {
            camp.exhaustive = exhaustive || camp.sample_count == 0;
            if (!camp_orders.empty()) camp.orders = split_list(camp_orders);
            if (!camp_checks.empty()) camp.checks = split_list(camp_checks);
            if (!camp_c_range.empty()) parse_c_range(camp_c_range, camp.c_min, camp.c_max);
            return cmd_verify(camp, out_path, verify_format, timings);
        }
        if (example->parsed()) return cmd_example(ex_name, ex_params);
        if (enumerate->parsed()) return cmd_enumerate(en_alpha, en_d, en_c_range);
    } catch (const budget_exceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
