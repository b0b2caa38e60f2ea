#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricgb/json_io.hpp"

namespace py = pybind11;
using namespace toricgb;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
            return d;
        }
        case nlohmann::ordered_json::value_t::array: {
            py::list l;
            for (const auto& value : j) l.append(json_to_py(value));
            return l;
        }
        case nlohmann::ordered_json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::ordered_json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::ordered_json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::ordered_json::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

Configuration make_config(int alpha, int d, const std::vector<Point>& generators) {
    return Configuration{alpha, d, generators};
}

BinomialBasis compute_gb(const Configuration& cfg, const std::string& order_name,
                         const std::string& via, long long truncate_cap) {
    Universe xy{cfg.c(), cfg.d, false};
    BinomialBasis gens =
        via == "lattice" ? toric_ideal_by_lattice(cfg) : toric_ideal_by_elimination(cfg);
    TermOrder order = xy_order(order_name, xy);
    if (truncate_cap >= 0) return truncated_groebner(gens.elements, order, truncate_cap);
    return reduced_groebner_basis(gens.elements, order);
}

}  // namespace

PYBIND11_MODULE(toricgb, m) {
    m.doc() = "exact Groebner bases and invariants of simplicial toric ideals";

    py::class_<Configuration>(m, "Configuration")
        .def(py::init(&make_config), py::arg("alpha"), py::arg("d"), py::arg("generators"))
        .def_readonly("alpha", &Configuration::alpha)
        .def_readonly("d", &Configuration::d)
        .def_readonly("generators", &Configuration::generators)
        .def_property_readonly("c", &Configuration::c)
        .def("__repr__", [](const Configuration& cfg) {
            return "Configuration(" + config_to_json(cfg).dump() + ")";
        });

    m.def("m_alpha_d", &m_alpha_d, py::arg("alpha"), py::arg("d"),
          "all lattice points of N^d with coordinate sum alpha");

    m.def(
        "validate",
        [](const Configuration& cfg) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& v : validate(cfg))
                out.emplace_back(v.severity == Severity::Error ? "error" : "warning", v.message);
            return out;
        },
        py::arg("config"), "list of (severity, message) violations; empty when valid");

    m.def(
        "groebner_basis",
        [](const Configuration& cfg, const std::string& order, const std::string& via,
           long long truncate) {
            BinomialBasis gb = compute_gb(cfg, order, via, truncate);
            std::vector<std::pair<Monomial, Monomial>> out;
            for (const Binomial& b : gb.elements) out.emplace_back(b.lead, b.tail);
            return out;
        },
        py::arg("config"), py::arg("order") = "revlex", py::arg("via") = "elim",
        py::arg("truncate") = -1,
        "reduced Groebner basis as (lead, tail) exponent-vector pairs");

    m.def(
        "groebner_basis_text",
        [](const Configuration& cfg, const std::string& order, const std::string& via) {
            return format_basis_text(compute_gb(cfg, order, via, -1));
        },
        py::arg("config"), py::arg("order") = "revlex", py::arg("via") = "elim",
        "reduced Groebner basis, one 'lead - tail' line per element");

    m.def(
        "groebner_max_degree",
        [](const Configuration& cfg, const std::string& order, const std::string& via) {
            return compute_gb(cfg, order, via, -1).max_degree;
        },
        py::arg("config"), py::arg("order") = "revlex", py::arg("via") = "elim");

    m.def("reduction_number", [](const Configuration& cfg) { return reduction_number(cfg); },
          py::arg("config"));
    m.def("multiplicity", [](const Configuration& cfg) { return multiplicity(cfg); },
          py::arg("config"));
    m.def("multiplicity_by_counting", &multiplicity_by_counting, py::arg("config"));
    m.def("is_normal", [](const Configuration& cfg) { return is_normal(cfg); }, py::arg("config"));
    m.def("is_isolated_singularity", &is_isolated_singularity, py::arg("config"));

    m.def(
        "invariants",
        [](const Configuration& cfg, int gcm_cap) {
            InvariantOptions opts;
            if (gcm_cap >= 0) opts.gcm_degree_cap = gcm_cap;
            return json_to_py(invariant_report_to_json(cfg, compute_invariants(cfg, opts)));
        },
        py::arg("config"), py::arg("gcm_cap") = -1,
        "full invariant report: r, deg, codim, faces, ring flags, bounds");

    m.def(
        "run_example",
        [](const std::string& name, const std::map<std::string, long long>& params) {
            ExampleOutcome out = run_example(name, params);
            return py::make_tuple(out.passed, out.checks);
        },
        py::arg("name"), py::arg("params") = std::map<std::string, long long>{},
        "run a registry example; returns (passed, check lines)");
    m.def("example_names", &example_names);

    m.def("enumerate_configs", &enumerate_configs, py::arg("alpha"), py::arg("d"),
          py::arg("c_min") = 2, py::arg("c_max") = -1);

    m.def(
        "verify",
        [](int alpha, int d, bool exhaustive, int samples, unsigned long long seed,
           const std::vector<std::string>& orders, const std::vector<std::string>& checks,
           int jobs) {
            Campaign camp;
            camp.alpha = alpha;
            camp.d = d;
            camp.exhaustive = exhaustive;
            camp.sample_count = samples;
            camp.seed = seed;
            camp.orders = orders;
            camp.checks = checks;
            camp.jobs = jobs;
            return json_to_py(campaign_outcome_to_json(run_campaign(camp)));
        },
        py::arg("alpha"), py::arg("d"), py::arg("exhaustive") = true, py::arg("samples") = 0,
        py::arg("seed") = 0,
        py::arg("orders") = std::vector<std::string>{"revlex"},
        py::arg("checks") = std::vector<std::string>{"eg", "a1", "a3", "a4", "a6", "a2"},
        py::arg("jobs") = 1, "run a bound-verification campaign, returns the JSON report");
}
