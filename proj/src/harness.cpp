#include "toricgb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "toricgb/fiber.hpp"
#include "toricgb/ints.hpp"

namespace toricgb {

namespace {

PointSet non_vertex_points(int alpha, int d) {
    PointSet points = m_alpha_d(alpha, d);
    PointSet out;
    for (const Point& p : points) {
        bool vertex = false;
        for (long long v : p)
            if (v == alpha) vertex = true;
        if (!vertex) out.push_back(p);
    }
    return out;  // already sorted
}

bool check_listed(const Campaign& c, const std::string& name) {
    return std::find(c.checks.begin(), c.checks.end(), name) != c.checks.end();
}

}  // namespace

std::vector<Configuration> enumerate_configs(int alpha, int d, int c_min, int c_max) {
    PointSet points = non_vertex_points(alpha, d);
    const int n = static_cast<int>(points.size());
    if (n > 20)
        throw std::invalid_argument(
            "enumerate_configs: " + std::to_string(n) +
            " candidate points exceed the exhaustive limit of 20; use sampling");
    if (c_max < 0 || c_max > n) c_max = n;
    if (c_min < 2) c_min = 2;

    std::vector<Configuration> out;
    for (int c = c_min; c <= c_max; ++c) {
        std::vector<int> idx(c);
        for (int i = 0; i < c; ++i) idx[i] = i;
        while (true) {
            Configuration cfg;
            cfg.alpha = alpha;
            cfg.d = d;
            for (int i : idx) cfg.generators.push_back(points[i]);
            if (!has_errors(validate(cfg))) out.push_back(std::move(cfg));
            // next combination
            int i = c - 1;
            while (i >= 0 && idx[i] == n - c + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

std::vector<Configuration> sample_configs(int alpha, int d, int count, unsigned long long seed,
                                          int c_min, int c_max) {
    PointSet points = non_vertex_points(alpha, d);
    const int n = static_cast<int>(points.size());
    if (c_max < 0 || c_max > n) c_max = n;
    if (c_min < 2) c_min = 2;
    if (c_min > c_max) throw std::invalid_argument("sample_configs: empty c range");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> c_dist(c_min, c_max);
    std::set<std::vector<Point>> seen;
    std::vector<Configuration> out;
    long long attempts = 0, max_attempts = 1000LL * count + 1000;
    while (static_cast<int>(out.size()) < count && attempts++ < max_attempts) {
        int c = c_dist(rng);
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        for (int i = 0; i < c; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(idx[i], idx[pick(rng)]);
        }
        idx.resize(c);
        std::sort(idx.begin(), idx.end());
        Configuration cfg;
        cfg.alpha = alpha;
        cfg.d = d;
        for (int i : idx) cfg.generators.push_back(points[i]);
        if (has_errors(validate(cfg))) continue;
        if (!seen.insert(cfg.generators).second) continue;
        out.push_back(std::move(cfg));
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("sample_configs: could not draw enough distinct configurations");
    return out;
}

namespace {

// Everything computed for one configuration; violations are distributed to
// the per-order CheckResults, config-level checks go to the first order.
void run_one_config(const Campaign& camp, const Configuration& cfg, int ordinal,
                    std::vector<CheckResult>& slot) {
    auto t0 = std::chrono::steady_clock::now();
    slot.clear();
    for (const std::string& order : camp.orders) {
        CheckResult r;
        r.config_ordinal = ordinal;
        r.config = cfg;
        r.order = order;
        slot.push_back(std::move(r));
    }

    BuchbergerOptions opts = camp.buchberger;
    opts.time_budget_s = camp.per_config_timeout_s;
    try {
        EliminationResult elim = toric_ideal_by_elimination_full(cfg, opts);
        Universe xy{cfg.c(), cfg.d, false};

        long long deg = multiplicity_from_basis(elim.toric, cfg.c());
        int rnum = reduction_number(cfg, deg - cfg.c());
        std::vector<FaceData> faces = face_analysis(cfg);
        auto bounds = bound_values(cfg, rnum, deg, faces);

        std::map<std::string, BinomialBasis> bases;
        bases["revlex"] = elim.toric;
        for (size_t oi = 0; oi < camp.orders.size(); ++oi) {
            const std::string& name = camp.orders[oi];
            if (!bases.count(name))
                bases[name] = reduced_groebner_basis(elim.toric.elements, xy_order(name, xy), opts);
            CheckResult& res = slot[oi];
            res.bound_values = bounds;
            res.gb_max_degree = bases[name].max_degree;

            bool star_family = name == "revlex" || name == "xblock";
            auto assert_bound = [&](const std::string& bname, long long observed) {
                if (observed > bounds.at(bname))
                    res.violations.push_back({bname, observed, bounds.at(bname)});
            };
            if (star_family) {
                if (check_listed(camp, "a1")) assert_bound("a1", res.gb_max_degree);
                if (check_listed(camp, "a3")) assert_bound("a3", res.gb_max_degree);
                if (check_listed(camp, "a4")) assert_bound("a4", res.gb_max_degree);
            }
            if (name == "revlex" && check_listed(camp, "eg")) {
                if (res.gb_max_degree > bounds.at("eg")) {
                    BoundViolation v{"eg", res.gb_max_degree, bounds.at("eg")};
                    // proven for d = 2, an open question otherwise
                    if (cfg.d == 2)
                        res.violations.push_back(v);
                    else
                        res.eg_findings.push_back(v);
                }
            }
            if (check_listed(camp, "truncation") && star_family) {
                for (const char* bname : {"a1", "a3", "a4"}) {
                    long long cap = bounds.at(bname);
                    try {
                        BinomialBasis tr =
                            truncated_groebner(elim.toric.elements, bases[name].order, cap, opts);
                        if (tr.elements != bases[name].elements)
                            res.violations.push_back(
                                {std::string("truncation-") + bname, tr.max_degree, cap});
                    } catch (const std::invalid_argument&) {
                        res.violations.push_back(
                            {std::string("truncation-") + bname, elim.toric.max_degree, cap});
                    }
                }
            }
        }

        // config-level checks attach to the first order's result
        CheckResult& first = slot.front();
        if (check_listed(camp, "a6") && elim.j_ideal.max_degree > bounds.at("a6"))
            first.violations.push_back({"a6", elim.j_ideal.max_degree, bounds.at("a6")});
        if (check_listed(camp, "a2")) {
            if (rnum > deg - cfg.c())
                first.violations.push_back({"a2i", rnum, deg - cfg.c()});
            if (bounds.count("a2ii") && rnum > bounds.at("a2ii"))
                first.violations.push_back({"a2ii", rnum, bounds.at("a2ii")});
            if (bounds.count("a2iii") && rnum > bounds.at("a2iii"))
                first.violations.push_back({"a2iii", rnum, bounds.at("a2iii")});
        }
        if (check_listed(camp, "hilbert-oracle")) {
            long long counted = multiplicity_by_counting(cfg);
            if (counted != deg) first.violations.push_back({"hilbert-oracle", counted, deg});
            if (deg % cfg.alpha != 0) first.violations.push_back({"alpha-divides", deg, cfg.alpha});
        }
    } catch (const budget_exceeded& e) {
        for (CheckResult& r : slot) {
            r.skipped = true;
            r.skip_reason = e.what();
        }
    } catch (const std::exception& e) {
        // consistency failures are implementation bugs: fail the campaign
        slot.front().violations.push_back({std::string("internal-error: ") + e.what(), 0, 0});
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (CheckResult& r : slot) r.seconds = secs;
}

}  // namespace

CampaignOutcome run_campaign(const Campaign& camp) {
    if (camp.orders.empty()) throw std::invalid_argument("campaign needs at least one order");
    for (const std::string& name : camp.orders)
        xy_order(name, Universe{1, 1, false});  // reject bad names before any work
    static const std::set<std::string> known_checks = {"eg", "a1", "a3", "a4",
                                                       "a6", "a2", "hilbert-oracle", "truncation"};
    for (const std::string& check : camp.checks)
        if (!known_checks.count(check))
            throw std::invalid_argument("unknown campaign check: " + check);
    std::vector<Configuration> configs =
        camp.exhaustive ? enumerate_configs(camp.alpha, camp.d, camp.c_min, camp.c_max)
                        : sample_configs(camp.alpha, camp.d, camp.sample_count, camp.seed,
                                         camp.c_min, camp.c_max);

    std::vector<std::vector<CheckResult>> slots(configs.size());
    int jobs = std::max(1, camp.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < configs.size(); ++i)
            run_one_config(camp, configs[i], static_cast<int>(i), slots[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= configs.size()) break;
                run_one_config(camp, configs[i], static_cast<int>(i), slots[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CampaignOutcome out;
    out.campaign = camp;
    for (auto& slot : slots)
        for (CheckResult& r : slot) {
            if (!r.violations.empty()) out.proven_bound_violated = true;
            out.eg_finding_count += static_cast<long long>(r.eg_findings.size());
            if (r.skipped) ++out.skipped_count;
            out.results.push_back(std::move(r));
        }
    return out;
}

Configuration after_a3_config() {
    return Configuration{4, 2, {{3, 1}, {1, 3}}};
}

Configuration m_minus_points_config(int alpha, int d, const PointSet& deleted) {
    Configuration cfg;
    cfg.alpha = alpha;
    cfg.d = d;
    for (const Point& p : non_vertex_points(alpha, d))
        if (!contains(deleted, p)) cfg.generators.push_back(p);
    return cfg;
}

Configuration a1b_config(int alpha, int d) {
    if (d < 2 || alpha < d + 1) throw std::invalid_argument("a1b: need d >= 2 and alpha >= d+1");
    PointSet deleted;
    for (int beta = 2; beta <= alpha - 2; ++beta) {
        Point p(d, 0);
        p[0] = beta;
        p[1] = alpha - beta;
        deleted.push_back(p);
    }
    sort_unique(deleted);
    Configuration cfg = m_minus_points_config(alpha, d, deleted);
    // a_1 = (alpha-1,1,0,..), a_2 = (1,alpha-1,0,..) first: they carry the
    // forced basis element x1^{alpha-1} - x2 y1^{alpha-2}
    Point a1(d, 0), a2(d, 0);
    a1[0] = alpha - 1;
    a1[1] = 1;
    a2[0] = 1;
    a2[1] = alpha - 1;
    std::vector<Point> reordered{a1, a2};
    for (const Point& p : cfg.generators)
        if (p != a1 && p != a2) reordered.push_back(p);
    cfg.generators = std::move(reordered);
    return cfg;
}

Configuration a5_config(int beta, int c) {
    if (beta < 2 || c < 3) throw std::invalid_argument("a5: need beta >= 2 and c = d >= 3");
    const int d = c, alpha = 2 * beta;
    Configuration cfg;
    cfg.alpha = alpha;
    cfg.d = d;
    for (int i = 0; i < c - 1; ++i) {
        Point a(d, 0);
        a[i] = 1;
        a[i + 1] = 2 * beta - 1;
        cfg.generators.push_back(std::move(a));
    }
    Point ac(d, 0);
    ac[0] = beta;
    ac[d - 1] = beta;
    cfg.generators.push_back(std::move(ac));
    return cfg;
}

Configuration c1b_config() {
    return Configuration{
        3, 3, {{2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}}};
}

namespace {

// interior points of the tetrahedron edge {i,j} for alpha = 3
PointSet edge_interior_points(int d, int i, int j) {
    Point p(d, 0), q(d, 0);
    p[i] = 2;
    p[j] = 1;
    q[i] = 1;
    q[j] = 2;
    PointSet out{p, q};
    sort_unique(out);
    return out;
}

}  // namespace

std::vector<Configuration> fig3_configs() {
    // two opposite edges of the d=4 simplex, all interior points deleted
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs = {
        {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    std::vector<Configuration> out;
    for (const auto& [e1, e2] : pairs) {
        PointSet deleted = edge_interior_points(4, e1.first, e1.second);
        for (const Point& p : edge_interior_points(4, e2.first, e2.second)) deleted.push_back(p);
        sort_unique(deleted);
        out.push_back(m_minus_points_config(3, 4, deleted));
    }
    return out;
}

std::vector<Configuration> fig4_configs() {
    // one interior point deleted on each edge of a 4-cycle; the untouched
    // opposite pair selects the cycle
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> untouched = {
        {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    std::vector<Configuration> out;
    for (const auto& [u1, u2] : untouched) {
        std::vector<std::pair<int, int>> cycle;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                std::pair<int, int> e{i, j};
                if (e != u1 && e != u2) cycle.push_back(e);
            }
        for (unsigned mask = 0; mask < 16; ++mask) {
            PointSet deleted;
            for (int k = 0; k < 4; ++k) {
                auto [i, j] = cycle[k];
                Point p(4, 0);
                if (mask & (1u << k)) {
                    p[i] = 2;
                    p[j] = 1;
                } else {
                    p[i] = 1;
                    p[j] = 2;
                }
                deleted.push_back(p);
            }
            sort_unique(deleted);
            out.push_back(m_minus_points_config(3, 4, deleted));
        }
    }
    return out;
}

std::vector<Configuration> facet7_configs() {
    // A_4 = {e1,e2,e3, a1=(2,1,0), a2 on edge e1e3, a3 on edge e2e3, (1,1,1)}
    std::vector<Configuration> out;
    const PointSet a2_choices{{2, 0, 1}, {1, 0, 2}};
    const PointSet a3_choices{{0, 2, 1}, {0, 1, 2}};
    for (const Point& a2 : a2_choices)
        for (const Point& a3 : a3_choices) {
            Configuration cfg;
            cfg.alpha = 3;
            cfg.d = 3;
            cfg.generators = {{2, 1, 0}, a2, a3, {1, 1, 1}};
            out.push_back(std::move(cfg));
        }
    return out;
}

std::vector<std::string> example_names() {
    return {"after-a3", "a1b", "a5", "c1b", "b2-fig3", "b2-facet7"};
}

namespace {

void expect(ExampleOutcome& out, bool ok, const std::string& what) {
    out.checks.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
    if (!ok) out.passed = false;
}

void run_after_a3(ExampleOutcome& out) {
    Configuration cfg = after_a3_config();
    BinomialBasis rv = toric_ideal_by_elimination(cfg);
    expect(out, format_basis_text(rv) ==
                    "x1*x2 - y1*y2\n"
                    "x2^2*y1 - x1^2*y2\n"
                    "x2^3 - x1*y2^2\n"
                    "x1^3 - x2*y1^2\n",
           "revlex reduced basis matches the four stated binomials");
    expect(out, rv.max_degree == 3, "revlex basis degree is 3");
    Universe xy{2, 2, false};
    BinomialBasis lx = reduced_groebner_basis(rv.elements, lex(xy));
    expect(out, format_basis_text(lx) ==
                    "x2^4 - y1*y2^3\n"
                    "x1*y2^2 - x2^3\n"
                    "x1*x2 - y1*y2\n"
                    "x1^2*y2 - x2^2*y1\n"
                    "x1^3 - x2*y1^2\n",
           "lex reduced basis matches the five stated binomials");
    expect(out, lx.max_degree == 4, "lex basis degree is 4");
    InvariantOptions iopt;
    iopt.with_gcm = false;
    InvariantReport rep = compute_invariants(cfg, iopt);
    expect(out, rep.r == 2, "reduction number is 2");
    expect(out, rep.deg == 4, "multiplicity is 4");
    expect(out, rep.bounds.at("a1") == 3 && rep.bounds.at("a3") == 3,
           "both degree bounds equal 3");
}

void run_a1b(ExampleOutcome& out, int alpha, int d) {
    Configuration cfg = a1b_config(alpha, d);
    expect(out, reduction_number(cfg) == alpha - 2,
           "r(S) = alpha - 2 with alpha=" + std::to_string(alpha) + ", d=" + std::to_string(d));
    Universe xy{cfg.c(), d, false};
    Monomial lead = unit_monomial(xy), tail = unit_monomial(xy);
    lead[0] = alpha - 1;                 // x1^{alpha-1}
    tail[1] = 1;                         // x2
    tail[xy.y_begin()] = alpha - 2;      // y1^{alpha-2}
    const std::string name =
        "x1^" + std::to_string(alpha - 1) + " - x2*y1^" + std::to_string(alpha - 2);
    FiberMinima fibers(cfg, xblock_revlex(xy));
    expect(out, fibers.is_reduced_basis_element({lead, tail}),
           name + " is in the xblock reduced basis (fiber route)");
    if (cfg.c() <= 35) {  // the full basis stays affordable
        BinomialBasis gens = toric_ideal_by_elimination(cfg);
        BinomialBasis xb = reduced_groebner_basis(gens.elements, xblock_revlex(xy));
        expect(out, basis_membership({lead, tail}, xb),
               name + " is in the computed xblock reduced basis");
    }
}

void run_a5(ExampleOutcome& out, int beta, int c) {
    Configuration cfg = a5_config(beta, c);
    Universe xy{c, c, false};
    Monomial lead = unit_monomial(xy), tail = unit_monomial(xy);
    for (int i = 0; i < c - 1; ++i) lead[i] = beta;  // x1^b .. x_{c-1}^b
    tail[c - 1] = 1;                                 // x_c
    for (int j = 1; j < c - 1; ++j) tail[xy.y_begin() + j] = beta;
    tail[xy.y_begin() + c - 1] = beta - 1;           // y2^b .. y_{c-1}^b y_c^{b-1}
    BinomialBasis gens = toric_ideal_by_elimination(cfg);
    expect(out, basis_membership({lead, tail}, gens),
           "the forced binomial lies in the revlex reduced basis (beta=" + std::to_string(beta) +
               ", c=" + std::to_string(c) + ")");
    BinomialBasis xb = reduced_groebner_basis(gens.elements, xblock_revlex(xy));
    expect(out, basis_membership({lead, tail}, xb),
           "the forced binomial lies in the xblock reduced basis");
}

void run_c1b(ExampleOutcome& out) {
    Configuration cfg = c1b_config();
    Universe xy{6, 3, false};
    auto x = [&](int i, int j = 0) {  // x_i * x_j, price of brevity
        Monomial m = unit_monomial(xy);
        m[i - 1] += 1;
        if (j) m[j - 1] += 1;
        return m;
    };
    std::vector<Monomial> expected = {
        x(1, 2), x(2, 3), x(2, 5), x(1, 1), x(1, 3), x(3, 3), x(2, 4), x(2, 6), x(3, 5), x(5, 5),
        x(1, 4), x(3, 4), x(4, 5), x(4, 4), x(3, 6), x(5, 6), x(4, 6), x(6, 6)};
    {
        Monomial m = unit_monomial(xy);  // x2^3
        m[1] = 3;
        expected.push_back(m);
    }
    {
        Monomial m = unit_monomial(xy);  // x1*x6*y2
        m[0] = 1;
        m[5] = 1;
        m[xy.y_begin() + 1] = 1;
        expected.push_back(m);
    }
    std::sort(expected.begin(), expected.end());
    BinomialBasis rv = toric_ideal_by_elimination(cfg);
    std::vector<Monomial> got = initial_ideal(rv);
    std::sort(got.begin(), got.end());
    expect(out, got == expected, "revlex initial ideal equals the 20 listed generators");

    GcmResult gcm = gcm_check(cfg);
    expect(out, gcm.status == GcmResult::Status::No, "S' \\ S is infinite");
    expect(out, gcm.witness == Point({2, 1, 0}) && gcm.witness_direction == 0,
           "witness ray is (2,1,0) + N*e1");
    expect(out, !is_normal(cfg), "the semigroup is not normal");
    expect(out, multiplicity_from_basis(rv, 6) == 9, "multiplicity is 9");
}

void run_b2_fig3(ExampleOutcome& out) {
    for (const Configuration& cfg : fig3_configs())
        expect(out, reduction_number(cfg) == 2, "r(S) = 2 for a Fig. 3 deletion pattern");
}

void run_b2_facet7(ExampleOutcome& out) {
    for (const Configuration& cfg : facet7_configs())
        expect(out, reduction_number(cfg) <= 3, "r(<A_4>) <= 3 for a facet choice");
}

}  // namespace

ExampleOutcome run_example(const std::string& name, std::map<std::string, long long> params) {
    ExampleOutcome out;
    out.name = name;
    auto param = [&](const std::string& key, long long fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    if (name == "after-a3")
        run_after_a3(out);
    else if (name == "a1b")
        run_a1b(out, static_cast<int>(param("alpha", 5)), static_cast<int>(param("d", 2)));
    else if (name == "a5")
        run_a5(out, static_cast<int>(param("beta", 2)), static_cast<int>(param("c", 3)));
    else if (name == "c1b")
        run_c1b(out);
    else if (name == "b2-fig3")
        run_b2_fig3(out);
    else if (name == "b2-facet7")
        run_b2_facet7(out);
    else
        throw std::invalid_argument("unknown example: " + name);
    return out;
}

std::string report_text(const CampaignOutcome& outcome) {
    std::ostringstream os;
    const Campaign& c = outcome.campaign;
    os << "campaign alpha=" << c.alpha << " d=" << c.d
       << (c.exhaustive ? " exhaustive" : " samples=" + std::to_string(c.sample_count) +
                                              " seed=" + std::to_string(c.seed))
       << "\norders:";
    for (const auto& o : c.orders) os << " " << o;
    os << "\nchecks:";
    for (const auto& k : c.checks) os << " " << k;
    os << "\nresults: " << outcome.results.size() << "\n";

    std::map<std::pair<int, int>, long long> degree_cells;  // (c, gb degree) -> count
    std::map<std::string, long long> tightness;             // bound -> min slack
    long long violation_count = 0;
    for (const CheckResult& r : outcome.results) {
        if (r.skipped) continue;
        degree_cells[{r.config.c(), r.gb_max_degree}]++;
        violation_count += static_cast<long long>(r.violations.size());
        for (const auto& [name, value] : r.bound_values) {
            long long slack = value - r.gb_max_degree;
            auto it = tightness.find(name);
            if (it == tightness.end() || slack < it->second) tightness[name] = slack;
        }
    }
    os << "configs per (c, max gb degree):\n";
    for (const auto& [cell, count] : degree_cells)
        os << "  c=" << cell.first << " degree=" << cell.second << " count=" << count << "\n";
    os << "minimal slack per bound (bound - observed degree):\n";
    for (const auto& [name, slack] : tightness) os << "  " << name << ": " << slack << "\n";
    os << "proven-bound violations: " << violation_count << "\n";
    os << "eisenbud-goto findings: " << outcome.eg_finding_count << "\n";
    os << "skipped: " << outcome.skipped_count << "\n";
    for (const CheckResult& r : outcome.results) {
        for (const auto& v : r.violations)
            os << "VIOLATION config#" << r.config_ordinal << " order=" << r.order << " " << v.bound
               << " observed=" << v.observed << " allowed=" << v.allowed << "\n";
        for (const auto& v : r.eg_findings)
            os << "EG-FINDING config#" << r.config_ordinal << " order=" << r.order
               << " observed=" << v.observed << " allowed=" << v.allowed << "\n";
        if (r.skipped)
            os << "SKIPPED config#" << r.config_ordinal << " (" << r.skip_reason << ")\n";
    }
    return os.str();
}

}  // namespace toricgb
