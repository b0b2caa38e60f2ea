#include "toricgb/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricgb/ints.hpp"

namespace toricgb {

int reduction_number(const Configuration& cfg, long long multiplicity_cap) {
    long long cap = multiplicity_cap >= 0
                        ? multiplicity_cap
                        : ipow(cfg.alpha, cfg.d - 1) - cfg.c();  // deg <= alpha^{d-1}
    if (cap < 1) cap = 1;
    SemigroupLevels lv(cfg);
    PointSet vertices = cfg.vertex_set();
    for (int r = 1; r <= cap; ++r) {
        const PointSet& next = lv.level(r + 1);
        PointSet reduced = sumset(vertices, lv.level(r));
        if (next == reduced) return r;  // reverse inclusion is automatic
    }
    throw std::logic_error("reduction_number: exceeded the proven cap " +
                           std::to_string(cap) + " (internal inconsistency)");
}

long long multiplicity_from_basis(const BinomialBasis& revlex_basis, int c) {
    IntPoly n = hilbert_numerator(initial_ideal(revlex_basis), revlex_basis.universe.vars());
    for (int i = 0; i < c; ++i) n = divide_by_one_minus_t(n);  // throws if remainder
    long long deg = poly_eval_at_one(n);
    if (deg <= 0)
        throw std::logic_error("multiplicity: numerator vanished to order > codim (dimension mismatch)");
    return deg;
}

long long multiplicity(const Configuration& cfg, const BuchbergerOptions& opts) {
    return multiplicity_from_basis(toric_ideal_by_elimination(cfg, opts), cfg.c());
}

long long multiplicity_by_counting(const Configuration& cfg) {
    const int d = cfg.d;
    SemigroupLevels lv(cfg);
    std::vector<long long> hf;
    auto hf_to = [&](int n) {
        while (static_cast<int>(hf.size()) <= n)
            hf.push_back(static_cast<long long>(lv.level(static_cast<int>(hf.size())).size()));
    };
    auto diff_at = [&](int n) {  // (d-1)-th finite difference of hf at n
        hf_to(n + d - 1);
        long long s = 0;
        for (int k = 0; k <= d - 1; ++k) {
            long long term = checked_mul(binomial(d - 1, k), hf[n + d - 1 - k]);
            s = (k % 2 == 0) ? checked_add(s, term) : checked_sub(s, term);
        }
        return s;
    };
    const int max_level = 48;
    for (int n = 1; n + d + 2 + 6 <= max_level; ++n) {
        long long v = diff_at(n);
        if (v > 0 && diff_at(n + 1) == v && diff_at(n + 2) == v && diff_at(n + 3) == v &&
            diff_at(n + 6) == v)
            return v;
    }
    throw std::logic_error("multiplicity_by_counting: Hilbert function did not stabilize");
}

std::vector<FaceData> face_analysis(const Configuration& cfg) {
    const int d = cfg.d;
    PointSet points = cfg.full_point_set();
    std::vector<FaceData> out;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz < 1 || sz > d - 1) continue;
        FaceData f;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) f.zero_set.push_back(i);
        f.dimension = d - 1 - sz;
        for (const Point& p : points) {
            bool on_face = true;
            for (int i : f.zero_set)
                if (p[i] != 0) on_face = false;
            if (on_face) ++f.points_in_config;
        }
        f.points_in_m = binomial(cfg.alpha + (d - sz) - 1, (d - sz) - 1);
        f.is_full = f.points_in_config == f.points_in_m;
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const FaceData& a, const FaceData& b) {
        if (a.zero_set.size() != b.zero_set.size()) return a.zero_set.size() < b.zero_set.size();
        return a.zero_set < b.zero_set;
    });
    return out;
}

bool is_normal(const Configuration& cfg, int cap) {
    if (cap < 0) cap = cfg.d - 1;
    if (cap < 1) cap = 1;
    GroupMembership group(cfg);
    SemigroupLevels lv(cfg);
    for (int n = 1; n <= cap; ++n) {
        const PointSet& level = lv.level(n);
        PointSet candidates = m_alpha_d(n * cfg.alpha, cfg.d);
        for (const Point& p : candidates) {
            if (!group.contains(p)) continue;
            if (!contains(level, p)) return false;
        }
    }
    return true;
}

GcmResult gcm_check(const Configuration& cfg, int degree_cap, int window_start) {
    const int d = cfg.d;
    GcmResult res;
    res.degree_cap = degree_cap >= 0 ? degree_cap : 4 * d;
    res.window_start = window_start >= 0 ? window_start : 2 * d;
    if (res.degree_cap < d) throw std::invalid_argument("gcm_check: degree cap must be >= d");
    const int cap = res.degree_cap;

    GroupMembership group(cfg);
    SemigroupLevels lv(cfg);
    lv.level(2 * cap);  // membership tests reach degree 2*cap

    // S_i = elements of S with i-th coordinate zero, degree <= cap
    std::vector<PointSet> s_i(d);
    for (int n = 0; n <= cap; ++n)
        for (const Point& p : lv.level(n))
            for (int i = 0; i < d; ++i)
                if (p[i] == 0) s_i[i].push_back(p);
    for (auto& s : s_i) sort_unique(s);

    // b in S' iff for every i some s in S_i brings b + s into S
    auto in_s_prime = [&](const Point& b, int deg_b) {
        for (int i = 0; i < d; ++i) {
            bool ok = false;
            for (const Point& s : s_i[i]) {
                int deg_s = static_cast<int>(coord_sum(s)) / cfg.alpha;
                Point sum(b.size());
                for (size_t k = 0; k < b.size(); ++k) sum[k] = checked_add(b[k], s[k]);
                if (contains(lv.level(deg_b + deg_s), sum)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    };

    PointSet difference;  // S' \ S up to the cap
    for (int n = 1; n <= cap; ++n) {
        for (const Point& p : m_alpha_d(n * cfg.alpha, d)) {
            if (!group.contains(p)) continue;
            if (contains(lv.level(n), p)) continue;
            if (in_s_prime(p, n)) difference.push_back(p);
        }
    }
    sort_unique(difference);

    bool any_in_window = false;
    for (const Point& p : difference)
        if (coord_sum(p) / cfg.alpha >= res.window_start) any_in_window = true;
    if (!any_in_window) {
        res.status = GcmResult::Status::Yes;
        res.finite_difference = difference;
        return res;
    }

    // ray detection: b + k*e_j stays in S' \ S through the whole window
    for (const Point& b : difference) {
        int deg_b = static_cast<int>(coord_sum(b)) / cfg.alpha;
        if (deg_b > res.window_start) continue;
        for (int j = 0; j < d; ++j) {
            bool ray = true;
            for (int k = 0; deg_b + k <= cap; ++k) {
                Point q = b;
                q[j] = checked_add(q[j], static_cast<long long>(k) * cfg.alpha);
                if (!contains(difference, q)) {
                    ray = false;
                    break;
                }
            }
            if (ray) {
                res.status = GcmResult::Status::No;
                res.witness = b;
                res.witness_direction = j;
                return res;
            }
        }
    }
    res.status = GcmResult::Status::Unknown;
    return res;
}

bool is_isolated_singularity(const Configuration& cfg) {
    PointSet gens = cfg.generators;
    sort_unique(gens);
    for (int i = 0; i < cfg.d; ++i)
        for (int j = 0; j < cfg.d; ++j) {
            if (i == j) continue;
            Point p(cfg.d, 0);
            p[i] = cfg.alpha - 1;
            p[j] = 1;
            if (!contains(gens, p)) return false;
        }
    return true;
}

std::map<std::string, long long> bound_values(const Configuration& cfg, int r, long long deg,
                                              const std::vector<FaceData>& faces) {
    const long long c = cfg.c(), alpha = cfg.alpha, d = cfg.d;
    std::map<std::string, long long> b;
    b["eg"] = deg - c + 1;
    b["a1"] = std::max<long long>(r + 1, 2LL * r - 1);
    b["a3"] = std::max<long long>(2, 2 * (deg - c) - 1);
    b["a4"] = std::max({c, alpha, c * (alpha - 1) - 1});
    b["a6"] = d * (alpha - 1) + std::min<long long>(2LL * r, c * (alpha - 1));
    b["sturmfels"] = checked_mul(c, deg);

    long long a2ii = -1;
    for (const FaceData& f : faces) {
        if (!f.is_full) continue;
        long long v = ipow(alpha, cfg.d - 1 - f.dimension) + f.dimension - 1;
        if (a2ii < 0 || v < a2ii) a2ii = v;
    }
    if (a2ii >= 0) b["a2ii"] = a2ii;

    long long a2iii = -1;
    for (const FaceData& f : faces) {
        long long p = f.dimension;
        long long q = f.points_in_config - p - 1;
        if (q < 0) continue;
        if (q > ipow(alpha, static_cast<int>(p)) - 1) q = ipow(alpha, static_cast<int>(p)) - 1;
        long long v = checked_mul(ipow(alpha, static_cast<int>(p)) - q,
                                  ipow(alpha, cfg.d - 1 - static_cast<int>(p)));
        if (a2iii < 0 || v < a2iii) a2iii = v;
    }
    if (a2iii >= 0) b["a2iii"] = a2iii;
    return b;
}

InvariantReport compute_invariants(const Configuration& cfg, const InvariantOptions& opts) {
    InvariantReport rep;
    rep.codim = cfg.c();

    EliminationResult elim = toric_ideal_by_elimination_full(cfg, opts.buchberger);
    rep.gb_degrees["elim-revlex"] = elim.j_ideal.max_degree;
    rep.gb_degrees["revlex"] = elim.toric.max_degree;

    Universe xy{cfg.c(), cfg.d, false};
    for (const std::string& name : opts.gb_orders) {
        if (rep.gb_degrees.count(name)) continue;
        BinomialBasis gb =
            reduced_groebner_basis(elim.toric.elements, xy_order(name, xy), opts.buchberger);
        rep.gb_degrees[name] = gb.max_degree;
    }

    rep.hilbert_numerator = hilbert_numerator(initial_ideal(elim.toric), xy.vars());
    IntPoly n = rep.hilbert_numerator;
    for (int i = 0; i < cfg.c(); ++i) n = divide_by_one_minus_t(n);
    rep.deg = poly_eval_at_one(n);
    if (rep.deg <= 0) throw std::logic_error("compute_invariants: dimension mismatch");

    rep.r = reduction_number(cfg, rep.deg - rep.codim);
    rep.faces = face_analysis(cfg);
    if (opts.with_normal) rep.normal = is_normal(cfg, opts.normality_cap);
    if (opts.with_gcm) rep.gcm = gcm_check(cfg, opts.gcm_degree_cap);
    rep.isolated_singularity = is_isolated_singularity(cfg);
    rep.bounds = bound_values(cfg, rep.r, rep.deg, rep.faces);
    return rep;
}

}  // namespace toricgb
