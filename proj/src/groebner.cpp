#include "toricgb/groebner.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <stdexcept>

#include "toricgb/ints.hpp"

namespace toricgb {

namespace {

// Supports up to 128 variables via two support-mask words.
std::array<uint64_t, 2> support_mask(const Monomial& m) {
    std::array<uint64_t, 2> mask{0, 0};
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) mask[i >> 6] |= 1ull << (i & 63);
    return mask;
}

bool mask_subset(const std::array<uint64_t, 2>& a, const std::array<uint64_t, 2>& b) {
    return (a[0] & ~b[0]) == 0 && (a[1] & ~b[1]) == 0;
}

class Engine {
public:
    Engine(const TermOrder& order, const BuchbergerOptions& opts) : order_(order), opts_(opts) {
        if (order.universe.vars() > 128)
            throw std::invalid_argument("groebner engine supports at most 128 variables");
        if (opts_.time_budget_s > 0)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(opts_.time_budget_s));
    }

    void add_generator(const Binomial& g) {
        auto p = oriented(order_, g.lead, g.tail);
        if (!p) return;  // zero binomial
        install({std::move(p->lead), std::move(p->tail)});
    }

    void run() {
        long long processed = 0;
        while (true) {
            const Pair* pk = pop();
            if (!pk) break;
            if (++processed > opts_.pair_budget)
                throw budget_exceeded("S-pair budget exceeded");
            if ((processed & 0xff) == 0 && opts_.time_budget_s > 0 &&
                std::chrono::steady_clock::now() > deadline_)
                throw budget_exceeded("time budget exceeded");

            const Binomial& f = basis_[pk->i].b;
            const Binomial& g = basis_[pk->j].b;
            // S(f,g) = (l/lead_g)*tail_g - (l/lead_f)*tail_f with l = lcm
            Monomial u(f.lead.size()), v(f.lead.size());
            for (size_t k = 0; k < u.size(); ++k) {
                int l = std::max(f.lead[k], g.lead[k]);
                u[k] = l - g.lead[k] + g.tail[k];
                v[k] = l - f.lead[k] + f.tail[k];
            }
            reduce_in_place(u);
            reduce_in_place(v);
            if (u == v) continue;
            auto p = oriented(order_, std::move(u), std::move(v));
            install({std::move(p->lead), std::move(p->tail)});
        }
    }

    BinomialBasis finish() {
        std::vector<bool> keep(basis_.size(), true);
        for (size_t i = 0; i < basis_.size(); ++i) {
            if (!keep[i]) continue;
            for (size_t j = 0; j < basis_.size(); ++j) {
                if (i == j || !keep[j]) continue;
                if (divides(basis_[j].b.lead, basis_[i].b.lead) &&
                    (basis_[j].b.lead != basis_[i].b.lead || j < i)) {
                    keep[i] = false;
                    break;
                }
            }
        }
        std::vector<Binomial> minimal;
        for (size_t i = 0; i < basis_.size(); ++i)
            if (keep[i]) minimal.push_back(basis_[i].b);

        BinomialBasis out;
        out.universe = order_.universe;
        out.order = order_;
        out.reduced = true;
        for (Binomial& b : minimal) {
            Monomial t = b.tail;
            bool again = true;
            while (again) {
                again = false;
                for (const Binomial& g : minimal) {
                    if (g.lead == b.lead) continue;
                    if (divides(g.lead, t)) {
                        for (size_t k = 0; k < t.size(); ++k) t[k] += g.tail[k] - g.lead[k];
                        again = true;
                        break;
                    }
                }
            }
            b.tail = std::move(t);
        }
        std::sort(minimal.begin(), minimal.end(), [&](const Binomial& a, const Binomial& b) {
            return compare(order_, a.lead, b.lead) == std::strong_ordering::less;
        });
        out.elements = std::move(minimal);
        out.max_degree = 0;
        for (const Binomial& b : out.elements)
            out.max_degree = std::max<int>(out.max_degree, static_cast<int>(total_degree(b.lead)));
        return out;
    }

private:
    struct Elem {
        Binomial b;
        std::array<uint64_t, 2> mask;  // support of the lead
        long long lead_deg;
    };
    struct Pair {
        int i, j;
        bool alive = true;
    };
    struct Bucket {
        std::vector<Pair> items;
        size_t next = 0;
        bool sorted = false;
        bool exhausted() const { return next >= items.size(); }
    };

    Monomial pair_lcm(const Pair& p) const {
        const Monomial& a = basis_[p.i].b.lead;
        const Monomial& c = basis_[p.j].b.lead;
        Monomial l(a.size());
        for (size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], c[k]);
        return l;
    }

    long long pair_deg(int i, int j) const {
        const Monomial& a = basis_[i].b.lead;
        const Monomial& c = basis_[j].b.lead;
        long long s = 0;
        for (size_t k = 0; k < a.size(); ++k) s += std::max(a[k], c[k]);
        return s;
    }

    bool pair_less(const Pair& a, const Pair& b) const {
        auto c = compare(order_, pair_lcm(a), pair_lcm(b));
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    // Next live pair in (degree, lcm under order, i, j) order.
    const Pair* pop() {
        for (; cursor_ < static_cast<long long>(buckets_.size()); ++cursor_) {
            if (opts_.degree_cap >= 0 && cursor_ > opts_.degree_cap) return nullptr;
            Bucket& bucket = buckets_[cursor_];
            if (!bucket.sorted) {
                std::sort(bucket.items.begin() + bucket.next, bucket.items.end(),
                          [&](const Pair& a, const Pair& b) { return pair_less(a, b); });
                bucket.sorted = true;
            }
            while (bucket.next < bucket.items.size()) {
                Pair& p = bucket.items[bucket.next++];
                if (p.alive) {
                    current_ = p;
                    return &current_;
                }
            }
        }
        return nullptr;
    }

    void push_pair(int i, int j) {
        long long deg = pair_deg(i, j);
        if (deg >= static_cast<long long>(buckets_.size())) buckets_.resize(deg + 1);
        if (deg < cursor_) cursor_ = deg;  // non-homogeneous inputs can back-fill
        Bucket& bucket = buckets_[deg];
        Pair p{i, j, true};
        if (!bucket.sorted || bucket.exhausted()) {
            bucket.items.push_back(p);
            if (bucket.exhausted()) bucket.sorted = false;
        } else {
            auto pos = std::lower_bound(bucket.items.begin() + bucket.next, bucket.items.end(), p,
                                        [&](const Pair& a, const Pair& b) { return pair_less(a, b); });
            bucket.items.insert(pos, p);
        }
    }

    void reduce_in_place(Monomial& m) const {
        auto mask = support_mask(m);
        long long deg = total_degree(m);
        bool again = true;
        while (again) {
            again = false;
            for (const Elem& e : basis_) {
                if (e.lead_deg > deg || !mask_subset(e.mask, mask)) continue;
                if (!divides(e.b.lead, m)) continue;
                deg = 0;
                for (size_t k = 0; k < m.size(); ++k) {
                    m[k] += e.b.tail[k] - e.b.lead[k];
                    deg += m[k];
                }
                mask = support_mask(m);
                again = true;
                break;
            }
        }
    }

    // Gebauer-Moller pair update around the freshly installed element.
    void install(Binomial b) {
        const int t = static_cast<int>(basis_.size());
        Elem e;
        e.b = std::move(b);
        e.mask = support_mask(e.b.lead);
        e.lead_deg = total_degree(e.b.lead);
        basis_.push_back(std::move(e));
        const Monomial& lt = basis_[t].b.lead;
        const auto& lt_mask = basis_[t].mask;

        if (opts_.chain_criterion) {
            // B criterion on pending pairs
            for (Bucket& bucket : buckets_) {
                for (size_t n = bucket.next; n < bucket.items.size(); ++n) {
                    Pair& p = bucket.items[n];
                    if (!p.alive) continue;
                    std::array<uint64_t, 2> umask{basis_[p.i].mask[0] | basis_[p.j].mask[0],
                                                  basis_[p.i].mask[1] | basis_[p.j].mask[1]};
                    if (!mask_subset(lt_mask, umask)) continue;
                    Monomial lij = pair_lcm(p);
                    if (!divides(lt, lij)) continue;
                    if (mono_lcm(basis_[p.i].b.lead, lt) != lij &&
                        mono_lcm(basis_[p.j].b.lead, lt) != lij)
                        p.alive = false;
                }
            }
        }

        if (!opts_.chain_criterion) {
            for (int i = 0; i < t; ++i) {
                bool touching = (basis_[i].mask[0] & lt_mask[0]) || (basis_[i].mask[1] & lt_mask[1]);
                if (touching) push_pair(i, t);  // coprime leads have disjoint supports
            }
            return;
        }

        struct Cand {
            Monomial lcm;
            std::array<uint64_t, 2> mask;
            long long deg;
            uint64_t hash;
            int idx;
            bool coprime_leads;
        };
        std::vector<Cand> cand;
        cand.reserve(t);
        for (int i = 0; i < t; ++i) {
            Cand c;
            c.lcm = mono_lcm(basis_[i].b.lead, lt);
            c.mask = support_mask(c.lcm);
            c.deg = total_degree(c.lcm);
            uint64_t h = 1469598103934665603ull;
            for (int e : c.lcm) h = (h ^ static_cast<uint64_t>(e)) * 1099511628211ull;
            c.hash = h;
            c.idx = i;
            c.coprime_leads =
                (basis_[i].mask[0] & lt_mask[0]) == 0 && (basis_[i].mask[1] & lt_mask[1]) == 0;
            cand.push_back(std::move(c));
        }
        std::vector<int> ord(cand.size());
        for (size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
        std::sort(ord.begin(), ord.end(), [&](int a, int b) {
            if (cand[a].deg != cand[b].deg) return cand[a].deg < cand[b].deg;
            if (cand[a].hash != cand[b].hash) return cand[a].hash < cand[b].hash;
            if (cand[a].lcm != cand[b].lcm) return cand[a].lcm < cand[b].lcm;
            return cand[a].idx < cand[b].idx;
        });

        // F criterion: collapse runs of equal lcms to the lowest index, and
        // drop the whole run when any member has coprime leads
        std::vector<int> unique_cand;
        for (size_t i = 0; i < ord.size();) {
            size_t j = i;
            bool any_coprime = false;
            while (j < ord.size() && cand[ord[j]].lcm == cand[ord[i]].lcm) {
                if (cand[ord[j]].coprime_leads) any_coprime = true;
                ++j;
            }
            if (!any_coprime) unique_cand.push_back(ord[i]);
            i = j;
        }

        // M criterion: drop lcms strictly divisible by a surviving smaller one
        std::vector<bool> drop(unique_cand.size(), false);
        for (size_t i = 0; i < unique_cand.size(); ++i) {
            const Cand& ci = cand[unique_cand[i]];
            for (size_t j = 0; j < i; ++j) {
                if (drop[j]) continue;
                const Cand& cj = cand[unique_cand[j]];
                if (cj.deg >= ci.deg) break;  // sorted by degree
                if (!mask_subset(cj.mask, ci.mask)) continue;
                if (divides(cj.lcm, ci.lcm)) {
                    drop[i] = true;
                    break;
                }
            }
        }

        std::vector<int> keep_idx;
        for (size_t i = 0; i < unique_cand.size(); ++i)
            if (!drop[i]) keep_idx.push_back(cand[unique_cand[i]].idx);
        std::sort(keep_idx.begin(), keep_idx.end());
        for (int i : keep_idx) push_pair(i, t);
    }

    TermOrder order_;
    BuchbergerOptions opts_;
    std::vector<Elem> basis_;
    std::vector<Bucket> buckets_;  // indexed by lcm degree
    long long cursor_ = 0;
    Pair current_{0, 0, true};
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

BinomialBasis reduced_groebner_basis(std::vector<Binomial> gens, const TermOrder& order,
                                     const BuchbergerOptions& opts) {
    Engine e(order, opts);
    for (const Binomial& g : gens) e.add_generator(g);
    e.run();
    return e.finish();
}

BinomialBasis truncated_groebner(const std::vector<Binomial>& gens, const TermOrder& order,
                                 long long cap, const BuchbergerOptions& opts) {
    for (const Binomial& g : gens)
        if (total_degree(g.lead) > cap)
            throw std::invalid_argument("truncated_groebner: cap below a generator degree");
    BuchbergerOptions o = opts;
    o.degree_cap = cap;
    return reduced_groebner_basis(gens, order, o);
}

Monomial normal_form(Monomial m, const BinomialBasis& basis) {
    bool again = true;
    while (again) {
        again = false;
        for (const Binomial& g : basis.elements) {
            if (divides(g.lead, m)) {
                m = mono_mul(mono_div(m, g.lead), g.tail);
                again = true;
                break;
            }
        }
    }
    return m;
}

bool reduces_to_zero(const Binomial& b, const BinomialBasis& basis) {
    return normal_form(b.lead, basis) == normal_form(b.tail, basis);
}

std::vector<Monomial> initial_ideal(const BinomialBasis& basis) {
    std::vector<Monomial> leads;
    leads.reserve(basis.elements.size());
    for (const Binomial& b : basis.elements) leads.push_back(b.lead);
    return leads;
}

bool basis_membership(const Binomial& b, const BinomialBasis& basis) {
    auto p = oriented(basis.order, b.lead, b.tail);
    if (!p) return false;
    Binomial q{std::move(p->lead), std::move(p->tail)};
    return std::find(basis.elements.begin(), basis.elements.end(), q) != basis.elements.end();
}

bool buchberger_criterion_holds(const BinomialBasis& basis) {
    const auto& els = basis.elements;
    for (size_t i = 0; i < els.size(); ++i) {
        for (size_t j = i + 1; j < els.size(); ++j) {
            Monomial l = mono_lcm(els[i].lead, els[j].lead);
            Monomial u = mono_mul(mono_div(l, els[j].lead), els[j].tail);
            Monomial v = mono_mul(mono_div(l, els[i].lead), els[i].tail);
            if (normal_form(u, basis) != normal_form(v, basis)) return false;
        }
    }
    return true;
}

namespace {

Binomial strip_t_block(const Universe& txy, const Binomial& b) {
    Binomial out;
    out.lead.assign(b.lead.begin() + txy.d, b.lead.end());
    out.tail.assign(b.tail.begin() + txy.d, b.tail.end());
    return out;
}

}  // namespace

EliminationResult toric_ideal_by_elimination_full(const Configuration& cfg,
                                                  const BuchbergerOptions& opts) {
    const int c = cfg.c(), d = cfg.d;
    Universe txy{c, d, true};
    Universe xy{c, d, false};
    TermOrder eo = elim_revlex(txy);

    std::vector<Binomial> gens;
    for (int i = 0; i < c; ++i) {
        // x_i - t^{a_i}
        Monomial xm = unit_monomial(txy);
        xm[txy.x_begin() + i] = 1;
        Monomial tm = unit_monomial(txy);
        for (int j = 0; j < d; ++j) tm[j] = static_cast<int>(cfg.generators[i][j]);
        gens.push_back({std::move(tm), std::move(xm)});  // t-side leads under elim order
    }
    for (int j = 0; j < d; ++j) {
        // y_j - t_j^alpha
        Monomial ym = unit_monomial(txy);
        ym[txy.y_begin() + j] = 1;
        Monomial tm = unit_monomial(txy);
        tm[j] = cfg.alpha;
        gens.push_back({std::move(tm), std::move(ym)});
    }

    EliminationResult res;
    res.j_ideal = reduced_groebner_basis(std::move(gens), eo, opts);

    BinomialBasis toric;
    toric.universe = xy;
    toric.order = revlex(xy);
    toric.reduced = true;
    for (const Binomial& b : res.j_ideal.elements) {
        if (t_degree(txy, b.lead) != 0) continue;
        if (t_degree(txy, b.tail) != 0)
            throw std::logic_error("elimination: t-free lead with t-bearing tail");
        toric.elements.push_back(strip_t_block(txy, b));
    }
    std::sort(toric.elements.begin(), toric.elements.end(),
              [&](const Binomial& a, const Binomial& b) {
                  return compare(toric.order, a.lead, b.lead) == std::strong_ordering::less;
              });
    for (const Binomial& b : toric.elements)
        toric.max_degree = std::max<int>(toric.max_degree, static_cast<int>(total_degree(b.lead)));
    res.toric = std::move(toric);
    return res;
}

BinomialBasis toric_ideal_by_elimination(const Configuration& cfg, const BuchbergerOptions& opts) {
    return toric_ideal_by_elimination_full(cfg, opts).toric;
}

BinomialBasis toric_ideal_by_lattice(const Configuration& cfg, const BuchbergerOptions& opts) {
    const int c = cfg.c(), d = cfg.d;
    Universe xy{c, d, false};

    IntMat a(d, std::vector<long long>(c + d, 0));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < d; ++j) a[j][i] = cfg.generators[i][j];
    for (int j = 0; j < d; ++j) a[j][c + j] = cfg.alpha;

    IntMat kernel = kernel_basis(a);
    std::vector<Binomial> gens;
    for (const auto& u : kernel) {
        Monomial pos = unit_monomial(xy), neg = unit_monomial(xy);
        for (int k = 0; k < c + d; ++k) {
            if (u[k] > 0)
                pos[k] = static_cast<int>(u[k]);
            else if (u[k] < 0)
                neg[k] = static_cast<int>(-u[k]);
        }
        if (pos == neg) continue;
        gens.push_back({std::move(pos), std::move(neg)});
    }

    // Saturate by each variable: with x_k cheapest in a graded revlex order,
    // dividing every basis element by its maximal x_k power saturates at k.
    for (int k = 0; k < c + d; ++k) {
        BinomialBasis gb = reduced_groebner_basis(gens, rot_revlex(xy, k), opts);
        gens.clear();
        for (const Binomial& b : gb.elements) {
            int e = std::min(b.lead[k], b.tail[k]);
            Binomial q = b;
            q.lead[k] -= e;
            q.tail[k] -= e;
            gens.push_back(std::move(q));
        }
    }
    return reduced_groebner_basis(std::move(gens), revlex(xy), opts);
}

std::string format_binomial(const Universe& u, const Binomial& b) {
    return format_monomial(u, b.lead) + " - " + format_monomial(u, b.tail);
}

std::string format_basis_text(const BinomialBasis& basis) {
    std::string out;
    for (const Binomial& b : basis.elements) {
        out += format_binomial(basis.universe, b);
        out += "\n";
    }
    return out;
}

}  // namespace toricgb
