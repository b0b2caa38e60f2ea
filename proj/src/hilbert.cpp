#include "toricgb/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricgb/ints.hpp"

namespace toricgb {

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_scaled(IntPoly& dst, const IntPoly& src, int shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
    for (size_t i = 0; i < src.size(); ++i)
        dst[i + shift] = checked_add(dst[i + shift], src[i]);
}

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                  auto da = total_degree(a), db = total_degree(b);
                  if (da != db) return da < db;
                  return a < b;
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& g : out)
            if (divides(g, m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    gens = std::move(out);
}

bool is_pure_power(const Monomial& m, int* var) {
    int found = -1;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (found >= 0) return false;
        found = static_cast<int>(i);
    }
    if (found < 0) return false;
    *var = found;
    return true;
}

// Core recursion; gens are minimal on entry.
IntPoly numerator_rec(std::vector<Monomial> gens) {
    if (gens.empty()) return IntPoly{1};
    for (const Monomial& m : gens)
        if (total_degree(m) == 0) return IntPoly{};  // contains a unit

    // base case: pairwise coprime generators (covers pure powers)
    bool pairwise_coprime = true;
    for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) {
                pairwise_coprime = false;
                break;
            }
    if (pairwise_coprime) {
        IntPoly n{1};
        for (const Monomial& m : gens) {
            IntPoly factor(total_degree(m) + 1, 0);
            factor[0] = 1;
            factor[total_degree(m)] = -1;  // 1 - t^deg
            IntPoly prod(n.size() + factor.size() - 1, 0);
            for (size_t i = 0; i < n.size(); ++i)
                for (size_t j = 0; j < factor.size(); ++j)
                    prod[i + j] = checked_add(prod[i + j], checked_mul(n[i], factor[j]));
            n = std::move(prod);
        }
        trim(n);
        return n;
    }

    // pivot: most frequent variable among non-pure-power generators
    std::vector<int> freq(gens[0].size(), 0);
    for (const Monomial& m : gens) {
        int var;
        if (is_pure_power(m, &var)) continue;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) ++freq[i];
    }
    int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    // N(I) = N(I + (z_pivot)) + t * N(I : z_pivot)
    std::vector<Monomial> plus;
    for (const Monomial& m : gens)
        if (m[pivot] == 0) plus.push_back(m);
    Monomial zp(gens[0].size(), 0);
    zp[pivot] = 1;
    plus.push_back(std::move(zp));

    std::vector<Monomial> colon = gens;
    for (Monomial& m : colon)
        if (m[pivot] > 0) --m[pivot];
    minimalize(colon);

    IntPoly n = numerator_rec(std::move(plus));
    IntPoly nc = numerator_rec(std::move(colon));
    add_scaled(n, nc, 1);
    trim(n);
    return n;
}

}  // namespace

long long poly_eval_at_one(const IntPoly& p) {
    long long s = 0;
    for (long long c : p) s = checked_add(s, c);
    return s;
}

IntPoly divide_by_one_minus_t(const IntPoly& p) {
    if (poly_eval_at_one(p) != 0)
        throw std::logic_error("divide_by_one_minus_t: 1 is not a root");
    if (p.empty()) return {};
    // p(t) = (1-t) q(t): q_k = p_k + q_{k-1}
    IntPoly q(p.size() - 1, 0);
    long long acc = 0;
    for (size_t k = 0; k + 1 < p.size(); ++k) {
        acc = checked_add(acc, p[k]);
        q[k] = acc;
    }
    trim(q);
    return q;
}

IntPoly hilbert_numerator(std::vector<Monomial> generators, int num_vars) {
    for (const Monomial& m : generators)
        if (static_cast<int>(m.size()) != num_vars)
            throw std::invalid_argument("hilbert_numerator: variable count mismatch");
    minimalize(generators);
    return numerator_rec(std::move(generators));
}

long long count_standard_monomials(const std::vector<Monomial>& generators, int num_vars, int degree) {
    long long count = 0;
    Monomial cur(num_vars, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == num_vars - 1) {
            cur[pos] = rest;
            bool reducible = false;
            for (const Monomial& g : generators)
                if (divides(g, cur)) {
                    reducible = true;
                    break;
                }
            if (!reducible) ++count;
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (num_vars == 0) return degree == 0 ? 1 : 0;
    rec(rec, 0, degree);
    return count;
}

}  // namespace toricgb
