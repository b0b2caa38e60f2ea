#include "toricgb/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricgb {

Monomial unit_monomial(const Universe& u) { return Monomial(u.vars(), 0); }

long long total_degree(const Monomial& m) {
    long long s = 0;
    for (int e : m) s += e;
    return s;
}

long long x_degree(const Universe& u, const Monomial& m) {
    long long s = 0;
    for (int i = u.x_begin(); i < u.y_begin(); ++i) s += m[i];
    return s;
}

long long t_degree(const Universe& u, const Monomial& m) {
    if (!u.with_t) return 0;
    long long s = 0;
    for (int i = 0; i < u.d; ++i) s += m[i];
    return s;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw std::invalid_argument("mono_div: not divisible");
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

TermOrder revlex(const Universe& u) { return {OrderKind::RevLex, u, -1}; }
TermOrder lex(const Universe& u) { return {OrderKind::Lex, u, -1}; }
TermOrder xblock_revlex(const Universe& u) { return {OrderKind::XBlockRevLex, u, -1}; }

TermOrder elim_revlex(const Universe& u) {
    if (!u.with_t) throw std::invalid_argument("elim-revlex needs the TXY universe");
    return {OrderKind::ElimRevLex, u, -1};
}

TermOrder rot_revlex(const Universe& u, int cheapest) {
    if (cheapest < 0 || cheapest >= u.vars()) throw std::invalid_argument("rot_revlex: bad variable");
    return {OrderKind::RotRevLex, u, cheapest};
}

namespace {

// Graded revlex core: higher total degree wins; on ties the monomial with
// the smaller exponent at the last differing variable is the bigger one.
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != b[i])
            return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// Graded revlex after moving one variable to the cheapest position.
std::strong_ordering rot_grevlex_cmp(const Monomial& a, const Monomial& b, int cheapest) {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a[cheapest] != b[cheapest])
        return a[cheapest] > b[cheapest] ? std::strong_ordering::less : std::strong_ordering::greater;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (i == cheapest) continue;
        if (a[i] != b[i])
            return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b) {
    const int n = order.universe.vars();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("compare: monomial universe mismatch");
    switch (order.kind) {
        case OrderKind::RevLex:
            return grevlex_cmp(a, b);
        case OrderKind::Lex:
            return lex_cmp(a, b);
        case OrderKind::XBlockRevLex: {
            long long xa = x_degree(order.universe, a), xb = x_degree(order.universe, b);
            if (xa != xb) return xa < xb ? std::strong_ordering::less : std::strong_ordering::greater;
            return grevlex_cmp(a, b);
        }
        case OrderKind::ElimRevLex: {
            long long ta = t_degree(order.universe, a), tb = t_degree(order.universe, b);
            if (ta != tb) return ta < tb ? std::strong_ordering::less : std::strong_ordering::greater;
            return grevlex_cmp(a, b);
        }
        case OrderKind::RotRevLex:
            return rot_grevlex_cmp(a, b, order.cheapest_var);
    }
    throw std::logic_error("compare: unknown order kind");
}

std::optional<OrientedPair> oriented(const TermOrder& order, Monomial a, Monomial b) {
    auto cmp = compare(order, a, b);
    if (cmp == std::strong_ordering::equal) return std::nullopt;
    if (cmp == std::strong_ordering::less) std::swap(a, b);
    return OrientedPair{std::move(a), std::move(b)};
}

OrientedPair leading_of(const TermOrder& order, Monomial a, Monomial b) {
    auto p = oriented(order, std::move(a), std::move(b));
    if (!p) throw std::invalid_argument("leading_of: equal monomials form a zero binomial");
    return *std::move(p);
}

std::string order_name(OrderKind kind) {
    switch (kind) {
        case OrderKind::RevLex: return "revlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::XBlockRevLex: return "xblock";
        case OrderKind::ElimRevLex: return "elim-revlex";
        case OrderKind::RotRevLex: return "rot-revlex";
    }
    return "?";
}

OrderKind order_kind_from_name(const std::string& name) {
    if (name == "revlex") return OrderKind::RevLex;
    if (name == "lex") return OrderKind::Lex;
    if (name == "xblock") return OrderKind::XBlockRevLex;
    if (name == "elim-revlex") return OrderKind::ElimRevLex;
    throw std::invalid_argument("unknown order name: " + name);
}

TermOrder xy_order(const std::string& name, const Universe& xy) {
    OrderKind kind = order_kind_from_name(name);
    if (kind == OrderKind::ElimRevLex || xy.with_t)
        throw std::invalid_argument("order '" + name + "' is not available on the x,y variables");
    return {kind, xy, -1};
}

std::string format_monomial(const Universe& u, const Monomial& m) {
    std::string out;
    auto var_name = [&](int idx) -> std::string {
        if (u.with_t && idx < u.d) return "t" + std::to_string(idx + 1);
        if (idx < u.y_begin()) return "x" + std::to_string(idx - u.x_begin() + 1);
        return "y" + std::to_string(idx - u.y_begin() + 1);
    };
    for (int i = 0; i < u.vars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace toricgb
