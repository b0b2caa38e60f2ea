#ifndef TORICGB_ORDER_HPP
#define TORICGB_ORDER_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace toricgb {

// Variable universes. XY is x_1..x_c, y_1..y_d in that significance order;
// TXY prepends the elimination block t_1..t_d. Indices run most-significant
// first, so x_1 is index 0 of the x block.
struct Universe {
    int c = 0;
    int d = 0;
    bool with_t = false;

    int vars() const { return (with_t ? d : 0) + c + d; }
    int x_begin() const { return with_t ? d : 0; }
    int y_begin() const { return x_begin() + c; }

    bool operator==(const Universe&) const = default;
};

// Exponent vector over a universe; the universe travels separately.
using Monomial = std::vector<int>;

Monomial unit_monomial(const Universe& u);  // all-zero exponents
long long total_degree(const Monomial& m);
long long x_degree(const Universe& u, const Monomial& m);
long long t_degree(const Universe& u, const Monomial& m);

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind {
    RevLex,        // graded reverse lexicographic
    Lex,           // pure lexicographic
    XBlockRevLex,  // x-block degree first (condition (*)), ties by RevLex
    ElimRevLex,    // t-block degree first, ties by RevLex on the full vector
    RotRevLex,     // internal: graded revlex with one variable made cheapest
};

struct TermOrder {
    OrderKind kind = OrderKind::RevLex;
    Universe universe;
    int cheapest_var = -1;  // RotRevLex only

    bool operator==(const TermOrder&) const = default;
};

TermOrder revlex(const Universe& u);
TermOrder lex(const Universe& u);
TermOrder xblock_revlex(const Universe& u);
TermOrder elim_revlex(const Universe& u);               // requires u.with_t
TermOrder rot_revlex(const Universe& u, int cheapest);  // internal

// Total multiplicative order; Equal iff a == b. Universe mismatch between
// the order and its arguments is a caller bug and throws.
std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b);

struct OrientedPair {
    Monomial lead;
    Monomial tail;
};

// Orients (a, b) so lead > tail; nullopt when a == b (zero binomial).
std::optional<OrientedPair> oriented(const TermOrder& order, Monomial a, Monomial b);

// Same, but a == b is a hard error.
OrientedPair leading_of(const TermOrder& order, Monomial a, Monomial b);

// CLI / JSON names: revlex, lex, xblock, elim-revlex.
std::string order_name(OrderKind kind);
OrderKind order_kind_from_name(const std::string& name);

// Named order on the XY universe; rejects the elimination order, which only
// exists on TXY inside the toric-ideal computation.
TermOrder xy_order(const std::string& name, const Universe& xy);

// Text form like x1^2*x2*y3 (exponent 1 suppressed, "1" for the unit).
std::string format_monomial(const Universe& u, const Monomial& m);

}  // namespace toricgb

#endif
