#ifndef TORICGB_GROEBNER_HPP
#define TORICGB_GROEBNER_HPP

#include <string>
#include <vector>

#include "toricgb/lattice.hpp"
#include "toricgb/order.hpp"

namespace toricgb {

// Monic difference of two monomials, lead > tail under the basis order.
// Toric elements are homogeneous; J_A elements in the TXY universe are not.
struct Binomial {
    Monomial lead;
    Monomial tail;

    bool operator==(const Binomial&) const = default;
};

struct BinomialBasis {
    Universe universe;
    TermOrder order;
    std::vector<Binomial> elements;  // sorted ascending by lead under order
    bool reduced = false;
    int max_degree = 0;  // max over elements of deg(lead)
};

struct BuchbergerOptions {
    long long pair_budget = 1'000'000;
    bool chain_criterion = true;
    long long degree_cap = -1;   // < 0: no truncation
    double time_budget_s = 0.0;  // <= 0: no wall-clock limit
};

// Unique reduced Groebner basis of the binomial ideal generated by gens.
// S-pairs of binomials are binomials, so no coefficient arithmetic happens
// anywhere. Throws budget_exceeded past the S-pair or time budget.
BinomialBasis reduced_groebner_basis(std::vector<Binomial> gens, const TermOrder& order,
                                     const BuchbergerOptions& opts = {});

// Degree-truncated Buchberger: S-pairs above cap are discarded. For a
// homogeneous ideal with cap at least the true basis degree this equals the
// full reduced basis.
BinomialBasis truncated_groebner(const std::vector<Binomial>& gens, const TermOrder& order,
                                 long long cap, const BuchbergerOptions& opts = {});

// Unique normal form of a monomial modulo a Groebner basis.
Monomial normal_form(Monomial m, const BinomialBasis& basis);

// lead - tail reduces to zero modulo basis (ideal membership for binomials).
bool reduces_to_zero(const Binomial& b, const BinomialBasis& basis);

// Minimal generators of the initial ideal (the leads of a reduced basis).
std::vector<Monomial> initial_ideal(const BinomialBasis& basis);

// Exact element membership after re-orienting b under the basis order.
bool basis_membership(const Binomial& b, const BinomialBasis& basis);

// Post-hoc Buchberger criterion: every S-pair normal form vanishes.
bool buchberger_criterion_holds(const BinomialBasis& basis);

struct EliminationResult {
    BinomialBasis j_ideal;  // reduced GB of J_A in the TXY universe, elim order
    BinomialBasis toric;    // its XY part: reduced revlex GB of I_A
};

// The three-step elimination procedure: form J_A, run Buchberger under the
// t-elimination order, intersect with K[x,y].
EliminationResult toric_ideal_by_elimination_full(const Configuration& cfg,
                                                  const BuchbergerOptions& opts = {});
BinomialBasis toric_ideal_by_elimination(const Configuration& cfg,
                                         const BuchbergerOptions& opts = {});

// Independent route: kernel lattice of the exponent map, then saturation by
// every variable via graded-revlex Groebner bases. Returns the reduced
// revlex basis of the same ideal; used for cross-checking.
BinomialBasis toric_ideal_by_lattice(const Configuration& cfg,
                                     const BuchbergerOptions& opts = {});

// One binomial per line, "lead - tail", lines ascending by lead.
std::string format_basis_text(const BinomialBasis& basis);
std::string format_binomial(const Universe& u, const Binomial& b);

}  // namespace toricgb

#endif
