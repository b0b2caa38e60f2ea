#ifndef TORICGB_HILBERT_HPP
#define TORICGB_HILBERT_HPP

#include <vector>

#include "toricgb/order.hpp"

namespace toricgb {

// Integer polynomial in t, ascending coefficients, trailing zeros trimmed.
using IntPoly = std::vector<long long>;

long long poly_eval_at_one(const IntPoly& p);

// Exact division by (1 - t); throws std::logic_error when p(1) != 0.
IntPoly divide_by_one_minus_t(const IntPoly& p);

// Hilbert series numerator N(t) of K[z_1..z_n]/I for a monomial ideal I,
// with H(t) = N(t)/(1-t)^n. Pivot recursion on the most frequent variable;
// generators need not be minimal.
IntPoly hilbert_numerator(std::vector<Monomial> generators, int num_vars);

// Hilbert function of K[z_1..z_n]/I at degree n: the number of degree-n
// standard monomials. Brute-force enumeration, used as a test oracle.
long long count_standard_monomials(const std::vector<Monomial>& generators, int num_vars, int degree);

}  // namespace toricgb

#endif
