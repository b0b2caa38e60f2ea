#ifndef TORICGB_HNF_HPP
#define TORICGB_HNF_HPP

#include <vector>

namespace toricgb {

using IntMat = std::vector<std::vector<long long>>;

// Row-style Hermite normal form: returns an echelon basis of the row span.
// Zero rows are dropped; pivots are positive and entries above a pivot are
// reduced into [0, pivot).
IntMat hnf_rows(IntMat m);

// Membership of p in the row span of an hnf_rows() result.
bool in_row_span(const IntMat& hnf, std::vector<long long> p);

// Integer kernel of m (r rows, n cols): rows of the result form a lattice
// basis of { u in Z^n : m * u = 0 }.
IntMat kernel_basis(const IntMat& m);

}  // namespace toricgb

#endif
