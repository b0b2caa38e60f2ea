#ifndef TORICGB_INVARIANTS_HPP
#define TORICGB_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricgb/groebner.hpp"
#include "toricgb/hilbert.hpp"
#include "toricgb/lattice.hpp"

namespace toricgb {

// A proper face P_I of the simplex, I = zero_set (0-based coordinate
// indices), 1 <= |I| <= d-1. Full means every lattice point of M_{alpha,d}
// on the face belongs to the configuration.
struct FaceData {
    std::vector<int> zero_set;
    int dimension = 0;  // d - 1 - |I|
    long long points_in_config = 0;
    long long points_in_m = 0;
    bool is_full = false;
};

struct GcmResult {
    enum class Status { Yes, No, Unknown };
    Status status = Status::Unknown;
    PointSet finite_difference;  // Yes: the exhaustive S' \ S
    Point witness;               // No: base point of the witness ray
    int witness_direction = -1;  // No: 0-based vertex index j of the ray e_j
    int degree_cap = 0;
    int window_start = 0;
};

struct InvariantReport {
    int r = 0;          // reduction number
    long long deg = 0;  // multiplicity
    int codim = 0;      // = c
    IntPoly hilbert_numerator;
    std::vector<FaceData> faces;
    bool normal = false;
    GcmResult gcm;
    bool isolated_singularity = false;
    std::map<std::string, long long> bounds;
    std::map<std::string, int> gb_degrees;  // per order name, incl. elim-revlex
};

struct InvariantOptions {
    bool with_gcm = true;
    bool with_normal = true;
    int gcm_degree_cap = -1;                             // default 4d
    int normality_cap = -1;                              // default d-1
    std::vector<std::string> gb_orders = {"revlex", "xblock"};  // elim always runs
    BuchbergerOptions buchberger;
};

// The least positive r with (r+1)A = {e_1..e_d} + rA. The iteration cap is
// deg - codim when the multiplicity is known and the weaker structural cap
// alpha^{d-1} - c otherwise; hitting either cap means an internal
// inconsistency and throws.
int reduction_number(const Configuration& cfg, long long multiplicity_cap = -1);

// Multiplicity via the Hilbert numerator of the revlex initial ideal,
// divided exactly by (1-t)^c and evaluated at 1.
long long multiplicity_from_basis(const BinomialBasis& revlex_basis, int c);
long long multiplicity(const Configuration& cfg, const BuchbergerOptions& opts = {});

// Counting oracle: fits the degree-(d-1) Hilbert polynomial through
// |semigroup_level(n)| via finite differences and reads off the multiplicity.
long long multiplicity_by_counting(const Configuration& cfg);

std::vector<FaceData> face_analysis(const Configuration& cfg);

// Saturation test: level n must contain every group point of the orthant of
// degree n, for all n <= cap (default d-1).
bool is_normal(const Configuration& cfg, int cap = -1);

// Bounded generalized Cohen-Macaulay test via finiteness of S' \ S.
GcmResult gcm_check(const Configuration& cfg, int degree_cap = -1, int window_start = -1);

// All points (0,..,alpha-1,..,1,..,0) present in the configuration.
bool is_isolated_singularity(const Configuration& cfg);

// Every degree bound evaluated from r, deg, codim and the face data:
// eg, a1, a3, a4, a2ii, a2iii, a6, sturmfels.
std::map<std::string, long long> bound_values(const Configuration& cfg, int r, long long deg,
                                              const std::vector<FaceData>& faces);

InvariantReport compute_invariants(const Configuration& cfg, const InvariantOptions& opts = {});

}  // namespace toricgb

#endif
