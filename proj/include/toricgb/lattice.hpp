#ifndef TORICGB_LATTICE_HPP
#define TORICGB_LATTICE_HPP

#include <string>
#include <vector>

#include "toricgb/hnf.hpp"

namespace toricgb {

// A lattice point of N^d. Points of the graded semigroup have coordinate
// sum n*alpha; degree(p) = sum/alpha.
using Point = std::vector<long long>;

// Canonical point set: coordinate-lexicographically sorted, no duplicates.
using PointSet = std::vector<Point>;

long long coord_sum(const Point& p);
void sort_unique(PointSet& s);
bool contains(const PointSet& s, const Point& p);  // binary search

// A simplicial configuration: the d simplex vertices e_j = alpha*unit_j are
// implicit; generators a_1..a_c keep their given order (it fixes the
// variable indices x_1..x_c).
struct Configuration {
    int alpha = 0;
    int d = 0;
    std::vector<Point> generators;

    int c() const { return static_cast<int>(generators.size()); }
    Point vertex(int j) const;     // 0-based
    PointSet vertex_set() const;   // {e_1, ..., e_d}
    PointSet full_point_set() const;  // vertices + generators, sorted
};

enum class Severity { Error, Warning };

struct Violation {
    Severity severity;
    std::string message;
};

// All points of N^d with coordinate sum alpha, sorted.
PointSet m_alpha_d(int alpha, int d);

// Invariant violations; empty list means valid. The relatively-prime check
// is warning-level, everything else is an error.
std::vector<Violation> validate(const Configuration& cfg);
bool has_errors(const std::vector<Violation>& violations);

// All pairwise sums, deduplicated.
PointSet sumset(const PointSet& a, const PointSet& b);

// Degree-n slices S_n of the semigroup, memoized per instance.
class SemigroupLevels {
public:
    explicit SemigroupLevels(Configuration cfg);
    const PointSet& level(int n);
    const Configuration& config() const { return cfg_; }

private:
    Configuration cfg_;
    PointSet degree_one_;
    std::vector<PointSet> levels_;
};

PointSet semigroup_level(const Configuration& cfg, int n);

// Membership in the subgroup of Z^d generated by the vertices and
// generators, via Hermite normal form of the generator matrix.
class GroupMembership {
public:
    explicit GroupMembership(const Configuration& cfg);
    bool contains(const Point& p) const;

private:
    IntMat hnf_;
};

bool in_group(const Configuration& cfg, const Point& p);

}  // namespace toricgb

#endif
