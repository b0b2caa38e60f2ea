#include "toricgb/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "toricgb/ints.hpp"

namespace toricgb {

long long coord_sum(const Point& p) {
    long long s = 0;
    for (long long v : p) s = checked_add(s, v);
    return s;
}

void sort_unique(PointSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const PointSet& s, const Point& p) {
    return std::binary_search(s.begin(), s.end(), p);
}

Point Configuration::vertex(int j) const {
    Point e(d, 0);
    e[j] = alpha;
    return e;
}

PointSet Configuration::vertex_set() const {
    PointSet vs;
    for (int j = 0; j < d; ++j) vs.push_back(vertex(j));
    sort_unique(vs);
    return vs;
}

PointSet Configuration::full_point_set() const {
    PointSet s = generators;
    for (int j = 0; j < d; ++j) s.push_back(vertex(j));
    sort_unique(s);
    return s;
}

PointSet m_alpha_d(int alpha, int d) {
    if (alpha < 0 || d < 1) throw std::invalid_argument("m_alpha_d: need alpha >= 0, d >= 1");
    PointSet out;
    Point cur(d, 0);
    // lexicographic enumeration of compositions of alpha into d parts
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == d - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, alpha);
    return out;
}

std::vector<Violation> validate(const Configuration& cfg) {
    std::vector<Violation> out;
    auto error = [&](std::string msg) { out.push_back({Severity::Error, std::move(msg)}); };
    auto warn = [&](std::string msg) { out.push_back({Severity::Warning, std::move(msg)}); };

    if (cfg.alpha < 2) error("alpha must be >= 2, got " + std::to_string(cfg.alpha));
    if (cfg.d < 2) error("d must be >= 2, got " + std::to_string(cfg.d));
    if (cfg.c() < 2) error("need at least 2 generators, got " + std::to_string(cfg.c()));
    if (cfg.d < 2) return out;

    auto fmt = [](const Point& p) {
        std::string s = "(";
        for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        return s + ")";
    };

    std::vector<const Point*> usable;
    PointSet seen;
    for (const Point& a : cfg.generators) {
        if (static_cast<int>(a.size()) != cfg.d) {
            error("generator " + fmt(a) + " has wrong dimension");
            continue;
        }
        bool neg = std::any_of(a.begin(), a.end(), [](long long v) { return v < 0; });
        if (neg) {
            error("generator " + fmt(a) + " has a negative coordinate");
            continue;
        }
        if (coord_sum(a) != cfg.alpha) {
            error("generator " + fmt(a) + " has coordinate sum != alpha");
            continue;
        }
        bool is_vertex = false;
        for (int j = 0; j < cfg.d; ++j)
            if (a == cfg.vertex(j)) is_vertex = true;
        if (is_vertex) {
            error("generator " + fmt(a) + " equals a simplex vertex");
            continue;
        }
        if (contains(seen, a)) {
            error("duplicate generator " + fmt(a));
            continue;
        }
        seen.push_back(a);
        sort_unique(seen);
        usable.push_back(&a);
    }

    long long g = 0;
    for (const Point* a : usable)
        for (long long v : *a) g = gcd_ll(g, v);
    if (!usable.empty() && g != 1)
        warn("generator entries are not relatively prime (gcd " + std::to_string(g) + ")");
    return out;
}

bool has_errors(const std::vector<Violation>& violations) {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.severity == Severity::Error; });
}

PointSet sumset(const PointSet& a, const PointSet& b) {
    PointSet out;
    out.reserve(a.size() * b.size());
    for (const Point& p : a)
        for (const Point& q : b) {
            Point s(p.size());
            for (size_t i = 0; i < p.size(); ++i) s[i] = checked_add(p[i], q[i]);
            out.push_back(std::move(s));
        }
    sort_unique(out);
    return out;
}

SemigroupLevels::SemigroupLevels(Configuration cfg) : cfg_(std::move(cfg)) {
    degree_one_ = cfg_.full_point_set();
    levels_.push_back(PointSet{Point(cfg_.d, 0)});
}

const PointSet& SemigroupLevels::level(int n) {
    if (n < 0) throw std::invalid_argument("semigroup level must be >= 0");
    while (static_cast<int>(levels_.size()) <= n)
        levels_.push_back(sumset(levels_.back(), degree_one_));
    return levels_[n];
}

PointSet semigroup_level(const Configuration& cfg, int n) {
    SemigroupLevels lv(cfg);
    return lv.level(n);
}

GroupMembership::GroupMembership(const Configuration& cfg) {
    IntMat rows;
    for (int j = 0; j < cfg.d; ++j) rows.push_back(cfg.vertex(j));
    for (const Point& a : cfg.generators) rows.push_back(a);
    hnf_ = hnf_rows(std::move(rows));
}

bool GroupMembership::contains(const Point& p) const {
    return in_row_span(hnf_, p);
}

bool in_group(const Configuration& cfg, const Point& p) {
    return GroupMembership(cfg).contains(p);
}

}  // namespace toricgb
