#include "toricgb/fiber.hpp"

#include <stdexcept>

#include "toricgb/ints.hpp"

namespace toricgb {

FiberMinima::FiberMinima(Configuration cfg, TermOrder order)
    : cfg_(std::move(cfg)), order_(std::move(order)), xy_{cfg_.c(), cfg_.d, false} {
    if (order_.universe != xy_)
        throw std::invalid_argument("FiberMinima: order must live on the XY universe");
    for (int i = 0; i < cfg_.c(); ++i) steps_.push_back(cfg_.generators[i]);
    for (int j = 0; j < cfg_.d; ++j) steps_.push_back(cfg_.vertex(j));
    minima_.push_back({{Point(cfg_.d, 0), unit_monomial(xy_)}});
}

Point FiberMinima::image(const Monomial& m) const {
    Point b(cfg_.d, 0);
    for (int k = 0; k < xy_.vars(); ++k) {
        if (m[k] == 0) continue;
        for (int j = 0; j < cfg_.d; ++j)
            b[j] = checked_add(b[j], checked_mul(m[k], steps_[k][j]));
    }
    return b;
}

void FiberMinima::extend_to(int degree) {
    while (static_cast<int>(minima_.size()) <= degree) {
        const auto& prev = minima_.back();
        std::map<Point, Monomial> next;
        for (const auto& [point, mono] : prev) {
            for (int k = 0; k < xy_.vars(); ++k) {
                Point b(cfg_.d);
                for (int j = 0; j < cfg_.d; ++j) b[j] = checked_add(point[j], steps_[k][j]);
                Monomial candidate = mono;
                candidate[k] += 1;
                auto it = next.find(b);
                if (it == next.end())
                    next.emplace(std::move(b), std::move(candidate));
                else if (compare(order_, candidate, it->second) == std::strong_ordering::less)
                    it->second = std::move(candidate);
            }
        }
        minima_.push_back(std::move(next));
    }
}

std::optional<Monomial> FiberMinima::minimum(const Point& b, int degree) {
    if (degree < 0) return std::nullopt;
    extend_to(degree);
    auto it = minima_[degree].find(b);
    if (it == minima_[degree].end()) return std::nullopt;
    return it->second;
}

bool FiberMinima::is_standard(const Monomial& m) {
    auto min = minimum(image(m), static_cast<int>(total_degree(m)));
    return min.has_value() && *min == m;
}

bool FiberMinima::is_reduced_basis_element(const Binomial& g) {
    const int n = static_cast<int>(total_degree(g.lead));
    if (total_degree(g.tail) != n) return false;  // toric elements are homogeneous
    Point b = image(g.lead);
    if (image(g.tail) != b) return false;  // not in the ideal at all
    auto min = minimum(b, n);
    if (!min || *min != g.tail) return false;  // tail must be the normal form of lead
    if (g.lead == g.tail) return false;
    // lead must be a minimal generator of the initial ideal: every
    // variable quotient of it has to be standard
    for (int k = 0; k < xy_.vars(); ++k) {
        if (g.lead[k] == 0) continue;
        Monomial q = g.lead;
        q[k] -= 1;
        if (!is_standard(q)) return false;
    }
    return true;
}

}  // namespace toricgb
