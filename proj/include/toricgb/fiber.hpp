#ifndef TORICGB_FIBER_HPP
#define TORICGB_FIBER_HPP

#include <map>
#include <optional>
#include <vector>

#include "toricgb/groebner.hpp"
#include "toricgb/lattice.hpp"
#include "toricgb/order.hpp"

namespace toricgb {

// Normal forms of toric monomials without a Groebner basis: the normal form
// of a monomial under a multiplicative order is the order-minimal monomial
// of its fiber (all monomials with the same lattice image). Minima are
// computed level by level: min over degree-1 steps z of min(fiber(b - im(z))) * z.
class FiberMinima {
public:
    FiberMinima(Configuration cfg, TermOrder order);  // XY-universe order

    // Lattice image of an XY monomial.
    Point image(const Monomial& m) const;

    // Order-minimal monomial of the degree-n fiber over b; nullopt when b
    // is not a degree-n semigroup element.
    std::optional<Monomial> minimum(const Point& b, int degree);

    // m is standard (irreducible modulo the toric ideal) iff it is the
    // minimum of its own fiber.
    bool is_standard(const Monomial& m);

    // Exact membership of g in the reduced Groebner basis, by the
    // characterization: lead is a minimal generator of the initial ideal
    // and tail is the normal form of lead.
    bool is_reduced_basis_element(const Binomial& g);

private:
    Configuration cfg_;
    TermOrder order_;
    Universe xy_;
    std::vector<Point> steps_;  // images of x_1..x_c, y_1..y_d
    std::vector<std::map<Point, Monomial>> minima_;  // per degree
    void extend_to(int degree);
};

}  // namespace toricgb

#endif
