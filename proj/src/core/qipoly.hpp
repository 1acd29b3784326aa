#ifndef ORIFOLD_CORE_QIPOLY_HPP
#define ORIFOLD_CORE_QIPOLY_HPP

#include "core/scalar.hpp"

#include <optional>
#include <vector>

namespace orifold {

// Univariate polynomial over Q(i), dense coefficients c[0] + c[1] x + ...
struct QiPoly {
    std::vector<Scalar> c;

    int degree() const;
    Scalar eval(const Scalar& x) const;
    QiPoly derivative() const;
    void normalize();  // strip leading zeros
};

QiPoly poly_mul(const QiPoly& a, const QiPoly& b);
// Remainder of a modulo b (b nonzero).
QiPoly poly_rem(QiPoly a, const QiPoly& b);
QiPoly poly_gcd(QiPoly a, QiPoly b);
// Exact division by (x - r); the caller guarantees r is a root.
QiPoly poly_deflate(const QiPoly& p, const Scalar& r);

// True iff p has no repeated roots.
bool poly_squarefree(const QiPoly& p);

// All roots of p in Q(i), or nullopt if some root does not lie in Q(i)
// (detected by exact verification of numerically located candidates).
// Requires p squarefree.
std::optional<std::vector<Scalar>> qi_roots_distinct(const QiPoly& p);

// Exact rationalization of a double via continued fractions: returns the first
// convergent r with |r - x| <= tol, bounded denominator.
std::optional<Rat> rationalize(double x, double tol = 1e-9, long max_den = 1000000000L);

}  // namespace orifold

#endif
