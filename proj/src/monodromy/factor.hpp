#ifndef ORIFOLD_MONODROMY_FACTOR_HPP
#define ORIFOLD_MONODROMY_FACTOR_HPP

#include "monodromy/datum.hpp"

namespace orifold {

// One Stokes factor: unitriangular, unit diagonal, supported on the pairs
// whose Stokes ray coincides with `ray` (coincident rays are grouped).
struct StokesFactor {
    RayDirection ray;
    std::vector<std::pair<int, int>> support;
    ScalarMatrix k;
};

struct StokesFactorization {
    // Ordered so that the left-to-right product reproduces the matrix:
    // S1 = prod(factors_s1), S2 = prod(factors_s2); factors are ordered by
    // increasing ray angle counterclockwise from the admissible direction.
    std::vector<StokesFactor> factors_s1, factors_s2;
    // True when some grouped factor carries composable pairs (collinear
    // configuration); the factorization is still exact, but the grouped
    // factor is not a product of commuting single-entry factors.
    bool collinear_grouping = false;
};

// Requires S1 upper and S2 lower unitriangular in the lexicographic order of
// (u, tau), with supports consistent with the coalescence vanishing; the
// re-multiplied products equal the inputs exactly.
StokesFactorization stokes_factorization(const ScalarMatrix& s1, const ScalarMatrix& s2,
                                         const std::vector<Scalar>& u, const ExactAngle& tau,
                                         mpfr_prec_t bits = 128);

}  // namespace orifold

#endif
