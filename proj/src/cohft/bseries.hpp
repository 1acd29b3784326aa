#ifndef ORIFOLD_COHFT_BSERIES_HPP
#define ORIFOLD_COHFT_BSERIES_HPP

#include "cohft/correlator.hpp"

namespace orifold {

struct BSeries {
    SeriesMatrix b;            // B^a_b = d_b F^a, normalized B(0) = 0
    ResidualReport commutativity;  // [d_i B, d_j B]
};
BSeries lm_bseries(const FlatFStructure& s, bool normalize_origin = true);

// LM correlator numbers of a commutativity solution: key (i, j, sorted
// insertions), value = m! * Taylor coefficient of B^i_j.
std::map<std::tuple<int, int, std::vector<int>>, Scalar> lm_correlators(const SeriesMatrix& b,
                                                                        int max_points);

struct PrimitiveCheck {
    bool primitive = false;
    // present only when primitive: potentials of the reconstructed structure
    // (in the adapted coordinates) with unit e_1
    std::optional<FlatFStructure> structure;
};
// Determinant test det(dB^i_mu/dt^k|_0 h^mu) != 0 and, when primitive, the
// basis change of the reconstruction returning F with B^a_b = d_b F^a.
PrimitiveCheck primitive_vector_check(const SeriesMatrix& b, const std::vector<Scalar>& h);

struct OwdvvInput {
    FormalSeries F;       // WDVV potential, n variables
    FormalSeries Fo;      // open potential, n + 1 variables (t, s)
    ScalarMatrix eta;     // flat metric of F
    std::vector<Scalar> q;  // n Euler weights of t
    std::vector<Scalar> r;  // n + 1 shift entries (last one for s)
    Scalar d;             // conformal dimension
};
struct OwdvvReport {
    ResidualReport residuals;            // wdvv_* and owdvv* labeled families
    std::optional<FlatFStructure> lift;  // (n+1)-dimensional flat F-structure
};
OwdvvReport owdvv_check(const OwdvvInput& in);

}  // namespace orifold

#endif
