#ifndef ORIFOLD_FRAME_RECONSTRUCT_HPP
#define ORIFOLD_FRAME_RECONSTRUCT_HPP

#include "frame/dejet.hpp"
#include "frame/frame.hpp"

namespace orifold {

// Quadrature reconstruction: t^a(u) and F^nu(u) with zero constant terms from
// the closed one-forms sum_k (G0)^k_a H_k du^k and sum_k (G1)^k_nu H_k du^k.
// Throws when a form fails the exact closedness check.
struct ReconstructedPotentials {
    std::vector<FormalSeries> t;  // t^a(ubar)
    std::vector<FormalSeries> F;  // F^nu(ubar)
};
ReconstructedPotentials reconstruct_potential(const SeriesMatrix& g0, const SeriesMatrix& g1,
                                              const std::vector<FormalSeries>& lame,
                                              const std::vector<Scalar>& u0);

// Per-degree growth indicators sup_{|m|=d} |coeff|^(1/d) for each potential.
std::vector<std::vector<double>> growth_diagnostic(const FlatFStructure& s);

// Solves the Pfaffian d_i X = M_i(u) X order by order from X(u0); the family
// M_i must be integrable (guaranteed for the systems used here).
SeriesMatrix solve_pfaffian(const std::vector<SeriesMatrix>& m, const ScalarMatrix& x0);

// Lame coefficients H(u) solving the jet's linear system with H(u0) = h0.
std::vector<FormalSeries> lame_from_jet(const DEJet& jet, const std::vector<Scalar>& h0);

// V_i(u) = [Gamma(u), E_i].
SeriesMatrix v_i_from_gamma(const SeriesMatrix& gamma, int i);

// Full germ synthesis from a Darboux-Egoroff jet: solves for G0 (d_i G0 =
// -V_i^T G0) and G1 (d_i G1 = E_i G0 + d_i G0 G0^{-1} G1), reconstructs the
// potentials, and re-expresses them in flat coordinates. Euler data is
// attached only when the Euler linear part comes out diagonal.
FlatFStructure structure_from_jet(const DEJet& jet, const std::vector<Scalar>& h0,
                                  const ScalarMatrix& g0_init, const ScalarMatrix& g1_init,
                                  Scalar lambda = Scalar());

// Canonical frame assembled directly from a jet (no potentials needed):
// enough for the z = infinity machinery and its tests.
CanonicalFrame frame_from_jet(const DEJet& jet, const std::vector<Scalar>& h0,
                              Scalar lambda = Scalar());

}  // namespace orifold

#endif
