#ifndef ORIFOLD_FRAME_DEJET_HPP
#define ORIFOLD_FRAME_DEJET_HPP

#include "flatf/structure.hpp"

namespace orifold {

// Formal jet of a Darboux-Egoroff matrix centered at u0: off-diagonal series
// gamma^i_j in ubar = u - u0, together with the conformal dimensions.
struct DEJet {
    int n = 0;
    int order = -1;
    std::vector<Scalar> u0;
    std::vector<Scalar> deltas;
    SeriesMatrix gamma;  // off-diagonal entries; diagonal identically zero

    ScalarMatrix gamma0() const { return gamma.constant_term(); }
    bool coalescing() const;
    bool resonant() const;
};

// Residuals of the five Darboux-Egoroff families: the off-diagonal
// derivative equations DE1/DE2, the Euler-scaling equation DE3, and the two
// mixed identities DEmix/DEmix2 obtained by eliminating d_i resp. d_j; all
// returned as series in ubar.
ResidualReport de_residuals(const DEJet& jet);

// Unique jet of order K through (u0, gamma0, deltas), by the distinct-index /
// coalescent four-step induction. Throws "not admissible" for doubly
// resonant input (coalescing u0 together with a nonzero-integer delta gap).
DEJet reconstruct_gamma(const std::vector<Scalar>& u0, const ScalarMatrix& gamma0,
                        const std::vector<Scalar>& deltas, int K);

}  // namespace orifold

#endif
