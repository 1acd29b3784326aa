#ifndef ORIFOLD_FRAME_FRAME_HPP
#define ORIFOLD_FRAME_FRAME_HPP

#include "flatf/semisimple.hpp"

namespace orifold {

// Canonical-frame data of a semisimple homogeneous structure, every matrix a
// series in ubar = u - u0 centered at the base canonical values u0 = u(0).
struct CanonicalFrame {
    int n = 0;
    int order = -1;                    // certified ubar-order of gamma/psi
    std::vector<Scalar> u0;
    SeriesMatrix psi_tilde;            // d u^i / d t^a, as a function of u
    std::vector<SeriesMatrix> v_tilde; // V~_i = d_i psi~ . psi~^{-1}
    SeriesMatrix gamma_tilde;          // off-diagonal, G~^i_j = -(V~_i)^i_j
    std::vector<FormalSeries> lame;    // H_i(u), H_i(u0) from the caller
    SeriesMatrix psi;                  // H psi~
    SeriesMatrix gamma;                // H G~ H^{-1}
    SeriesMatrix v_lambda;             // V^l = H V~^l H^{-1}
    std::vector<Scalar> deltas;        // conformal dimensions
    Scalar lambda;

    // Lambda = lambda 1 - diag(delta), the formal-monodromy diagonal.
    std::vector<Scalar> formal_monodromy_diag() const;
    // Classification helpers.
    bool coalescing() const;
    bool resonant() const;      // some delta_i - delta_j in Z \ {0}
    bool doubly_resonant() const { return coalescing() && resonant(); }
};

// Builds the frame at ubar-order K. `perm` reorders the canonical branches
// (normalization choice of the u0 ordering); `lame0` are the H_i(u0) values.
// Requires s.order() >= K + 4 so that every derived tensor is certified to K.
CanonicalFrame build_frame(const FlatFStructure& s, int K,
                           const std::vector<int>& perm = {},
                           const std::vector<Scalar>& lame0 = {});

// Darboux-Tsarev residuals (the triple-index product rule dt1 and the
// translation-invariance sum dt2) of an off-diagonal matrix in u-vars.
ResidualReport darboux_tsarev_residuals(const SeriesMatrix& gamma_tilde);

// V~_i assembled from gamma_tilde in the shape of the canonical-frame
// structure matrix (diagonal from row/column sums).
SeriesMatrix v_tilde_from_gamma(const SeriesMatrix& gamma_tilde, int i);

// Reversion of a map v with v(0) = 0 and invertible linear part: returns t
// with v(t(x)) = x up to the given order.
std::vector<FormalSeries> revert_zero_map(const std::vector<FormalSeries>& v, int order);

}  // namespace orifold

#endif
