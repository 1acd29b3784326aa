#ifndef ORIFOLD_ZSYSTEM_LEVELT_HPP
#define ORIFOLD_ZSYSTEM_LEVELT_HPP

#include "zsystem/deformed.hpp"
#include "zsystem/loglaurent.hpp"

namespace orifold {

// Solution in Levelt normal form at z = 0, specialized at t = 0:
// Xi(z) = G(z) z^{-mu} z^R with G = 1 + sum G_p z^p, R in c(-mu*),
// R supported exactly on entries with mu_a - mu_b = -k and G_k zero there.
struct LeveltSolution {
    std::vector<Scalar> mu;        // mu^lambda diagonal
    std::vector<ScalarMatrix> g;   // g[0] = 1, g[p] = G_p, p <= P
    ScalarMatrix r;                // R = sum R_k
    std::vector<ScalarMatrix> rk;  // homogeneous pieces R_k (k >= 1, index k-1)

    // t-independent monodromy exponent data; M0 = e^{-2 pi i mu} e^{2 pi i R}.
    int zorder() const { return static_cast<int>(g.size()) - 1; }
};

LeveltSolution levelt_normal_form(const FlatFStructure& s, int P);

// Conjugated residual of the d_z-equation at t = 0:
// [Xi' - (U(0) - mu/z)^T Xi] z^{-R} z^{mu}, an integer-power z-series,
// certified for z^{-1} .. z^{P-1}. Zero iff the solution is valid. This path
// multiplies the candidate back into the equation and never consults the
// recursion that produced it.
LogLaurentSeries levelt_zresidual(const FlatFStructure& s, const LeveltSolution& sol);

}  // namespace orifold

#endif
