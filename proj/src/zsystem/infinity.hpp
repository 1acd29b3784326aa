#ifndef ORIFOLD_ZSYSTEM_INFINITY_HPP
#define ORIFOLD_ZSYSTEM_INFINITY_HPP

#include "frame/frame.hpp"
#include "zsystem/loglaurent.hpp"

namespace orifold {

// Formal fundamental solution at z = infinity, specialized at u = u0:
// X_for(z) = (1 + sum_k A_k z^{-k}) z^Lambda e^{z U0}.
struct InfinityFormalSolution {
    std::vector<Scalar> u0;
    std::vector<Scalar> lambda_diag;  // Lambda = lambda 1 - diag(delta)
    std::vector<ScalarMatrix> a;      // a[k-1] = A_k, k = 1..K
};

// Recursion (1-k) A_{k-1} + A_{k-1} Lambda = [U0, A_k] - V^T A_{k-1}, with
// coalescent entries completed from the k+1 level. Throws for doubly
// resonant frames.
InfinityFormalSolution infinity_formal_solution(const CanonicalFrame& fr, int K);

// Conjugated residual [X' - (U0 - V^T/z) X] e^{-zU0} z^{-Lambda}: a matrix
// Laurent polynomial in 1/z, certified for z^0 .. z^{-K}; zero iff valid.
LogLaurentSeries infinity_zresidual(const CanonicalFrame& fr, const InfinityFormalSolution& sol);

// u-dependent coefficients A_k(u) to the frame's certified u-order, same
// recursion with series arithmetic; a[k-1] = A_k(u).
std::vector<SeriesMatrix> infinity_coefficients_u(const CanonicalFrame& fr, int K);

}  // namespace orifold

#endif
