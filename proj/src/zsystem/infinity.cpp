#include "zsystem/infinity.hpp"

#include <stdexcept>

namespace orifold {

InfinityFormalSolution infinity_formal_solution(const CanonicalFrame& fr, int K) {
    if (fr.doubly_resonant())
        throw std::domain_error("infinity_formal_solution: doubly resonant frame refused");
    int n = fr.n;
    ScalarMatrix v = fr.v_lambda.constant_term();
    ScalarMatrix vt = v.transpose();
    std::vector<Scalar> lam = fr.formal_monodromy_diag();
    ScalarMatrix lam_m = ScalarMatrix::diagonal(lam);

    InfinityFormalSolution sol;
    sol.u0 = fr.u0;
    sol.lambda_diag = lam;

    ScalarMatrix prev = ScalarMatrix::identity(n);
    for (int k = 1; k <= K; ++k) {
        // W_k = (1-k) A_{k-1} + A_{k-1} Lambda + V^T A_{k-1} = [U0, A_k]
        ScalarMatrix w = Scalar(1 - k) * prev + prev * lam_m + vt * prev;
        ScalarMatrix ak(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar du = fr.u0[static_cast<size_t>(i)] - fr.u0[static_cast<size_t>(j)];
                if (!du.is_zero()) ak.at(i, j) = w.at(i, j) / du;
            }
        // entries with u0^i = u0^j (incl. diagonal) from the k+1 level:
        // (delta_i - delta_j - k) a_ij = - sum_{l != i} V^l_i a_lj
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar du = fr.u0[static_cast<size_t>(i)] - fr.u0[static_cast<size_t>(j)];
                if (!du.is_zero()) continue;
                Scalar coef = fr.deltas[static_cast<size_t>(i)] - fr.deltas[static_cast<size_t>(j)] -
                              Scalar(k);
                if (coef.is_zero())
                    throw std::domain_error("infinity_formal_solution: doubly resonant frame refused");
                Scalar acc;
                for (int l = 0; l < n; ++l) {
                    if (l == i) continue;
                    // V^l_i = (u0^i - u0^l) gamma^l_i vanishes when u0^l = u0^i,
                    // so only already-computed entries contribute
                    acc += v.at(l, i) * ak.at(l, j);
                }
                ak.at(i, j) = -acc / coef;
            }
        sol.a.push_back(ak);
        prev = ak;
    }
    return sol;
}

LogLaurentSeries infinity_zresidual(const CanonicalFrame& fr, const InfinityFormalSolution& sol) {
    int n = fr.n;
    int K = static_cast<int>(sol.a.size());
    ScalarMatrix vt = fr.v_lambda.constant_term().transpose();
    ScalarMatrix lam_m = ScalarMatrix::diagonal(sol.lambda_diag);
    ScalarMatrix u0 = ScalarMatrix::diagonal(sol.u0);

    auto coeff = [&](int k) -> ScalarMatrix {
        if (k == 0) return ScalarMatrix::identity(n);
        if (k < 0 || k > K) return ScalarMatrix(n, n);
        return sol.a[static_cast<size_t>(k - 1)];
    };
    LogLaurentSeries res(n, -K, 0);
    for (int k = 0; k <= K; ++k) {
        // z^{-k} coefficient of F' + F Lambda / z + F U0 - U0 F + V^T F / z
        ScalarMatrix c = Scalar(1 - k) * coeff(k - 1) + coeff(k - 1) * lam_m + vt * coeff(k - 1);
        c = c - (u0 * coeff(k) - coeff(k) * u0);
        res.add_term(-k, 0, c);
    }
    return res;
}

std::vector<SeriesMatrix> infinity_coefficients_u(const CanonicalFrame& fr, int K) {
    if (fr.doubly_resonant())
        throw std::domain_error("infinity_coefficients_u: doubly resonant frame refused");
    int n = fr.n;
    int uord = fr.order;
    std::vector<SeriesMatrix> out;

    // A_1: off-diagonal gamma(u)^T, diagonal from (A_1)^i_i = sum V^l_i (A_1)^l_i
    SeriesMatrix a1(n, n, n, uord);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) a1.at(i, j) = fr.gamma.at(j, i);
    for (int i = 0; i < n; ++i) {
        FormalSeries acc(n, uord);
        for (int l = 0; l < n; ++l) {
            if (l == i) continue;
            acc += fr.v_lambda.at(l, i) * a1.at(l, i);
        }
        a1.at(i, i) = acc;
    }
    out.push_back(a1);

    for (int k = 1; k < K; ++k) {
        const SeriesMatrix& ak = out.back();
        int ord = ak.order() - 1;  // one u-derivative per level
        SeriesMatrix next(n, n, n, ord);
        // off-diagonal, column i: (A_{k+1})^a_i = (A_1)^a_i (A_k)^i_i - d_i (A_k)^a_i
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < n; ++a) {
                if (a == i) continue;
                next.at(a, i) = (a1.at(a, i) * ak.at(i, i) - ak.at(a, i).diff(i)).truncated(ord);
            }
        // diagonal: (k+1)(A_{k+1})^i_i = sum_{l != i} V^l_i (A_{k+1})^l_i
        for (int i = 0; i < n; ++i) {
            FormalSeries acc(n, ord);
            for (int l = 0; l < n; ++l) {
                if (l == i) continue;
                acc += fr.v_lambda.at(l, i) * next.at(l, i);
            }
            next.at(i, i) = Scalar(Rat(1, k + 1)) * acc;
        }
        out.push_back(next);
    }
    return out;
}

}  // namespace orifold
