#include "zsystem/levelt.hpp"

#include <stdexcept>

namespace orifold {

LeveltSolution levelt_normal_form(const FlatFStructure& s, int P) {
    int n = s.n();
    auto h = deformed_coordinates(s, P);
    auto jac = jacobian_at_origin(h);
    auto u = u_matrices_at_origin(s, jac, P);
    std::vector<Scalar> mu = s.mu_lambda();

    // gauge recursion: n G_n + [mu, G_n] + R_n = K_n with
    // K_n = U_n^T + sum_{k<n} (U_k^T G_{n-k} - G_{n-k} R_k)
    std::vector<ScalarMatrix> g{ScalarMatrix::identity(n)};
    std::vector<ScalarMatrix> rk;
    for (int k = 1; k <= P; ++k) {
        ScalarMatrix kn = u[static_cast<size_t>(k - 1)].transpose();
        for (int j = 1; j < k; ++j) {
            kn = kn + u[static_cast<size_t>(j - 1)].transpose() * g[static_cast<size_t>(k - j)];
            kn = kn - g[static_cast<size_t>(k - j)] * rk[static_cast<size_t>(j - 1)];
        }
        ScalarMatrix gk(n, n), rkk(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Scalar gap = mu[static_cast<size_t>(a)] - mu[static_cast<size_t>(b)];
                Scalar factor = Scalar(k) + gap;
                if (factor.is_zero()) {
                    // resonant entry: normal form sets G_k = 0, R_k carries it
                    rkk.at(a, b) = kn.at(a, b);
                } else {
                    gk.at(a, b) = kn.at(a, b) / factor;
                }
            }
        g.push_back(gk);
        rk.push_back(rkk);
    }

    LeveltSolution sol;
    sol.mu = mu;
    sol.rk = rk;
    sol.r = ScalarMatrix(n, n);
    for (const auto& m : rk) sol.r = sol.r + m;
    // full-frame coefficients: G^{full}_p = sum_{a+b=p} J_a^T G^{gauge}_b
    for (int p = 0; p <= P; ++p) {
        ScalarMatrix gf(n, n);
        for (int a = 0; a <= p && a < static_cast<int>(jac.size()); ++a)
            gf = gf + jac[static_cast<size_t>(a)].transpose() * g[static_cast<size_t>(p - a)];
        sol.g.push_back(gf);
    }
    return sol;
}

LogLaurentSeries levelt_zresidual(const FlatFStructure& s, const LeveltSolution& sol) {
    int n = s.n();
    int P = sol.zorder();
    ScalarMatrix ut = s.u_operator().constant_term().transpose();
    ScalarMatrix mu = ScalarMatrix::diagonal(sol.mu);

    LogLaurentSeries res(n, -1, P - 1);
    for (int p = 0; p <= P; ++p) {
        const ScalarMatrix& gp = sol.g[static_cast<size_t>(p)];
        // G' term
        if (p >= 1) res.add_term(p - 1, 0, Scalar(p) * gp);
        // -G mu / z
        res.add_term(p - 1, 0, -(gp * mu));
        // + mu G / z
        res.add_term(p - 1, 0, mu * gp);
        // + G sum R_k z^{k-1}
        for (int k = 1; k <= static_cast<int>(sol.rk.size()); ++k)
            res.add_term(p + k - 1, 0, gp * sol.rk[static_cast<size_t>(k - 1)]);
        // - U(0)^T G
        res.add_term(p, 0, -(ut * gp));
    }
    return res;
}

}  // namespace orifold
