#include "zsystem/deformed.hpp"

#include <stdexcept>

namespace orifold {

// Builds h with Hessian hess (symmetric collection, hess[g][b]) and zero
// affine part, then re-checks d_g d_b h = hess exactly.
static FormalSeries integrate_hessian(const std::vector<std::vector<FormalSeries>>& hess, int n) {
    int ord = hess[0][0].order();
    FormalSeries h(n, ord + 2);
    for (int d = 2; d <= ord + 2; ++d) {
        for (const auto& m : monomials_of_degree(n, d)) {
            int g = -1;
            for (int k = 0; k < n; ++k)
                if (m[k] > 0) {
                    g = k;
                    break;
                }
            MultiIndex m1;
            m.minus(MultiIndex::unit(n, g), m1);
            int b = -1;
            for (int k = 0; k < n; ++k)
                if (m1[k] > 0) {
                    b = k;
                    break;
                }
            MultiIndex m2;
            m1.minus(MultiIndex::unit(n, b), m2);
            if (m2.degree() > ord) continue;
            Scalar c = hess[static_cast<size_t>(g)][static_cast<size_t>(b)].coeff(m2);
            Rat denom = Rat(static_cast<long>(m[g])) * Rat(static_cast<long>(m1[b]));
            h.set_coeff(m, Scalar(Rat(1) / denom) * c);
        }
    }
    for (int g = 0; g < n; ++g)
        for (int b = 0; b < n; ++b) {
            FormalSeries diff = h.diff(g).diff(b) - hess[static_cast<size_t>(g)][static_cast<size_t>(b)];
            if (!diff.is_zero())
                throw std::domain_error(
                    "deformed_coordinates: non-integrable right-hand side (invalid structure)");
        }
    return h;
}

std::vector<std::vector<FormalSeries>> deformed_coordinates(const FlatFStructure& s, int P) {
    int n = s.n();
    std::vector<std::vector<FormalSeries>> h;
    std::vector<FormalSeries> h0;
    for (int a = 0; a < n; ++a) h0.push_back(FormalSeries::variable(a, n, s.order()));
    h.push_back(h0);
    for (int p = 0; p < P; ++p) {
        std::vector<FormalSeries> next;
        for (int a = 0; a < n; ++a) {
            std::vector<std::vector<FormalSeries>> hess(
                static_cast<size_t>(n), std::vector<FormalSeries>(static_cast<size_t>(n)));
            for (int g = 0; g < n; ++g)
                for (int b = 0; b < n; ++b) {
                    FormalSeries acc(n, s.order() - 2);
                    for (int l = 0; l < n; ++l)
                        acc += s.c_matrix(g).at(l, b) * h.back()[static_cast<size_t>(a)].diff(l);
                    hess[static_cast<size_t>(g)][static_cast<size_t>(b)] = acc;
                }
            next.push_back(integrate_hessian(hess, n));
        }
        h.push_back(std::move(next));
    }
    return h;
}

std::vector<ScalarMatrix> jacobian_at_origin(const std::vector<std::vector<FormalSeries>>& h) {
    int P = static_cast<int>(h.size()) - 1;
    int n = static_cast<int>(h[0].size());
    std::vector<ScalarMatrix> jac;
    for (int p = 0; p <= P; ++p) {
        ScalarMatrix jp(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                jp.at(a, b) = h[static_cast<size_t>(p)][static_cast<size_t>(a)].coeff(
                    MultiIndex::unit(n, b));
        jac.push_back(jp);
    }
    return jac;
}

std::vector<ScalarMatrix> u_matrices_at_origin(const FlatFStructure& s,
                                               const std::vector<ScalarMatrix>& jac, int P) {
    int n = s.n();
    ScalarMatrix u0 = s.u_operator().constant_term();
    ScalarMatrix mu = ScalarMatrix::diagonal(s.mu_lambda());
    // J^{-1} z-coefficients
    std::vector<ScalarMatrix> jinv{ScalarMatrix::identity(n)};
    for (int k = 1; k <= P; ++k) {
        ScalarMatrix acc(n, n);
        for (int j = 1; j <= k && j < static_cast<int>(jac.size()); ++j)
            acc = acc - jac[static_cast<size_t>(j)] * jinv[static_cast<size_t>(k - j)];
        jinv.push_back(acc);
    }
    auto conv = [&](const ScalarMatrix& mid, int k) {
        // coefficient of z^k in J * mid * J^{-1}
        ScalarMatrix acc(n, n);
        for (int a = 0; a <= k; ++a) {
            if (a >= static_cast<int>(jac.size())) break;
            acc = acc + jac[static_cast<size_t>(a)] * mid * jinv[static_cast<size_t>(k - a)];
        }
        return acc;
    };
    std::vector<ScalarMatrix> u;  // u[k-1] = U_k
    for (int k = 1; k <= P; ++k) {
        ScalarMatrix w = conv(u0, k - 1);
        ScalarMatrix y = conv(mu, k);
        ScalarMatrix d(n, n);
        for (int p = 1; p <= k && p < static_cast<int>(jac.size()); ++p)
            d = d + Scalar(p) * (jac[static_cast<size_t>(p)] * jinv[static_cast<size_t>(k - p)]);
        u.push_back(w - y - d);
    }
    return u;
}

}  // namespace orifold
