#include "frame/frame.hpp"

#include <stdexcept>

namespace orifold {

std::vector<Scalar> CanonicalFrame::formal_monodromy_diag() const {
    std::vector<Scalar> lam;
    for (int i = 0; i < n; ++i) lam.push_back(lambda - deltas[static_cast<size_t>(i)]);
    return lam;
}

bool CanonicalFrame::coalescing() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u0[static_cast<size_t>(i)] == u0[static_cast<size_t>(j)]) return true;
    return false;
}

bool CanonicalFrame::resonant() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Scalar d = deltas[static_cast<size_t>(i)] - deltas[static_cast<size_t>(j)];
            if (d.is_integer() && !d.is_zero()) return true;
        }
    return false;
}

// Reversion of the pointwise map v(t) = u(t) - u0 (zero constant term,
// invertible linear part): returns t(ubar) with v(t(ubar)) = ubar.
std::vector<FormalSeries> revert_zero_map(const std::vector<FormalSeries>& v, int order) {
    int n = static_cast<int>(v.size());
    ScalarMatrix jac(n, n);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            jac.at(i, a) = v[static_cast<size_t>(i)].coeff(MultiIndex::unit(n, a));
    ScalarMatrix jinv = jac.inverse();
    std::vector<FormalSeries> t(static_cast<size_t>(n), FormalSeries::zero(n, order));
    // linear seed
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            t[static_cast<size_t>(a)] +=
                jinv.at(a, i) * FormalSeries::variable(i, n, order);
    for (int d = 2; d <= order; ++d) {
        // error = v(t(ubar)) - ubar, correct the degree-d part
        std::vector<FormalSeries> err(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            err[static_cast<size_t>(i)] =
                v[static_cast<size_t>(i)].compose(t) - FormalSeries::variable(i, n, order);
        }
        for (int a = 0; a < n; ++a) {
            FormalSeries corr(n, order);
            for (int i = 0; i < n; ++i)
                corr += jinv.at(a, i) * err[static_cast<size_t>(i)].homogeneous_part(d).truncated(order);
            t[static_cast<size_t>(a)] -= corr;
        }
    }
    return t;
}

SeriesMatrix v_tilde_from_gamma(const SeriesMatrix& gamma_tilde, int i) {
    int n = gamma_tilde.rows();
    SeriesMatrix v(n, n, gamma_tilde.nvars(), gamma_tilde.order());
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        v.at(j, j) = -gamma_tilde.at(j, i);
        v.at(j, i) = gamma_tilde.at(j, i);
        v.at(i, j) = -gamma_tilde.at(i, j);
        v.at(i, i) += gamma_tilde.at(i, j);
    }
    return v;
}

CanonicalFrame build_frame(const FlatFStructure& s, int K, const std::vector<int>& perm,
                           const std::vector<Scalar>& lame0) {
    int n = s.n();
    if (!s.euler()) throw std::domain_error("build_frame: Euler data required");
    if (s.order() < K + 4)
        throw std::domain_error("build_frame: potential order too low for requested frame order");

    IdempotentFrame idem = idempotents(s);
    std::vector<FormalSeries> u = canonical_coordinates(s, idem);

    std::vector<int> p(perm);
    if (p.empty()) {
        p.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    }
    std::vector<FormalSeries> uo;
    for (int i = 0; i < n; ++i) uo.push_back(u[static_cast<size_t>(p[static_cast<size_t>(i)])]);

    CanonicalFrame fr;
    fr.n = n;
    fr.order = K;
    fr.lambda = s.lambda();
    for (int i = 0; i < n; ++i) fr.u0.push_back(uo[static_cast<size_t>(i)].constant_term());

    // t(ubar): revert ubar(t) = u(t) - u0
    std::vector<FormalSeries> v;
    for (int i = 0; i < n; ++i)
        v.push_back(uo[static_cast<size_t>(i)] -
                    FormalSeries::constant(fr.u0[static_cast<size_t>(i)], n, uo[static_cast<size_t>(i)].order()));
    std::vector<FormalSeries> t_of_u = revert_zero_map(v, K + 2);

    // psi~^i_a (t) = d u^i / d t^a, pushed to u-variables
    fr.psi_tilde = SeriesMatrix(n, n, n, K + 1);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            fr.psi_tilde.at(i, a) = uo[static_cast<size_t>(i)].diff(a).compose(t_of_u).truncated(K + 1);

    SeriesMatrix psi_inv = fr.psi_tilde.inverse();
    fr.gamma_tilde = SeriesMatrix(n, n, n, K);
    for (int i = 0; i < n; ++i) {
        SeriesMatrix vi = fr.psi_tilde.diff(i) * psi_inv;
        fr.v_tilde.push_back(vi);
        for (int j = 0; j < n; ++j)
            if (j != i) fr.gamma_tilde.at(i, j) = -vi.at(i, j).truncated(K);
    }

    // V~^lambda two ways: -lambda 1 + sum u^i V~_i, and psi~ mu^lambda psi~^{-1}
    SeriesMatrix vt_lambda(n, n, n, K);
    for (int i = 0; i < n; ++i) {
        FormalSeries ui = FormalSeries::constant(fr.u0[static_cast<size_t>(i)], n, K) +
                          FormalSeries::variable(i, n, K);
        vt_lambda = vt_lambda + ui * fr.v_tilde[static_cast<size_t>(i)];
    }
    vt_lambda = vt_lambda - s.lambda() * SeriesMatrix::identity(n, n, K);
    {
        std::vector<Scalar> mu = s.mu_lambda();
        SeriesMatrix mu_m(n, n, n, K);
        for (int a = 0; a < n; ++a)
            mu_m.at(a, a) = FormalSeries::constant(mu[static_cast<size_t>(a)], n, K);
        SeriesMatrix route2 = fr.psi_tilde * mu_m * psi_inv;
        SeriesMatrix diffm = vt_lambda.truncated(K) - route2.truncated(K);
        if (!diffm.is_zero())
            throw std::domain_error("build_frame: V~^lambda routes disagree (invalid structure)");
    }

    // conformal dimensions from the diagonal of V~^lambda + lambda
    for (int i = 0; i < n; ++i) {
        FormalSeries d = vt_lambda.at(i, i);
        Scalar di = d.constant_term() + s.lambda();
        FormalSeries rest = d - FormalSeries::constant(d.constant_term(), n, d.order());
        if (!rest.is_zero())
            throw std::domain_error("build_frame: conformal dimensions not constant (invalid structure)");
        fr.deltas.push_back(di);
    }

    // Lame coefficients: d log H_j = omega_j = -sum_i (V~_i)^j_j du^i
    std::vector<Scalar> h0(lame0);
    if (h0.empty()) h0.assign(static_cast<size_t>(n), Scalar(1));
    for (const auto& h : h0)
        if (h.is_zero()) throw std::domain_error("build_frame: Lame normalization must be nonzero");
    for (int j = 0; j < n; ++j) {
        std::vector<FormalSeries> omega;
        for (int i = 0; i < n; ++i)
            omega.push_back(-fr.v_tilde[static_cast<size_t>(i)].at(j, j).truncated(K));
        if (!one_form_closed(omega))
            throw std::domain_error("build_frame: Lame one-form not closed (invalid structure)");
        FormalSeries logh = integrate_one_form(omega).truncated(K);
        fr.lame.push_back(h0[static_cast<size_t>(j)] * logh.exp());
    }

    // psi = H psi~, gamma = H gamma~ H^{-1}, V^lambda = H V~^lambda H^{-1}
    fr.psi = SeriesMatrix(n, n, n, K);
    fr.gamma = SeriesMatrix(n, n, n, K);
    fr.v_lambda = SeriesMatrix(n, n, n, K);
    std::vector<FormalSeries> lame_inv;
    for (int i = 0; i < n; ++i) lame_inv.push_back(fr.lame[static_cast<size_t>(i)].inverse());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            fr.psi.at(i, j) = (fr.lame[static_cast<size_t>(i)] * fr.psi_tilde.at(i, j)).truncated(K);
            if (i != j)
                fr.gamma.at(i, j) = (fr.lame[static_cast<size_t>(i)] * fr.gamma_tilde.at(i, j) *
                                     lame_inv[static_cast<size_t>(j)])
                                        .truncated(K);
            fr.v_lambda.at(i, j) = (fr.lame[static_cast<size_t>(i)] * vt_lambda.at(i, j) *
                                    lame_inv[static_cast<size_t>(j)])
                                       .truncated(K);
        }
    return fr;
}

ResidualReport darboux_tsarev_residuals(const SeriesMatrix& gamma_tilde) {
    int n = gamma_tilde.rows();
    ResidualReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            // translation invariance: the derivatives sum to zero
            FormalSeries sum(gamma_tilde.nvars(), gamma_tilde.order() - 1);
            for (int k = 0; k < n; ++k) sum += gamma_tilde.at(i, j).diff(k);
            rep.residuals.emplace_back("dt2(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                       std::move(sum));
            // triple-index product rule
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                FormalSeries r = gamma_tilde.at(i, j).diff(k) +
                                 gamma_tilde.at(i, j) * gamma_tilde.at(i, k) -
                                 gamma_tilde.at(i, j) * gamma_tilde.at(j, k) -
                                 gamma_tilde.at(i, k) * gamma_tilde.at(k, j);
                rep.residuals.emplace_back("dt1(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                               "," + std::to_string(k + 1) + ")",
                                           std::move(r));
            }
        }
    return rep;
}

}  // namespace orifold
