#include "frame/reconstruct.hpp"

#include <cmath>
#include <stdexcept>

namespace orifold {

ReconstructedPotentials reconstruct_potential(const SeriesMatrix& g0, const SeriesMatrix& g1,
                                              const std::vector<FormalSeries>& lame,
                                              const std::vector<Scalar>& u0) {
    (void)u0;
    int n = g0.rows();
    ReconstructedPotentials out;
    for (int a = 0; a < n; ++a) {
        std::vector<FormalSeries> omega;
        for (int k = 0; k < n; ++k) omega.push_back(g0.at(k, a) * lame[static_cast<size_t>(k)]);
        if (!one_form_closed(omega))
            throw std::domain_error("reconstruct_potential: coordinate one-form not closed");
        out.t.push_back(integrate_one_form(omega));
    }
    for (int v = 0; v < n; ++v) {
        std::vector<FormalSeries> phi;
        for (int k = 0; k < n; ++k) phi.push_back(g1.at(k, v) * lame[static_cast<size_t>(k)]);
        if (!one_form_closed(phi))
            throw std::domain_error("reconstruct_potential: potential one-form not closed");
        out.F.push_back(integrate_one_form(phi));
    }
    return out;
}

std::vector<std::vector<double>> growth_diagnostic(const FlatFStructure& s) {
    std::vector<std::vector<double>> out;
    for (const auto& f : s.potentials()) {
        std::vector<double> per_degree(static_cast<size_t>(f.order()) + 1, 0.0);
        for (const auto& [m, c] : f.terms()) {
            int d = m.degree();
            if (d < 1) continue;
            double v = std::pow(c.abs_double(), 1.0 / d);
            per_degree[static_cast<size_t>(d)] = std::max(per_degree[static_cast<size_t>(d)], v);
        }
        out.push_back(std::move(per_degree));
    }
    return out;
}

SeriesMatrix solve_pfaffian(const std::vector<SeriesMatrix>& m, const ScalarMatrix& x0) {
    int n = static_cast<int>(m.size());
    int order = m[0].order() + 1;
    SeriesMatrix x = SeriesMatrix::from_constant(x0, n, order);
    for (int d = 1; d <= order; ++d) {
        std::vector<SeriesMatrix> prod;
        for (int i = 0; i < n; ++i) prod.push_back(m[static_cast<size_t>(i)] * x.truncated(d - 1));
        for (const auto& mono : monomials_of_degree(n, d)) {
            int i = -1;
            for (int k = 0; k < n; ++k)
                if (mono[k] > 0) {
                    i = k;
                    break;
                }
            MultiIndex nu;
            mono.minus(MultiIndex::unit(n, i), nu);
            ScalarMatrix c = prod[static_cast<size_t>(i)].coeff(nu);
            Scalar inv = Scalar(Rat(1, static_cast<long>(mono[i])));
            for (int r = 0; r < x.rows(); ++r)
                for (int cidx = 0; cidx < x.cols(); ++cidx)
                    x.at(r, cidx).set_coeff(mono, inv * c.at(r, cidx));
        }
    }
    return x;
}

// d_i X = M_i X + B_i with X(u0) = x0.
static SeriesMatrix solve_pfaffian_affine(const std::vector<SeriesMatrix>& m,
                                          const std::vector<SeriesMatrix>& b,
                                          const ScalarMatrix& x0) {
    int n = static_cast<int>(m.size());
    int order = m[0].order() + 1;
    SeriesMatrix x = SeriesMatrix::from_constant(x0, n, order);
    for (int d = 1; d <= order; ++d) {
        std::vector<SeriesMatrix> rhs;
        for (int i = 0; i < n; ++i)
            rhs.push_back(m[static_cast<size_t>(i)] * x.truncated(d - 1) + b[static_cast<size_t>(i)]);
        for (const auto& mono : monomials_of_degree(n, d)) {
            int i = -1;
            for (int k = 0; k < n; ++k)
                if (mono[k] > 0) {
                    i = k;
                    break;
                }
            MultiIndex nu;
            mono.minus(MultiIndex::unit(n, i), nu);
            ScalarMatrix c = rhs[static_cast<size_t>(i)].coeff(nu);
            Scalar inv = Scalar(Rat(1, static_cast<long>(mono[i])));
            for (int r = 0; r < x.rows(); ++r)
                for (int cidx = 0; cidx < x.cols(); ++cidx)
                    x.at(r, cidx).set_coeff(mono, inv * c.at(r, cidx));
        }
    }
    return x;
}

std::vector<FormalSeries> lame_from_jet(const DEJet& jet, const std::vector<Scalar>& h0) {
    int n = jet.n;
    std::vector<SeriesMatrix> m;
    for (int i = 0; i < n; ++i) {
        SeriesMatrix ai(n, n, n, jet.order - 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            ai.at(j, i) = jet.gamma.at(j, i).truncated(jet.order - 1);
            ai.at(i, j) = -jet.gamma.at(i, j).truncated(jet.order - 1);
        }
        m.push_back(ai);
    }
    ScalarMatrix col(n, 1);
    for (int i = 0; i < n; ++i) col.at(i, 0) = h0[static_cast<size_t>(i)];
    SeriesMatrix h = solve_pfaffian(m, col);
    std::vector<FormalSeries> out;
    for (int i = 0; i < n; ++i) out.push_back(h.at(i, 0));
    return out;
}

SeriesMatrix v_i_from_gamma(const SeriesMatrix& gamma, int i) {
    int n = gamma.rows();
    SeriesMatrix v(n, n, gamma.nvars(), gamma.order());
    for (int a = 0; a < n; ++a) {
        if (a == i) continue;
        v.at(a, i) = gamma.at(a, i);
        v.at(i, a) = -gamma.at(i, a);
    }
    return v;
}

FlatFStructure structure_from_jet(const DEJet& jet, const std::vector<Scalar>& h0,
                                  const ScalarMatrix& g0_init, const ScalarMatrix& g1_init,
                                  Scalar lambda) {
    int n = jet.n;
    int K = jet.order;
    std::vector<FormalSeries> lame = lame_from_jet(jet, h0);

    std::vector<SeriesMatrix> mvt, bvt;
    for (int i = 0; i < n; ++i)
        mvt.push_back(-v_i_from_gamma(jet.gamma, i).transpose().truncated(K - 1));
    SeriesMatrix g0 = solve_pfaffian(mvt, g0_init);
    for (int i = 0; i < n; ++i) {
        SeriesMatrix ei(n, n, n, K - 1);
        ei.at(i, i) = FormalSeries::constant(Scalar(1), n, K - 1);
        bvt.push_back(ei * g0.truncated(K - 1));
    }
    SeriesMatrix g1 = solve_pfaffian_affine(mvt, bvt, g1_init);

    ReconstructedPotentials rp =
        reconstruct_potential(g0.truncated(K), g1.truncated(K), lame, jet.u0);

    // flat coordinates: invert t(ubar)
    std::vector<FormalSeries> ubar_of_t = revert_zero_map(rp.t, rp.t[0].order());

    std::vector<FormalSeries> potentials;
    for (int a = 0; a < n; ++a) potentials.push_back(rp.F[static_cast<size_t>(a)].compose(ubar_of_t));

    // flat unit e = sum_i d/du^i: components sum_i dt^a/du^i must be constant
    std::vector<Scalar> unit;
    for (int a = 0; a < n; ++a) {
        FormalSeries s(n, rp.t[static_cast<size_t>(a)].order() - 1);
        for (int i = 0; i < n; ++i) s += rp.t[static_cast<size_t>(a)].diff(i);
        FormalSeries rest = s - FormalSeries::constant(s.constant_term(), n, s.order());
        if (!rest.is_zero())
            throw std::domain_error("structure_from_jet: unit field not flat (invalid data)");
        unit.push_back(s.constant_term());
    }

    // Euler field E = sum u^i d/du^i in flat coordinates; attach (q, r) only
    // when its linear part is diagonal.
    std::optional<EulerData> euler;
    {
        std::vector<FormalSeries> w;
        for (int a = 0; a < n; ++a) {
            FormalSeries s(n, rp.t[static_cast<size_t>(a)].order() - 1);
            for (int i = 0; i < n; ++i) {
                FormalSeries ui = FormalSeries::constant(jet.u0[static_cast<size_t>(i)], n, K) +
                                  FormalSeries::variable(i, n, K);
                s += ui * rp.t[static_cast<size_t>(a)].diff(i);
            }
            w.push_back(s.compose(ubar_of_t));
        }
        bool affine = true, diag = true;
        ScalarMatrix lin(n, n);
        std::vector<Scalar> r0;
        for (int a = 0; a < n && affine; ++a) {
            for (const auto& [m, c] : w[static_cast<size_t>(a)].terms())
                if (m.degree() >= 2) affine = false;
            r0.push_back(w[static_cast<size_t>(a)].constant_term());
            for (int b = 0; b < n; ++b) {
                lin.at(a, b) = w[static_cast<size_t>(a)].coeff(MultiIndex::unit(n, b));
                if (a != b && !lin.at(a, b).is_zero()) diag = false;
            }
        }
        if (affine && diag) {
            EulerData ed;
            for (int a = 0; a < n; ++a) {
                ed.q.push_back(Scalar(1) - lin.at(a, a));
                ed.r.push_back(r0[static_cast<size_t>(a)]);
            }
            euler = ed;
        }
    }
    return FlatFStructure(std::move(potentials), std::move(unit), std::move(euler), lambda);
}

CanonicalFrame frame_from_jet(const DEJet& jet, const std::vector<Scalar>& h0, Scalar lambda) {
    int n = jet.n;
    int K = jet.order;
    CanonicalFrame fr;
    fr.n = n;
    fr.order = K;
    fr.u0 = jet.u0;
    fr.deltas = jet.deltas;
    fr.lambda = lambda;
    fr.gamma = jet.gamma;
    fr.lame = lame_from_jet(jet, h0);
    std::vector<FormalSeries> lame_inv;
    for (int i = 0; i < n; ++i) lame_inv.push_back(fr.lame[static_cast<size_t>(i)].inverse());
    fr.gamma_tilde = SeriesMatrix(n, n, n, K);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                fr.gamma_tilde.at(i, j) =
                    (lame_inv[static_cast<size_t>(i)] * jet.gamma.at(i, j) * fr.lame[static_cast<size_t>(j)])
                        .truncated(K);
    for (int i = 0; i < n; ++i) fr.v_tilde.push_back(v_tilde_from_gamma(fr.gamma_tilde, i));

    // V^lambda = diag(delta - lambda) + [Gamma, U]
    fr.v_lambda = SeriesMatrix(n, n, n, K);
    for (int i = 0; i < n; ++i)
        fr.v_lambda.at(i, i) =
            FormalSeries::constant(jet.deltas[static_cast<size_t>(i)] - lambda, n, K);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FormalSeries uj = FormalSeries::constant(jet.u0[static_cast<size_t>(j)], n, K) +
                              FormalSeries::variable(j, n, K);
            FormalSeries ui = FormalSeries::constant(jet.u0[static_cast<size_t>(i)], n, K) +
                              FormalSeries::variable(i, n, K);
            fr.v_lambda.at(i, j) = (jet.gamma.at(i, j) * (uj - ui)).truncated(K);
        }

    // psi with d_i psi psi^{-1} = V_i, normalized psi(u0) = H(u0)
    std::vector<SeriesMatrix> vi;
    for (int i = 0; i < n; ++i) vi.push_back(v_i_from_gamma(jet.gamma, i).truncated(K - 1));
    ScalarMatrix psi0(n, n);
    for (int i = 0; i < n; ++i) psi0.at(i, i) = h0[static_cast<size_t>(i)];
    fr.psi = solve_pfaffian(vi, psi0).truncated(K);
    fr.psi_tilde = SeriesMatrix(n, n, n, K);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            fr.psi_tilde.at(i, j) = (lame_inv[static_cast<size_t>(i)] * fr.psi.at(i, j)).truncated(K);
    return fr;
}

}  // namespace orifold
