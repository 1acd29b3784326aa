#include "cohft/bseries.hpp"

#include <stdexcept>

namespace orifold {

BSeries lm_bseries(const FlatFStructure& s, bool normalize_origin) {
    int n = s.n();
    BSeries out;
    out.b = SeriesMatrix(n, n, n, s.order() - 1);
    for (int a = 0; a < n; ++a)
        for (int g = 0; g < n; ++g) {
            FormalSeries d = s.potentials()[static_cast<size_t>(a)].diff(g);
            if (normalize_origin)
                d = d - FormalSeries::constant(d.constant_term(), n, d.order());
            out.b.at(a, g) = d;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SeriesMatrix comm = commutator(out.b.diff(i), out.b.diff(j));
            for (int a = 0; a < n; ++a)
                for (int g = 0; g < n; ++g)
                    if (!comm.at(a, g).is_zero())
                        out.commutativity.residuals.emplace_back(
                            "comm(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" +
                                std::to_string(a + 1) + "," + std::to_string(g + 1) + ")",
                            comm.at(a, g));
            if (comm.is_zero())
                out.commutativity.residuals.emplace_back(
                    "comm(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                    FormalSeries::zero(n, comm.order()));
        }
    return out;
}

std::map<std::tuple<int, int, std::vector<int>>, Scalar> lm_correlators(const SeriesMatrix& b,
                                                                        int max_points) {
    std::map<std::tuple<int, int, std::vector<int>>, Scalar> out;
    int n = b.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [m, coeff] : b.at(i, j).terms()) {
                int deg = m.degree();
                if (deg < 1 || deg > max_points) continue;
                Rat fact(1);
                std::vector<int> ins;
                for (int v = 0; v < b.nvars(); ++v)
                    for (uint32_t k = 1; k <= m[v]; ++k) {
                        fact = fact * Rat(static_cast<long>(k));
                        ins.push_back(v + 1);
                    }
                out[{i + 1, j + 1, ins}] = Scalar(fact) * coeff;
            }
    return out;
}

PrimitiveCheck primitive_vector_check(const SeriesMatrix& b, const std::vector<Scalar>& h) {
    int n = b.rows();
    PrimitiveCheck out;
    ScalarMatrix d(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Scalar acc;
            for (int mu = 0; mu < n; ++mu)
                acc += b.at(i, mu).diff(k).constant_term() * h[static_cast<size_t>(mu)];
            d.at(i, k) = acc;
        }
    if (d.det().is_zero()) return out;
    out.primitive = true;

    // basis change on V1 sending e_1 -> h
    int mu0 = -1;
    for (int mu = 0; mu < n; ++mu)
        if (!h[static_cast<size_t>(mu)].is_zero()) {
            mu0 = mu;
            break;
        }
    ScalarMatrix g(n, n);
    for (int i = 0; i < n; ++i) g.at(i, 0) = h[static_cast<size_t>(i)];
    {
        int col = 1;
        for (int j = 0; j < n; ++j) {
            if (j == mu0) continue;
            g.at(j, col) = Scalar(1);
            ++col;
        }
    }
    ScalarMatrix ginv = g.inverse();

    // bbar = G^{-1} B G entrywise
    SeriesMatrix bbar(n, n, n, b.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FormalSeries acc(n, b.order());
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    Scalar c = ginv.at(i, p) * g.at(q, j);
                    if (!c.is_zero()) acc += c * b.at(p, q);
                }
            bbar.at(i, j) = acc;
        }
    // dbar = G^{-1} d, coordinates t = dbar^{-1} s
    ScalarMatrix dbar = ginv * d;
    ScalarMatrix dbar_inv = dbar.inverse();
    std::vector<FormalSeries> subs;
    for (int a = 0; a < n; ++a) {
        FormalSeries lin(n, b.order());
        for (int k = 0; k < n; ++k)
            lin += dbar_inv.at(a, k) * FormalSeries::variable(k, n, b.order());
        subs.push_back(lin);
    }
    SeriesMatrix bhat(n, n, n, b.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) bhat.at(i, j) = bbar.at(i, j).compose(subs);

    // first-column normalization check: d_k bhat^i_1 = delta^i_k at 0
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Scalar v = bhat.at(i, 0).diff(k).constant_term();
            if (v != (i == k ? Scalar(1) : Scalar()))
                throw std::logic_error("primitive_vector_check: normalization failed");
        }

    // rows must be closed one-forms; integrate to potentials
    std::vector<FormalSeries> pot;
    for (int i = 0; i < n; ++i) {
        std::vector<FormalSeries> row;
        for (int j = 0; j < n; ++j) row.push_back(bhat.at(i, j));
        if (!one_form_closed(row))
            throw std::domain_error("primitive_vector_check: dB ^ dB != 0 (not a commutativity solution)");
        pot.push_back(integrate_one_form(row));
    }
    std::vector<Scalar> unit(static_cast<size_t>(n));
    unit[0] = Scalar(1);
    out.structure = FlatFStructure(std::move(pot), std::move(unit));
    return out;
}

namespace {

// re-embeds an n-variable series into n+1 variables (the extra one last)
FormalSeries promote(const FormalSeries& f, int extra) {
    FormalSeries out(f.nvars() + extra, f.order());
    for (const auto& [m, c] : f.terms()) {
        std::vector<uint32_t> e = m.exponents();
        for (int k = 0; k < extra; ++k) e.push_back(0);
        out.set_coeff(MultiIndex(std::move(e)), c);
    }
    return out;
}

}  // namespace

OwdvvReport owdvv_check(const OwdvvInput& in) {
    int n = in.F.nvars();
    if (in.Fo.nvars() != n + 1)
        throw std::invalid_argument("owdvv_check: Fo must have one more variable than F");
    OwdvvReport rep;
    ScalarMatrix etainv = in.eta.inverse();
    auto& res = rep.residuals.residuals;
    int sv = n;  // index of the s variable in n+1 coordinates

    // closed WDVV, unit equation: d^3 F / dt^1 dt^a dt^b = eta_ab
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            FormalSeries r = in.F.diff(0).diff(a).diff(b) -
                             FormalSeries::constant(in.eta.at(a, b), n, in.F.order() - 3);
            res.emplace_back("wdvv_unit(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")", r);
        }
    // closed WDVV associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g)
                for (int dd = 0; dd < n; ++dd) {
                    if (a > dd) continue;  // symmetry halves the grid
                    FormalSeries lhs(n, in.F.order() - 3);
                    FormalSeries rhs(n, in.F.order() - 3);
                    for (int mu = 0; mu < n; ++mu)
                        for (int nu = 0; nu < n; ++nu) {
                            if (etainv.at(mu, nu).is_zero()) continue;
                            lhs += etainv.at(mu, nu) * in.F.diff(a).diff(b).diff(mu) *
                                   in.F.diff(nu).diff(g).diff(dd);
                            rhs += etainv.at(mu, nu) * in.F.diff(dd).diff(b).diff(mu) *
                                   in.F.diff(nu).diff(g).diff(a);
                        }
                    if (!(lhs - rhs).is_zero())
                        res.emplace_back("wdvv_assoc(" + std::to_string(a + 1) + std::to_string(b + 1) +
                                             std::to_string(g + 1) + std::to_string(dd + 1) + ")",
                                         lhs - rhs);
                }
    // closed WDVV homogeneity: E^nu d_nu F = (3-d) F + quadratic
    {
        FormalSeries acc(n, in.F.order() - 1);
        for (int nu = 0; nu < n; ++nu) {
            FormalSeries e = (Scalar(1) - in.q[static_cast<size_t>(nu)]) *
                                 FormalSeries::variable(nu, n, in.F.order()) +
                             FormalSeries::constant(in.r[static_cast<size_t>(nu)], n, in.F.order());
            acc += e * in.F.diff(nu);
        }
        acc -= (Scalar(3) - in.d) * in.F.truncated(in.F.order() - 1);
        FormalSeries red(n, acc.order());
        for (const auto& [m, c] : acc.terms())
            if (m.degree() >= 3) red.set_coeff(m, c);
        res.emplace_back("wdvv_euler", red);
    }
    // open equations in n+1 variables
    FormalSeries fp = promote(in.F, 1);
    auto fo = in.Fo;
    int oord = std::min(fp.order(), fo.order()) - 2;
    // open unit equations
    for (int a = 0; a < n; ++a)
        res.emplace_back("owdvv3a(" + std::to_string(a + 1) + ")", fo.diff(0).diff(a));
    res.emplace_back("owdvv3b", fo.diff(0).diff(sv) -
                                    FormalSeries::constant(Scalar(1), n + 1, fo.order() - 2));
    // first open associativity family
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                if (a > g) continue;  // antisymmetric in (a, g)
                FormalSeries lhs(n + 1, oord);
                FormalSeries rhs(n + 1, oord);
                for (int mu = 0; mu < n; ++mu)
                    for (int nu = 0; nu < n; ++nu) {
                        if (etainv.at(mu, nu).is_zero()) continue;
                        lhs += etainv.at(mu, nu) * fp.diff(a).diff(b).diff(mu) * fo.diff(nu).diff(g);
                        rhs += etainv.at(mu, nu) * fp.diff(g).diff(b).diff(mu) * fo.diff(nu).diff(a);
                    }
                lhs += fo.diff(a).diff(b) * fo.diff(sv).diff(g);
                rhs += fo.diff(g).diff(b) * fo.diff(sv).diff(a);
                if (!(lhs - rhs).is_zero() || (a == 0 && b == 0 && g == 0))
                    res.emplace_back("owdvv1(" + std::to_string(a + 1) + std::to_string(b + 1) +
                                         std::to_string(g + 1) + ")",
                                     lhs - rhs);
            }
    // second open associativity family
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            FormalSeries lhs(n + 1, oord);
            for (int mu = 0; mu < n; ++mu)
                for (int nu = 0; nu < n; ++nu) {
                    if (etainv.at(mu, nu).is_zero()) continue;
                    lhs += etainv.at(mu, nu) * fp.diff(a).diff(b).diff(mu) * fo.diff(nu).diff(sv);
                }
            lhs += fo.diff(a).diff(b) * fo.diff(sv).diff(sv);
            lhs -= fo.diff(sv).diff(b) * fo.diff(sv).diff(a);
            res.emplace_back("owdvv2(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")", lhs);
        }
    // open homogeneity
    {
        FormalSeries acc(n + 1, fo.order() - 1);
        for (int nu = 0; nu < n; ++nu) {
            FormalSeries e = (Scalar(1) - in.q[static_cast<size_t>(nu)]) *
                                 FormalSeries::variable(nu, n + 1, fo.order()) +
                             FormalSeries::constant(in.r[static_cast<size_t>(nu)], n + 1, fo.order());
            acc += e * fo.diff(nu);
        }
        FormalSeries es = (Scalar(1) - in.d) * Scalar(Rat(1, 2)) *
                              FormalSeries::variable(sv, n + 1, fo.order()) +
                          FormalSeries::constant(in.r[static_cast<size_t>(n)], n + 1, fo.order());
        acc += es * fo.diff(sv);
        acc -= (Scalar(3) - in.d) * Scalar(Rat(1, 2)) * fo.truncated(fo.order() - 1);
        // reduce modulo linear polynomials in t (constants and pure t-monomials
        // of degree one); pure-s linear terms stay in the residual
        FormalSeries red(n + 1, acc.order());
        for (const auto& [m, c] : acc.terms()) {
            bool linear_t = m.degree() == 0 || (m.degree() == 1 && m[sv] == 0);
            if (!linear_t) red.set_coeff(m, c);
        }
        res.emplace_back("owdvv4", red);
    }

    if (rep.residuals.all_zero()) {
        // lift: ((dF/dt^mu) eta^{mu a}, ..., Fo) with unit d_1 and Euler data
        std::vector<FormalSeries> pots;
        for (int a = 0; a < n; ++a) {
            FormalSeries acc(n + 1, fp.order() - 1);
            for (int mu = 0; mu < n; ++mu) {
                if (etainv.at(mu, a).is_zero()) continue;
                acc += etainv.at(mu, a) * fp.diff(mu);
            }
            pots.push_back(acc);
        }
        pots.push_back(fo.truncated(fp.order() - 1));
        std::vector<Scalar> unit(static_cast<size_t>(n) + 1);
        unit[0] = Scalar(1);
        EulerData ed;
        ed.q = in.q;
        ed.q.push_back((Scalar(1) + in.d) * Scalar(Rat(1, 2)));
        ed.r = in.r;
        rep.lift = FlatFStructure(std::move(pots), std::move(unit), ed);
    }
    return rep;
}

}  // namespace orifold
