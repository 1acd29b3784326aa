#include "frame/dejet.hpp"

#include <stdexcept>

namespace orifold {

bool DEJet::coalescing() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u0[static_cast<size_t>(i)] == u0[static_cast<size_t>(j)]) return true;
    return false;
}

bool DEJet::resonant() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Scalar d = deltas[static_cast<size_t>(i)] - deltas[static_cast<size_t>(j)];
            if (d.is_integer() && !d.is_zero()) return true;
        }
    return false;
}

ResidualReport de_residuals(const DEJet& jet) {
    int n = jet.n;
    const SeriesMatrix& g = jet.gamma;
    int ord = jet.order;
    ResidualReport rep;
    auto user = [&](int k) {
        return FormalSeries::constant(jet.u0[static_cast<size_t>(k)], n, ord) +
               FormalSeries::variable(k, n, ord);
    };
    auto dd = [&](int i, int j) {
        return jet.deltas[static_cast<size_t>(j)] - jet.deltas[static_cast<size_t>(i)] - Scalar(1);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::string ij = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            // (DE1)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                rep.residuals.emplace_back(
                    "DE1" + ij + "," + std::to_string(k + 1),
                    g.at(i, j).diff(k) - g.at(i, k) * g.at(k, j));
            }
            // (DE2)
            {
                FormalSeries sum(n, ord - 1);
                for (int k = 0; k < n; ++k) sum += g.at(i, j).diff(k);
                rep.residuals.emplace_back("DE2" + ij, std::move(sum));
            }
            // (DE3)
            {
                FormalSeries sum(n, ord - 1);
                for (int k = 0; k < n; ++k) sum += user(k) * g.at(i, j).diff(k);
                sum -= dd(i, j) * g.at(i, j).truncated(ord - 1);
                rep.residuals.emplace_back("DE3" + ij, std::move(sum));
            }
            // mixed identity, d_i eliminated through DE2
            {
                FormalSeries lhs = (user(j) - user(i)) * g.at(i, j).diff(i);
                FormalSeries rhs(n, ord - 1);
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    rhs += (user(k) - user(j)) * g.at(i, k) * g.at(k, j);
                }
                rhs -= dd(i, j) * g.at(i, j).truncated(ord - 1);
                rep.residuals.emplace_back("DEmix" + ij, lhs - rhs);
            }
            // mixed identity, d_j eliminated through DE2
            {
                FormalSeries lhs = (user(i) - user(j)) * g.at(i, j).diff(j);
                FormalSeries rhs(n, ord - 1);
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    rhs += (user(k) - user(i)) * g.at(i, k) * g.at(k, j);
                }
                rhs -= dd(i, j) * g.at(i, j).truncated(ord - 1);
                rep.residuals.emplace_back("DEmix2" + ij, lhs - rhs);
            }
        }
    return rep;
}

namespace {

struct Builder {
    int n, K;
    const std::vector<Scalar>& u0;
    const std::vector<Scalar>& deltas;
    // gamma coefficients per ordered pair (i,j)
    std::vector<std::map<MultiIndex, Scalar>> coef;

    int pidx(int i, int j) const { return i * n + j; }
    Scalar get(int i, int j, const MultiIndex& m) const {
        const auto& mp = coef[static_cast<size_t>(pidx(i, j))];
        auto it = mp.find(m);
        return it == mp.end() ? Scalar() : it->second;
    }
    void set(int i, int j, const MultiIndex& m, const Scalar& v) {
        if (!v.is_zero()) coef[static_cast<size_t>(pidx(i, j))][m] = v;
    }

    // coefficient of ubar^m in gamma^i_k * gamma^k_j, needing only stored data
    Scalar prod_coeff(int i, int k, int j, const MultiIndex& m) const {
        Scalar acc;
        const auto& a = coef[static_cast<size_t>(pidx(i, k))];
        for (const auto& [ma, ca] : a) {
            if (ma.degree() > m.degree()) break;
            MultiIndex mb;
            if (!m.minus(ma, mb)) continue;
            Scalar cb = get(k, j, mb);
            if (!cb.is_zero()) acc += ca * cb;
        }
        return acc;
    }

    // coefficient of ubar^m in (d_a gamma^i_k) * gamma^k_j
    Scalar dprod_coeff(int i, int k, int j, int a, const MultiIndex& m) const {
        Scalar acc;
        const auto& mp = coef[static_cast<size_t>(pidx(i, k))];
        for (const auto& [ma, ca] : mp) {
            if (ma[a] == 0) continue;
            MultiIndex da = ma;
            da[a] -= 1;
            if (da.degree() > m.degree()) continue;
            MultiIndex mb;
            if (!m.minus(da, mb)) continue;
            Scalar cb = get(k, j, mb);
            if (!cb.is_zero()) acc += Scalar(Rat(static_cast<long>(ma[a]))) * ca * cb;
        }
        return acc;
    }

    // coefficient of ubar^m in gamma^i_k * (d_a gamma^k_j)
    Scalar prodd_coeff(int i, int k, int j, int a, const MultiIndex& m) const {
        Scalar acc;
        const auto& mp = coef[static_cast<size_t>(pidx(k, j))];
        for (const auto& [mb0, cb] : mp) {
            if (mb0[a] == 0) continue;
            MultiIndex db = mb0;
            db[a] -= 1;
            if (db.degree() > m.degree()) continue;
            MultiIndex ma;
            if (!m.minus(db, ma)) continue;
            Scalar ca = get(i, k, ma);
            if (!ca.is_zero()) acc += Scalar(Rat(static_cast<long>(mb0[a]))) * ca * cb;
        }
        return acc;
    }

    // right side of the mixed identity at coefficient nu = [sum_{k!=i,j}(u^k-u^j) g^i_k g^k_j - (d_j-d_i-1) g^i_j]_nu
    Scalar rhs_mixed(int i, int j, const MultiIndex& nu, bool variant2) const {
        Scalar acc;
        int base = variant2 ? i : j;  // (u^k - u^j) or (u^k - u^i)
        for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            Scalar w = u0[static_cast<size_t>(k)] - u0[static_cast<size_t>(base)];
            if (!w.is_zero()) acc += w * prod_coeff(i, k, j, nu);
            MultiIndex nk, nb;
            if (nu.minus(MultiIndex::unit(n, k), nk)) acc += prod_coeff(i, k, j, nk);
            if (nu.minus(MultiIndex::unit(n, base), nb)) acc -= prod_coeff(i, k, j, nb);
        }
        Scalar dd = deltas[static_cast<size_t>(j)] - deltas[static_cast<size_t>(i)] - Scalar(1);
        acc -= dd * get(i, j, nu);
        return acc;
    }

    // right side of the d_i-derivative of the mixed identity at nu = [sum_{k!=i,j}(u^k-u^j)(d_i g^i_k g^k_j + g^i_k d_i g^k_j)]_nu
    // (variant2: roles i<->j and weight (u^k-u^i), derivative d_j)
    Scalar rhs_mixed_deriv(int i, int j, const MultiIndex& nu, bool variant2) const {
        Scalar acc;
        int base = variant2 ? i : j;
        int dv = variant2 ? j : i;
        for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            Scalar w = u0[static_cast<size_t>(k)] - u0[static_cast<size_t>(base)];
            auto both = [&](const MultiIndex& m) {
                return dprod_coeff(i, k, j, dv, m) + prodd_coeff(i, k, j, dv, m);
            };
            if (!w.is_zero()) acc += w * both(nu);
            MultiIndex nk, nb;
            if (nu.minus(MultiIndex::unit(n, k), nk)) acc += both(nk);
            if (nu.minus(MultiIndex::unit(n, base), nb)) acc -= both(nb);
        }
        return acc;
    }
};

}  // namespace

DEJet reconstruct_gamma(const std::vector<Scalar>& u0, const ScalarMatrix& gamma0,
                        const std::vector<Scalar>& deltas, int K) {
    int n = static_cast<int>(u0.size());
    DEJet jet;
    jet.n = n;
    jet.order = K;
    jet.u0 = u0;
    jet.deltas = deltas;

    bool coal = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u0[static_cast<size_t>(i)] == u0[static_cast<size_t>(j)]) coal = true;
    bool reso = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Scalar d = deltas[static_cast<size_t>(i)] - deltas[static_cast<size_t>(j)];
            if (d.is_integer() && !d.is_zero()) reso = true;
        }
    if (coal && reso)
        throw std::domain_error(
            "not admissible: doubly resonant input (coalescing canonical values with a "
            "nonzero-integer conformal-dimension gap)");

    // Coalescent compatibility: evaluating the mixed identities at u0 with
    // u0^i = u0^j kills the derivative side, so the seed must satisfy
    // sum_{k != i,j} (u0^k - u0^j) g0^i_k g0^k_j = (d_j - d_i - 1) g0^i_j.
    // No jet passes through an incompatible seed.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || u0[static_cast<size_t>(i)] != u0[static_cast<size_t>(j)]) continue;
            Scalar acc;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                acc += (u0[static_cast<size_t>(k)] - u0[static_cast<size_t>(j)]) * gamma0.at(i, k) *
                       gamma0.at(k, j);
            }
            Scalar dd = deltas[static_cast<size_t>(j)] - deltas[static_cast<size_t>(i)] - Scalar(1);
            if (acc != dd * gamma0.at(i, j))
                throw std::domain_error(
                    "not admissible: no formal Darboux-Egoroff solution through this seed "
                    "(coalescent compatibility constraint violated at order zero)");
        }

    Builder b{n, K, u0, deltas, {}};
    b.coef.assign(static_cast<size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b.set(i, j, MultiIndex(n), gamma0.at(i, j));

    for (int d = 1; d <= K; ++d) {
        // Step 1: monomials with support off {i,j}, via the DE1 product rule
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (const auto& m : monomials_of_degree(n, d)) {
                    int l = -1;
                    for (int k = 0; k < n; ++k)
                        if (k != i && k != j && m[k] > 0) {
                            l = k;
                            break;
                        }
                    if (l < 0) continue;
                    MultiIndex nu;
                    m.minus(MultiIndex::unit(n, l), nu);
                    Scalar val = b.prod_coeff(i, l, j, nu) * Scalar(Rat(1, static_cast<long>(m[l])));
                    b.set(i, j, m, val);
                }
            }
        // Step 2: pure-(i,j) monomials for pairs with distinct base values
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || u0[static_cast<size_t>(i)] == u0[static_cast<size_t>(j)]) continue;
                Scalar uji = u0[static_cast<size_t>(j)] - u0[static_cast<size_t>(i)];
                for (int p = d; p >= 0; --p) {
                    int q = d - p;
                    MultiIndex m(n);
                    m[i] = static_cast<uint32_t>(p);
                    m[j] = static_cast<uint32_t>(q);
                    if (p >= 1) {
                        // mixed identity at nu = m - e_i
                        MultiIndex nu;
                        m.minus(MultiIndex::unit(n, i), nu);
                        Scalar rhs = b.rhs_mixed(i, j, nu, false);
                        // subtract [(ubar^j - ubar^i) d_i gamma]_nu, known parts
                        MultiIndex nj, ni;
                        if (nu.minus(MultiIndex::unit(n, j), nj)) {
                            MultiIndex mj = nj;
                            mj[i] += 1;
                            rhs -= Scalar(Rat(static_cast<long>(mj[i]))) * b.get(i, j, mj);
                        }
                        if (nu.minus(MultiIndex::unit(n, i), ni)) {
                            MultiIndex mi = ni;
                            mi[i] += 1;
                            rhs += Scalar(Rat(static_cast<long>(mi[i]))) * b.get(i, j, mi);
                        }
                        Scalar val = rhs / (Scalar(Rat(p)) * uji);
                        b.set(i, j, m, val);
                    } else {
                        // p = 0: second mixed identity at nu = m - e_j
                        MultiIndex nu;
                        m.minus(MultiIndex::unit(n, j), nu);
                        Scalar rhs = b.rhs_mixed(i, j, nu, true);
                        MultiIndex ni, nj;
                        if (nu.minus(MultiIndex::unit(n, i), ni)) {
                            MultiIndex mi = ni;
                            mi[j] += 1;
                            rhs -= Scalar(Rat(static_cast<long>(mi[j]))) * b.get(i, j, mi);
                        }
                        if (nu.minus(MultiIndex::unit(n, j), nj)) {
                            MultiIndex mj = nj;
                            mj[j] += 1;
                            rhs += Scalar(Rat(static_cast<long>(mj[j]))) * b.get(i, j, mj);
                        }
                        Scalar val = rhs / (Scalar(Rat(q)) * (-uji));
                        b.set(i, j, m, val);
                    }
                }
            }
        // Steps 3-4: pure-(i,j) monomials for coalescent pairs
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || u0[static_cast<size_t>(i)] != u0[static_cast<size_t>(j)]) continue;
                for (int p = d; p >= 1; --p) {
                    int q = d - p;
                    MultiIndex m(n);
                    m[i] = static_cast<uint32_t>(p);
                    m[j] = static_cast<uint32_t>(q);
                    MultiIndex nu(n);
                    nu[i] = static_cast<uint32_t>(p - 1);
                    nu[j] = static_cast<uint32_t>(q);
                    Scalar rhs4 = b.rhs_mixed_deriv(i, j, nu, false);
                    Scalar div = deltas[static_cast<size_t>(j)] - deltas[static_cast<size_t>(i)] -
                                 Scalar(p + 1);
                    if (div.is_zero())
                        throw std::domain_error("not admissible: zero divisor in the coalescent recursion");
                    Scalar up;  // (p+1) g_{m + e_i - e_j}
                    if (q >= 1) {
                        MultiIndex msh(n);
                        msh[i] = static_cast<uint32_t>(p + 1);
                        msh[j] = static_cast<uint32_t>(q - 1);
                        up = Scalar(p + 1) * b.get(i, j, msh);
                    }
                    Scalar val = (rhs4 / Scalar(Rat(p)) - up) / div;
                    b.set(i, j, m, val);
                }
                {
                    // p = 0: pure d_j^d coefficient
                    MultiIndex m(n);
                    m[j] = static_cast<uint32_t>(d);
                    MultiIndex nu(n);
                    nu[j] = static_cast<uint32_t>(d - 1);
                    Scalar rhs4 = b.rhs_mixed_deriv(i, j, nu, true);
                    Scalar div = deltas[static_cast<size_t>(j)] - deltas[static_cast<size_t>(i)] -
                                 Scalar(d + 1);
                    if (div.is_zero())
                        throw std::domain_error("not admissible: zero divisor in the coalescent recursion");
                    Scalar val = rhs4 / (Scalar(Rat(d)) * div);
                    b.set(i, j, m, val);
                }
            }
    }

    jet.gamma = SeriesMatrix(n, n, n, K);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FormalSeries s(n, K);
            for (const auto& [m, c] : b.coef[static_cast<size_t>(b.pidx(i, j))]) s.set_coeff(m, c);
            jet.gamma.at(i, j) = s;
        }
    return jet;
}

}  // namespace orifold
