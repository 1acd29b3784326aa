#include "monodromy/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace orifold {

namespace {

// groups pairs by exact ray coincidence and sorts groups counterclockwise
// within their open half-plane (exact cross-product comparisons)
std::vector<StokesFactor> grouped_rays(const std::vector<std::pair<int, int>>& pairs,
                                       const std::vector<Scalar>& u, int n) {
    std::vector<StokesFactor> groups;
    for (const auto& pr : pairs) {
        RayDirection d = stokes_direction(u[static_cast<size_t>(pr.first)],
                                          u[static_cast<size_t>(pr.second)]);
        bool placed = false;
        for (auto& g : groups)
            if (g.ray.same_ray(d)) {
                g.support.push_back(pr);
                placed = true;
                break;
            }
        if (!placed) {
            StokesFactor f;
            f.ray = d.normalized();
            f.support.push_back(pr);
            f.k = ScalarMatrix::identity(n);
            groups.push_back(f);
        }
    }
    std::sort(groups.begin(), groups.end(), [](const StokesFactor& a, const StokesFactor& b) {
        // both rays lie in one open half-plane; ccw order by cross sign
        Rat cross = a.ray.x * b.ray.y - a.ray.y * b.ray.x;
        if (!cross.is_zero()) return cross.sign() > 0;
        return a.support < b.support;
    });
    return groups;
}

// solves S = K_1 ... K_q with the prescribed supports by superdiagonal-level
// elimination; `level` maps a position to its elimination depth
void solve_factors(const ScalarMatrix& s, std::vector<StokesFactor>& groups, int n, bool upper) {
    auto level = [&](int a, int b) { return upper ? b - a : a - b; };
    for (int lv = 1; lv <= n - 1; ++lv) {
        ScalarMatrix prod = ScalarMatrix::identity(n);
        for (const auto& g : groups) prod = prod * g.k;
        for (auto& g : groups)
            for (const auto& [a, b] : g.support)
                if (level(a, b) == lv) g.k.at(a, b) += s.at(a, b) - prod.at(a, b);
    }
    ScalarMatrix prod = ScalarMatrix::identity(n);
    for (const auto& g : groups) prod = prod * g.k;
    if (!(prod == s))
        throw std::domain_error("stokes_factorization: elimination failed to reproduce the matrix");
}

}  // namespace

StokesFactorization stokes_factorization(const ScalarMatrix& s1, const ScalarMatrix& s2,
                                         const std::vector<Scalar>& u, const ExactAngle& tau,
                                         mpfr_prec_t bits) {
    int n = s1.rows();
    if (!is_admissible(tau, u))
        throw std::domain_error("stokes_factorization: non-admissible direction");
    for (int i = 0; i < n; ++i) {
        if (!s1.at(i, i).is_one() || !s2.at(i, i).is_one())
            throw std::domain_error("stokes_factorization: matrices must be unitriangular");
        for (int j = 0; j < n; ++j) {
            if (i > j && !s1.at(i, j).is_zero())
                throw std::domain_error("stokes_factorization: S1 must be upper unitriangular");
            if (i < j && !s2.at(i, j).is_zero())
                throw std::domain_error("stokes_factorization: S2 must be lower unitriangular");
        }
    }
    // support consistency with the geometry
    std::vector<std::pair<int, int>> sup1, sup2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (u[static_cast<size_t>(i)] == u[static_cast<size_t>(j)]) {
                if (!s1.at(i, j).is_zero() || !s2.at(i, j).is_zero())
                    throw std::domain_error(
                        "stokes_factorization: nonzero entry on a coalescent pair violates the "
                        "vanishing condition");
                continue;
            }
            int s = sign_re_eitau(tau, u[static_cast<size_t>(i)] - u[static_cast<size_t>(j)], bits);
            // S1 support: s > 0 (rays in (tau+pi, tau+2pi)); S2 support: s < 0
            if (s > 0)
                sup1.emplace_back(i, j);
            else
                sup2.emplace_back(i, j);
            if (s <= 0 && !s1.at(i, j).is_zero())
                throw std::domain_error("stokes_factorization: S1 support inconsistent with (u, tau)");
            if (s >= 0 && !s2.at(i, j).is_zero())
                throw std::domain_error("stokes_factorization: S2 support inconsistent with (u, tau)");
        }

    StokesFactorization out;
    out.factors_s1 = grouped_rays(sup1, u, n);
    out.factors_s2 = grouped_rays(sup2, u, n);
    solve_factors(s1, out.factors_s1, n, true);
    solve_factors(s2, out.factors_s2, n, false);

    for (const auto& side : {out.factors_s1, out.factors_s2})
        for (const auto& g : side)
            for (const auto& [a, b] : g.support)
                for (const auto& [c, d] : g.support)
                    if (b == c && !(a == c && b == d)) out.collinear_grouping = true;
    return out;
}

}  // namespace orifold
