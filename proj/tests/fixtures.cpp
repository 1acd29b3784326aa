#include "fixtures.hpp"
#include <cstdio>
#include <cstdlib>

#include "series/linalg.hpp"

#include <functional>
#include <map>

namespace orifold::testing {

namespace {

// affine form const + sum lin[v] * x_v over the current-degree unknowns
struct Aff {
    bool ok = true;
    Scalar c0;
    std::map<int, Scalar> lin;

    static Aff invalid() {
        Aff a;
        a.ok = false;
        return a;
    }
    static Aff constant(const Scalar& c) {
        Aff a;
        a.c0 = c;
        return a;
    }
    static Aff var(int id) {
        Aff a;
        a.lin[id] = Scalar(1);
        return a;
    }
    bool is_const() const { return lin.empty(); }

    Aff& operator+=(const Aff& o) {
        if (!o.ok) ok = false;
        if (!ok) return *this;
        c0 += o.c0;
        for (auto& [v, c] : o.lin) lin[v] += c;
        return *this;
    }
    Aff operator*(const Scalar& s) const {
        Aff a(*this);
        a.c0 = a.c0 * s;
        for (auto& [v, c] : a.lin) c = c * s;
        return a;
    }
    Aff times(const Aff& o) const {
        if (!ok || !o.ok) return invalid();
        if (is_const()) return o * c0;
        if (o.is_const()) return *this * o.c0;
        return invalid();  // quadratic term: outside the scanned range
    }
};

struct OracleState {
    int n, degree;
    const std::vector<Scalar>& u0;
    const std::vector<Scalar>& deltas;
    // known coefficients for degrees < degree
    std::vector<std::map<MultiIndex, Scalar>> known;  // pair index i*n+j
    // unknown ids for degree-d monomials
    std::map<std::pair<int, MultiIndex>, int> var_ids;

    int pidx(int i, int j) const { return i * n + j; }

    Aff coeff(int i, int j, const MultiIndex& m) const {
        if (i == j) return Aff::constant(Scalar());
        int d = m.degree();
        if (d < degree) {
            const auto& mp = known[static_cast<size_t>(pidx(i, j))];
            auto it = mp.find(m);
            return Aff::constant(it == mp.end() ? Scalar() : it->second);
        }
        if (d == degree) {
            auto it = var_ids.find({pidx(i, j), m});
            return Aff::var(it->second);
        }
        return Aff::invalid();
    }

    // [d_a gamma^i_j]_nu
    Aff dcoeff(int i, int j, int a, const MultiIndex& nu) const {
        MultiIndex up = nu;
        up[a] += 1;
        return coeff(i, j, up) * Scalar(Rat(static_cast<long>(up[a])));
    }

    // [gamma^i_k gamma^k_j]_nu
    Aff conv(int i, int k, int j, const MultiIndex& nu) const {
        Aff acc;
        for (int d1 = 0; d1 <= nu.degree(); ++d1)
            for (const auto& sigma : monomials_of_degree(n, d1)) {
                MultiIndex tau;
                if (!nu.minus(sigma, tau)) continue;
                acc += coeff(i, k, sigma).times(coeff(k, j, tau));
                if (!acc.ok) return acc;
            }
        return acc;
    }

    // w * aff with exact-zero weights short-circuiting before the validity
    // flag can poison the sum (the zero weights are what make the coalescent
    // equations close at the current degree)
    static Aff scaled(const Scalar& w, const Aff& a) {
        if (w.is_zero()) return Aff{};
        return a * w;
    }

    // [u^a f]_nu for a coefficient functional f given at shifted indices:
    // u^a = u0^a + ubar^a
    Aff weighted(int a, const std::function<Aff(const MultiIndex&)>& f, const MultiIndex& nu) const {
        Aff acc = scaled(u0[static_cast<size_t>(a)], f(nu));
        MultiIndex down;
        if (nu.minus(MultiIndex::unit(n, a), down)) acc += f(down);
        return acc;
    }

    // [(u^a - u^b) f]_nu
    Aff diff_weighted(int a, int b, const std::function<Aff(const MultiIndex&)>& f,
                      const MultiIndex& nu) const {
        Aff acc = scaled(u0[static_cast<size_t>(a)] - u0[static_cast<size_t>(b)], f(nu));
        MultiIndex down;
        if (nu.minus(MultiIndex::unit(n, a), down)) acc += f(down);
        if (nu.minus(MultiIndex::unit(n, b), down)) acc += f(down) * Scalar(-1);
        return acc;
    }
};

}  // namespace

std::optional<DEJet> de_oracle(const std::vector<Scalar>& u0, const ScalarMatrix& gamma0,
                               const std::vector<Scalar>& deltas, int order) {
    int n = static_cast<int>(u0.size());
    OracleState st{n, 0, u0, deltas, {}, {}};
    st.known.assign(static_cast<size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !gamma0.at(i, j).is_zero()) st.known[static_cast<size_t>(st.pidx(i, j))][MultiIndex(n)] = gamma0.at(i, j);

    for (int d = 1; d <= order; ++d) {
        st.degree = d;
        st.var_ids.clear();
        int next_id = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (const auto& m : monomials_of_degree(n, d)) st.var_ids[{st.pidx(i, j), m}] = next_id++;
            }

        LinearSystem sys;
        sys.ncols = next_id;
        auto add_equation = [&](const Aff& a) -> bool {
            if (!a.ok) return true;  // references untracked degrees: defer
            if (a.lin.empty()) return a.c0.is_zero();  // pure consistency
            std::vector<std::pair<int, Scalar>> ent(a.lin.begin(), a.lin.end());
            sys.add_row(std::move(ent), -a.c0);
            return true;
        };

        bool consistent = true;
        for (int i = 0; i < n && consistent; ++i)
            for (int j = 0; j < n && consistent; ++j) {
                if (i == j) continue;
                Scalar dd = deltas[static_cast<size_t>(j)] - deltas[static_cast<size_t>(i)] - Scalar(1);
                for (int nu_deg = 0; nu_deg <= d && consistent; ++nu_deg)
                    for (const auto& nu : monomials_of_degree(n, nu_deg)) {
                        // (DE1)
                        for (int k = 0; k < n; ++k) {
                            if (k == i || k == j) continue;
                            Aff r = st.dcoeff(i, j, k, nu);
                            r += st.conv(i, k, j, nu) * Scalar(-1);
                            if (!add_equation(r)) consistent = false;
                        }
                        // (DE2)
                        {
                            Aff r;
                            for (int k = 0; k < n; ++k) r += st.dcoeff(i, j, k, nu);
                            if (!add_equation(r)) consistent = false;
                        }
                        // (DE3)
                        {
                            Aff r;
                            for (int k = 0; k < n; ++k)
                                r += st.weighted(
                                    k, [&](const MultiIndex& x) { return st.dcoeff(i, j, k, x); }, nu);
                            r += st.coeff(i, j, nu) * (-dd);
                            if (!add_equation(r)) consistent = false;
                        }
                        // first mixed identity: (u^j - u^i) d_i g - sum_k (u^k - u^j) g g + dd g = 0
                        {
                            auto di = [&](const MultiIndex& x) { return st.dcoeff(i, j, i, x); };
                            Aff r = st.diff_weighted(j, i, di, nu);
                            for (int k = 0; k < n; ++k) {
                                if (k == i || k == j) continue;
                                auto pk = [&](const MultiIndex& x) { return st.conv(i, k, j, x); };
                                r += st.diff_weighted(k, j, pk, nu) * Scalar(-1);
                            }
                            r += st.coeff(i, j, nu) * dd;
                            if (!add_equation(r)) consistent = false;
                        }
                        // second mixed identity
                        {
                            auto dj = [&](const MultiIndex& x) { return st.dcoeff(i, j, j, x); };
                            Aff r = st.diff_weighted(i, j, dj, nu);
                            for (int k = 0; k < n; ++k) {
                                if (k == i || k == j) continue;
                                auto pk = [&](const MultiIndex& x) { return st.conv(i, k, j, x); };
                                r += st.diff_weighted(k, i, pk, nu) * Scalar(-1);
                            }
                            r += st.coeff(i, j, nu) * dd;
                            if (!add_equation(r)) consistent = false;
                        }
                    }
            }
        if (!consistent) return std::nullopt;
        auto sol = sys.solve_unique();
        if (!sol) {
            if (std::getenv("ORIFOLD_ORACLE_DEBUG")) {
                auto any = sys.solve();
                std::fprintf(stderr, "de_oracle: degree %d, ncols %d, plain solve %s\n", d,
                             sys.ncols, any ? "ok (underdetermined)" : "inconsistent");
            }
            return std::nullopt;
        }
        for (const auto& [key, id] : st.var_ids) {
            const Scalar& v = (*sol)[static_cast<size_t>(id)];
            if (!v.is_zero()) st.known[static_cast<size_t>(key.first)][key.second] = v;
        }
    }

    DEJet jet;
    jet.n = n;
    jet.order = order;
    jet.u0 = u0;
    jet.deltas = deltas;
    jet.gamma = SeriesMatrix(n, n, n, order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FormalSeries s(n, order);
            for (const auto& [m, c] : st.known[static_cast<size_t>(st.pidx(i, j))]) s.set_coeff(m, c);
            jet.gamma.at(i, j) = s;
        }
    return jet;
}

}  // namespace orifold::testing
