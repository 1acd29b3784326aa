#ifndef ORIFOLD_TESTS_FIXTURES_HPP
#define ORIFOLD_TESTS_FIXTURES_HPP

#include "flatf/semisimple.hpp"
#include "frame/dejet.hpp"

#include <cstdint>
#include <vector>

namespace orifold::testing {

// small deterministic PRNG so every test run sees the same inputs
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rat rational(long maxnum, long maxden) {
        long d = range(1, maxden);
        return Rat(range(-maxnum, maxnum), d);
    }
    Scalar scalar(long maxnum, long maxden, bool complex_part = false) {
        if (!complex_part) return Scalar(rational(maxnum, maxden));
        return Scalar(rational(maxnum, maxden), rational(maxnum, maxden));
    }
};

// exp jet e_N(x) = sum_{k<=N} x^k / k! in variable `var` of `nvars`
inline FormalSeries exp_jet(int var, int nvars, int order) {
    FormalSeries s(nvars, order);
    Rat fact(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact = fact * Rat(k);
        MultiIndex m(nvars);
        m[var] = static_cast<uint32_t>(k);
        s.set_coeff(m, Scalar(Rat(1) / fact));
    }
    return s;
}

// the QH(P^1)-type structure: F1 = (t1)^2/2 + e_N(t2), F2 = t1 t2,
// e = d1, E = t1 d1 + 2 d2, lambda as given
inline FlatFStructure qh_p1(int order, Scalar lambda = Scalar()) {
    FormalSeries f1(2, order);
    {
        MultiIndex m(2);
        m[0] = 2;
        f1.set_coeff(m, Scalar(Rat(1, 2)));
    }
    f1 += exp_jet(1, 2, order);
    FormalSeries f2(2, order);
    {
        MultiIndex m(2);
        m[0] = 1;
        m[1] = 1;
        f2.set_coeff(m, Scalar(1));
    }
    EulerData e;
    e.q = {Scalar(0), Scalar(1)};
    e.r = {Scalar(0), Scalar(2)};
    return FlatFStructure({f1, f2}, {Scalar(1), Scalar(0)}, e, lambda);
}

// one-dimensional structure F = t^2/2
inline FlatFStructure one_dim(int order) {
    FormalSeries f(1, order);
    MultiIndex m(1);
    m[0] = 2;
    f.set_coeff(m, Scalar(Rat(1, 2)));
    EulerData e;
    e.q = {Scalar(0)};
    e.r = {Scalar(0)};
    return FlatFStructure({f}, {Scalar(1)}, e);
}

// Independent undetermined-coefficients oracle for the Darboux-Egoroff jet:
// solves the five families (DE1, DE2, DE3 and both mixed identities)
// degree by degree as a sparse exact
// linear system in the unknown coefficients, never reusing the production
// recursion. Returns nullopt when the system is inconsistent or undetermined.
std::optional<DEJet> de_oracle(const std::vector<Scalar>& u0, const ScalarMatrix& gamma0,
                               const std::vector<Scalar>& deltas, int order);

// Random small-integer seed adjusted on coalescent pairs so that the order-
// zero compatibility constraint of the five-equation system holds (entries on
// coalescent pairs are solved for, the rest stay free).
inline ScalarMatrix compatible_seed(Rng& rng, const std::vector<Scalar>& u0,
                                    const std::vector<Scalar>& deltas) {
    int n = static_cast<int>(u0.size());
    ScalarMatrix g0(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g0.at(i, j) = Scalar(rng.range(-2, 2));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || u0[static_cast<size_t>(i)] != u0[static_cast<size_t>(j)]) continue;
            Scalar acc;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                acc += (u0[static_cast<size_t>(k)] - u0[static_cast<size_t>(j)]) * g0.at(i, k) *
                       g0.at(k, j);
            }
            Scalar dd = deltas[static_cast<size_t>(j)] - deltas[static_cast<size_t>(i)] - Scalar(1);
            g0.at(i, j) = acc / dd;
        }
    return g0;
}

}  // namespace orifold::testing

#endif
