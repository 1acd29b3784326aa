#include "monodromy/actions.hpp"

#include <stdexcept>

namespace orifold {

NormalizationAction NormalizationAction::lambda_shift(const Scalar& d) {
    NormalizationAction a;
    a.kind = Kind::LambdaShift;
    a.lambda_delta = d;
    return a;
}
NormalizationAction NormalizationAction::deck(long k) {
    NormalizationAction a;
    a.kind = Kind::Deck;
    a.deck_k = k;
    return a;
}
NormalizationAction NormalizationAction::parabolic(const ScalarMatrix& m) {
    NormalizationAction a;
    a.kind = Kind::Parabolic;
    a.parabolic_a = m;
    return a;
}
NormalizationAction NormalizationAction::torus_action(const std::vector<Scalar>& h) {
    NormalizationAction a;
    a.kind = Kind::Torus;
    a.torus = h;
    return a;
}
NormalizationAction NormalizationAction::permutation(const std::vector<int>& sigma) {
    NormalizationAction a;
    a.kind = Kind::Permutation;
    a.perm = sigma;
    return a;
}

ScalarMatrix permutation_matrix(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    ScalarMatrix p(n, n);
    // P_{ij} = delta_{sigma(i) j}
    for (int i = 0; i < n; ++i) p.at(i, sigma[static_cast<size_t>(i)]) = Scalar(1);
    return p;
}

MonodromyDatum normalization_action(const MonodromyDatum& m, const NormalizationAction& act) {
    MonodromyDatum out = m;
    int n = m.n;
    switch (act.kind) {
        case NormalizationAction::Kind::LambdaShift: {
            // B -> B + (lambda' - lambda) 1; the z = 0 block re-splits
            // mu' = mu - (lambda' - lambda).
            for (int i = 0; i < n; ++i) out.B.at(i, i) += act.lambda_delta;
            std::vector<Scalar> mu = m.mu();
            ScalarMatrix r = m.r_matrix();
            for (int i = 0; i < n; ++i) {
                Scalar mi = mu[static_cast<size_t>(i)] - act.lambda_delta;
                Rat dflr = mi.re().floor();
                out.D.at(i, i) = Scalar(-dflr);
                // L = R - S: diagonal of L is -(mu' - floor(Re mu'))
                out.L.at(i, i) = -(mi - Scalar(dflr));
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) out.L.at(i, j) = r.at(i, j);
            break;
        }
        case NormalizationAction::Kind::Deck: {
            // S_i -> e^{-2 pi i k B} S_i e^{2 pi i k B}; C -> M0^{-k} C e^{2 pi i k B}
            long k = act.deck_k;
            ScalarMatrix kb = Scalar(k) * m.B;
            if (m.mode == NumericMode::Exact) {
                if (!exp2pii_is_identity(kb) || !exp2pii_is_identity(Scalar(k) * m.L))
                    throw std::domain_error(
                        "deck action: exponential not exactly representable in exact mode");
                // everything conjugates trivially
                return out;
            }
            throw std::domain_error(
                "deck action on exact data requires integer exponents; evaluate through the float "
                "shadow for transcendental cases");
        }
        case NormalizationAction::Kind::Parabolic: {
            const ScalarMatrix& a = act.parabolic_a;
            std::vector<Scalar> mu = m.mu();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Scalar e = a.at(i, j) - (i == j ? Scalar(1) : Scalar());
                    if (e.is_zero()) continue;
                    Scalar gap = mu[static_cast<size_t>(i)] - mu[static_cast<size_t>(j)];
                    if (!(gap.is_integer() && gap.re().sign() < 0))
                        throw std::domain_error(
                            "parabolic action: matrix not in the mu-parabolic group C(-mu*)");
                }
            ScalarMatrix ainv = a.inverse();
            out.C = ainv * m.C;
            out.L = ainv * m.L * a;
            break;
        }
        case NormalizationAction::Kind::Torus: {
            ScalarMatrix h = ScalarMatrix::diagonal(act.torus);
            for (const auto& x : act.torus)
                if (x.is_zero()) throw std::domain_error("torus action: zero entry");
            ScalarMatrix hinv = h.inverse();
            out.S1 = h * m.S1 * hinv;
            out.S2 = h * m.S2 * hinv;
            out.C = m.C * hinv;
            break;
        }
        case NormalizationAction::Kind::Permutation: {
            ScalarMatrix p = permutation_matrix(act.perm);
            ScalarMatrix pinv = p.inverse();
            out.S1 = p * m.S1 * pinv;
            out.S2 = p * m.S2 * pinv;
            out.B = p * m.B * pinv;
            out.C = m.C * pinv;
            for (int i = 0; i < n; ++i)
                out.u[static_cast<size_t>(i)] =
                    m.u[static_cast<size_t>(act.perm[static_cast<size_t>(i)])];
            break;
        }
    }
    return out;
}

}  // namespace orifold
