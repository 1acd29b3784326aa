#ifndef ORIFOLD_MONODROMY_ACTIONS_HPP
#define ORIFOLD_MONODROMY_ACTIONS_HPP

#include "monodromy/datum.hpp"

namespace orifold {

// The five normalization-group actions on a datum. Exact mode demands that
// every exponential e^{2 pi i theta} involved has integer theta; otherwise
// the action throws and the caller should work through the float shadow.
struct NormalizationAction {
    enum class Kind { LambdaShift, Deck, Parabolic, Torus, Permutation } kind;
    Scalar lambda_delta;        // LambdaShift: lambda' - lambda
    long deck_k = 0;            // Deck
    ScalarMatrix parabolic_a;   // Parabolic: A in C(-mu*)
    std::vector<Scalar> torus;  // Torus: diagonal of h
    std::vector<int> perm;      // Permutation: sigma, image indices

    static NormalizationAction lambda_shift(const Scalar& d);
    static NormalizationAction deck(long k);
    static NormalizationAction parabolic(const ScalarMatrix& a);
    static NormalizationAction torus_action(const std::vector<Scalar>& h);
    static NormalizationAction permutation(const std::vector<int>& sigma);
};

MonodromyDatum normalization_action(const MonodromyDatum& m, const NormalizationAction& act);

ScalarMatrix permutation_matrix(const std::vector<int>& sigma);

}  // namespace orifold

#endif
