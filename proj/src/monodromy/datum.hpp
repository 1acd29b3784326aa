#ifndef ORIFOLD_MONODROMY_DATUM_HPP
#define ORIFOLD_MONODROMY_DATUM_HPP

#include "monodromy/angle.hpp"
#include "series/smatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orifold {

enum class NumericMode { Exact, Float };

// The 6-tuple (B, D, L, S1, S2, C) with its base configuration u and
// direction tau. Matrix entries stay exact; transcendental checks run either
// in exact mode (integer exponents only) or through the float shadow.
struct MonodromyDatum {
    int n = 0;
    std::vector<Scalar> u;
    ExactAngle tau;
    ScalarMatrix B, D, L, S1, S2, C;
    NumericMode mode = NumericMode::Exact;
    mpfr_prec_t float_bits = 128;
    double tol = 1e-12;
    // Frobenius flags: when eta is present the datum claims the Frobenius
    // constraints (Lambda = 0, S1^{-1} = S2^T, and the metric identity).
    std::optional<ScalarMatrix> eta;

    // mu^lambda recovered from the z = 0 block: mu = -D - diag(L).
    std::vector<Scalar> mu() const;
    // R = off-diagonal part of L, the Levelt exponent.
    ScalarMatrix r_matrix() const;
};

struct ConditionResult {
    std::string name;
    bool pass = true;
    bool exact = true;  // decided exactly (vs float shadow)
    std::string witness;
};

struct ValidationReport {
    std::vector<ConditionResult> conditions;
    bool pass() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
};

// The nine admissibility conditions, reported one by one.
ValidationReport validate_datum(const MonodromyDatum& m);

// Frobenius-flag checks: Lambda = 0, S1^{-1} = S2^T, and the Stokes-from-
// metric identity S1 = C^{-1} e^{-pi i R} e^{-pi i mu} eta^{-1} (C^{-1})^T
// (float shadow unless R = 0 and the exponents are exactly representable).
ValidationReport validate_frobenius_flags(const MonodromyDatum& m);

// e^{2 pi i theta} in exact mode: 1 for integer theta, error otherwise.
Scalar exact_exp2pii(const Scalar& theta);
// True iff e^{2 pi i M} is exactly the identity (integer diagonal matrix).
bool exp2pii_is_identity(const ScalarMatrix& m);

CMatrix to_cmatrix(const ScalarMatrix& m, mpfr_prec_t bits);
// e^{2 pi i M} in the float shadow.
CMatrix exp2pii_float(const ScalarMatrix& m, mpfr_prec_t bits);

int moduli_dimension(int n, const std::string& kind);  // "flatF" | "frobenius"

}  // namespace orifold

#endif
