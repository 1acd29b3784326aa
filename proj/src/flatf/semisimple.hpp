#ifndef ORIFOLD_FLATF_SEMISIMPLE_HPP
#define ORIFOLD_FLATF_SEMISIMPLE_HPP

#include "flatf/structure.hpp"

namespace orifold {

// Idempotent frame pi_1..pi_n of a structure that is semisimple at the
// origin: pi[i] holds the flat-frame components of pi_i as t-series.
struct IdempotentFrame {
    std::vector<std::vector<FormalSeries>> pi;
    std::vector<Scalar> splitting_element;  // v with v o_0 of simple spectrum
};

// Throws std::domain_error("not semisimple...") when the origin algebra has
// nilpotents or no splitting element with Q(i) eigenvalues is found among the
// bounded candidate set.
IdempotentFrame idempotents(const FlatFStructure& s);

// Canonical coordinates u^i(t) paired with the idempotent frame order.
// With Euler data, u^i are the eigenvalue series of E o on pi_i; without,
// they are normalized by u^i(0) = 0 and obtained by integrating the dual
// coframe of (pi_i).
std::vector<FormalSeries> canonical_coordinates(const FlatFStructure& s,
                                                const IdempotentFrame& frame);

struct SpectrumData {
    std::vector<Scalar> mu_lambda;                 // q_a - lambda
    std::vector<std::pair<int, int>> resonance_pairs;  // (a,b), q_a - q_b in Z_{<0}
};
SpectrumData spectrum(const FlatFStructure& s);

// Multiplication by a vector v in the origin algebra: matrix of x -> v o_0 x.
ScalarMatrix multiplication_operator_at_origin(const FlatFStructure& s,
                                               const std::vector<Scalar>& v);

// Product of two vector fields (component series) via c(t).
std::vector<FormalSeries> circ(const FlatFStructure& s, const std::vector<FormalSeries>& x,
                               const std::vector<FormalSeries>& y);

}  // namespace orifold

#endif
