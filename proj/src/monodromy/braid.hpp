#ifndef ORIFOLD_MONODROMY_BRAID_HPP
#define ORIFOLD_MONODROMY_BRAID_HPP

#include "monodromy/datum.hpp"

namespace orifold {

// Word in the Artin generators: signed 1-based indices, negative = inverse.
using BraidWord = std::vector<int>;
BraidWord parse_braid_word(const std::string& text);  // "b1 b2 -b1" or "1 2 -1"

// Triple (g1, g2, g3) in U_n x L_n x t over the exact field. Exact mode
// evaluates hbar = e^{2 pi i (g3_{i+1} - g3_i)} only when the gap is an
// integer (or the multiplied entry vanishes); otherwise it throws.
struct BraidTriple {
    ScalarMatrix g1, g2;
    std::vector<Scalar> g3;
};
BraidTriple braid_apply(const BraidTriple& g, const BraidWord& word);

// Float-shadow triple for transcendental g3.
struct BraidTripleF {
    CMatrix g1, g2;
    std::vector<CFloat> g3;
    static BraidTripleF from_exact(const BraidTriple& g, mpfr_prec_t bits);
};
BraidTripleF braid_apply_float(const BraidTripleF& g, const BraidWord& word, mpfr_prec_t bits);

// Center word (b1 ... b_{n-1})^n.
BraidWord center_word(int n);

// Mutation of a datum along one generator: (S1,S2,B) moves by
// the triple action with g3 = diag(B), C -> C B2^{-1}, u swaps i <-> i+1.
// Requires S1 upper and S2 lower unitriangular (lexicographic triangular
// form); refuses non-triangular input.
MonodromyDatum braid_on_datum(const MonodromyDatum& m, int generator);
MonodromyDatum braid_on_datum_word(const MonodromyDatum& m, const BraidWord& word);

// Float-shadow datum image under a braid word and under the deck action, for
// center-vs-deck comparisons with transcendental exponents.
struct FloatDatumImage {
    CMatrix s1, s2, c;
    std::vector<CFloat> b;  // diagonal of B
    std::vector<Scalar> u;
};
FloatDatumImage braid_on_datum_float(const MonodromyDatum& m, const BraidWord& word,
                                     mpfr_prec_t bits);
FloatDatumImage deck_on_datum_float(const MonodromyDatum& m, long k, mpfr_prec_t bits);

}  // namespace orifold

#endif
