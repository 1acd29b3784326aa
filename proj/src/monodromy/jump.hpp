#ifndef ORIFOLD_MONODROMY_JUMP_HPP
#define ORIFOLD_MONODROMY_JUMP_HPP

#include "monodromy/datum.hpp"

namespace orifold {

// Sample point on the jump contour Gamma(tau, r), with the branch of log
// carried explicitly by the exact argument.
struct ZPoint {
    Rat radius;      // |z| > 0
    ExactAngle arg;  // arg z, explicit branch
};

enum class ContourArc { MinusInf, PlusInf, Circle1, Circle2 };

// Jump matrix H(z; u) of the contour representation, evaluated in the float
// shadow:
//   Gamma_-inf (arg z = tau - pi):  e^{Q(z)} S1^{-1} e^{-Q(z)}
//   Gamma_+inf (arg z = tau):       e^{Q(z)} S2 e^{-Q(z)}
//   Gamma_1   (tau - pi < arg z < tau):   e^{Q(z)} C^{-1} z^{-L} z^{-D}
//   Gamma_2   (tau < arg z < tau + pi):   e^{Q(z)} S2^{-1} C^{-1} z^{-L} z^{-D}
// with Q(z) = U z + B log z. Throws when z is off the named arc.
//
// Node consistency (orientation exponents derived from the contour, with the
// + side on the left of each oriented path):
//   at T2 = r e^{i tau}:       H_{+inf} H_2 H_1^{-1} = 1     (identically),
//   at T1 = r e^{i(tau -/+ pi)}: H_1(z_-)^{-1} H_{-inf}(z_-) H_2(z_+) = 1
// where z_-/z_+ carry arguments tau - pi and tau + pi; expanding the second
// product leaves exactly C S1^{-1} e^{2 pi i B} S2^{-1} C^{-1} e^{-2 pi i L},
// so node consistency at T1 is algebraically the cyclic identity of
// admissibility condition (8).
CMatrix jump_matrix(const MonodromyDatum& m, ContourArc arc, const ZPoint& z);

}  // namespace orifold

#endif
