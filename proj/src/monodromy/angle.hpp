#ifndef ORIFOLD_MONODROMY_ANGLE_HPP
#define ORIFOLD_MONODROMY_ANGLE_HPP

#include "core/bigfloat.hpp"
#include "core/scalar.hpp"

#include <optional>
#include <vector>

namespace orifold {

// Direction tau = pi_mult * pi + offset, both exact rationals. Directions
// with offset = 0 and 4 * pi_mult integral point along one of the eight
// Gaussian-exact rays, for which every comparison below is decided exactly;
// other directions fall back to the float shadow.
struct ExactAngle {
    Rat pi_mult;
    Rat offset;

    bool is_eighth() const;          // offset 0 and 4*pi_mult integral
    int eighth_index() const;        // 0..7, direction e^{i k pi/4}
    double to_double() const;
    BigFloat radians(mpfr_prec_t prec) const;
};

// Exact planar direction (x, y) != (0, 0) with rational components; rays are
// identified up to positive rescaling.
struct RayDirection {
    Rat x, y;

    // canonical primitive representative (integer coprime components)
    RayDirection normalized() const;
    bool same_ray(const RayDirection& o) const;   // positive multiple
    double angle_double() const;
    friend bool operator==(const RayDirection& a, const RayDirection& b);
    friend bool operator<(const RayDirection& a, const RayDirection& b);  // canonical order
};

// Direction of the (i,j) Stokes ray: -sqrt(-1) (conj u^i - conj u^j).
RayDirection stokes_direction(const Scalar& ui, const Scalar& uj);

// The set S(u) of non-admissible directions, one representative ray per class.
std::vector<RayDirection> stokes_ray_set(const std::vector<Scalar>& u);

// tau outside S(u)? Exact for all Gaussian-rational u (eighth directions are
// tested by sign conditions; non-eighth rational-angle directions can never
// meet a Gaussian ray).
bool is_admissible(const ExactAngle& tau, const std::vector<Scalar>& u);

// sign of Re(e^{i tau} w): +1, 0, -1. Exact for eighth directions; otherwise
// evaluated in the float shadow at `bits` precision (sets *exact to false).
int sign_re_eitau(const ExactAngle& tau, const Scalar& w, mpfr_prec_t bits, bool* exact = nullptr);

struct LexOrder {
    std::vector<int> perm;  // perm[k] = original index in position k
    bool degenerate = false;  // ties between distinct points (flagged, broken by index)
};

// Lexicographic order w.r.t. tau: positions sorted by descending
// Re(e^{i tau} u), the unique triangular order making S1 upper and S2 lower
// under the admissible-datum support conditions.
LexOrder lexicographic_order(const std::vector<Scalar>& u, const ExactAngle& tau,
                             mpfr_prec_t bits = 128);

// Coalescence partition of u: sorted blocks of indices with equal value.
std::vector<std::vector<int>> coalescence_blocks(const std::vector<Scalar>& u);

}  // namespace orifold

#endif
