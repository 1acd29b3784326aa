#ifndef ORIFOLD_ZSYSTEM_DEFORMED_HPP
#define ORIFOLD_ZSYSTEM_DEFORMED_HPP

#include "flatf/structure.hpp"

namespace orifold {

// Coefficients h_p^a of the deformed flat coordinates t~^a = sum_p h_p^a z^p,
// h_0^a = t^a, with d_g d_b h_{p+1} = c^l_{g b} d_l h_p solved by double
// formal integration (affine part normalized to zero for p >= 1... h_1 keeps
// the plain double integral of c, so h_1 = F modulo affine-linear terms).
// Returns h[p][a] for p = 0..P.
std::vector<std::vector<FormalSeries>> deformed_coordinates(const FlatFStructure& s, int P);

// Jacobian z-coefficients at t = 0: J(z) = 1 + sum_{p>=1} J_p z^p with
// (J_p)^a_b = d_b h_p^a |_0.
std::vector<ScalarMatrix> jacobian_at_origin(const std::vector<std::vector<FormalSeries>>& h);

// U_k matrices of the gauge-transformed d_z-equation at t = 0: the z^{k-1}
// coefficients (k >= 1) of J U J^{-1} - (J mu J^{-1} - mu)/z - dJ/dz J^{-1}.
std::vector<ScalarMatrix> u_matrices_at_origin(const FlatFStructure& s,
                                               const std::vector<ScalarMatrix>& jac, int P);

}  // namespace orifold

#endif
