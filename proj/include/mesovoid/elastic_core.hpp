#pragma once

#include "mesovoid/types.hpp"

#include <array>

// Voigt-type vectorisation of isotropic elasticity.
//
// Symmetric 3x3 tensors are stored as 6-vectors in the fixed component order
//   (t11, t22, t33, sqrt2*t12, sqrt2*t13, sqrt2*t23),
// i.e. coordinates with respect to the orthonormal tensor basis returned by
// strain_basis().  With this scaling the Euclidean inner product of two
// 6-vectors equals the Frobenius product of the tensors, so no separate
// weight matrix appears in energy expressions.

namespace mesovoid {

// Orthonormal basis V_1..V_6 of symmetric 3x3 matrices (unit diagonal dyads
// followed by sqrt2-normalised off-diagonal symmetrisers).
const std::array<Mat3, 6>& strain_basis();

// 3x6 matrix Xi(x) with column alpha equal to V_alpha * x.  Substituting
// x -> grad turns it into the first-order operator whose transpose maps a
// displacement to its strain 6-vector.
Mat36 big_xi(const Vec3& x);

// Companion 3x6 matrix xi(x): identity in the first three columns, scaled
// infinitesimal-rotation entries in the last three.  Its six columns span
// the rigid displacements, and Xi(grad)^T annihilates it.
Mat36 small_xi(const Vec3& x);

// 6x6 stiffness A = blockdiag(lambda*ones + 2mu*I, 2mu*I); maps strain
// 6-vectors to stress 6-vectors.
Mat6 stiffness_matrix(const LameParams& p);

// Strain 6-vector of a displacement gradient (symmetrises grad_u).
Vec6 strain_vector(const Mat3& grad_u);

// Inverse of the vectorisation: symmetric tensor with components e.
Mat3 strain_to_tensor(const Vec6& e);

// Stress 6-vector A * strain.
Vec6 stress_vector(const Vec6& strain, const LameParams& p);

// Surface traction Xi(n) * A * strain_vector(grad_u) for a unit normal n.
// Throws InputError if |n| deviates from 1 by more than 1e-8.
Vec3 traction(const Mat3& grad_u, const Vec3& n, const LameParams& p);

// Skew matrix J(x) with J(x) v = x cross v; columns span the rotational
// rigid motions about the origin.
Mat3 rigid_motion_matrix(const Vec3& x);

// Elastic energy density: squared Euclidean norm of the strain 6-vector,
// which equals the Frobenius norm squared of the strain tensor.
double energy_density(const Vec6& strain);

} // namespace mesovoid
