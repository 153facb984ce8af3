#pragma once

#include "mesovoid/types.hpp"

#include <functional>

// Finite-difference probes used as implementation-independent oracles.
// They only see a field through a point-evaluation callback, so they can be
// applied to every displacement field in the library uniformly.

namespace mesovoid {

using VectorField = std::function<Vec3(const Vec3&)>;

// Central-difference gradient, column k = d(field)/dx_k, O(h^2) accurate.
Mat3 fd_gradient(const VectorField& field, const Vec3& x, double h);

// One Richardson step over fd_gradient (h and h/2), O(h^4) accurate.
Mat3 richardson_gradient(const VectorField& field, const Vec3& x, double h);

// Residual of the homogeneous elastostatic operator,
//   mu * laplacian(u) + (lambda + mu) * grad(div u),
// evaluated with second-order central second differences.  Vanishes (up to
// truncation noise) on every equilibrium displacement field.
Vec3 lame_residual(const VectorField& field, const Vec3& x, const LameParams& p,
                   double h);

// Traction of a sampled field: finite-difference gradient followed by the
// exact constitutive contraction.
Vec3 fd_traction(const VectorField& field, const Vec3& x, const Vec3& n,
                 const LameParams& p, double h);

} // namespace mesovoid
