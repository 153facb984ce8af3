#pragma once

#include "mesovoid/quadrature.hpp"
#include "mesovoid/types.hpp"

// Closed-form model fields of a single traction-free spherical cavity in an
// unbounded medium: the 6x6 dipole (polarisation) matrix and the 3x6 matrix
// field whose columns are the cavity's boundary-layer responses to the six
// unit strain states.  Columns of the field decay like |x - center|^-2, kill
// the traction a uniform strain exerts on the cavity boundary, and carry no
// net force or moment.

namespace mesovoid {

struct Void {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
};

// Symmetric negative definite; scales with radius^3.
struct DipoleMatrix {
  Mat6 m;
};

DipoleMatrix dipole_matrix(double radius, const LameParams& p);

// Exterior response field.  Throws GateError when x lies inside or on the
// cavity, where the exterior representation is not part of the model.
Mat36 dipole_field(const Vec3& x, const Void& v, const LameParams& p);

namespace detail {
// Same closed form without the exterior-domain guard; finite everywhere
// except the centre.  Used by boundary quadrature and finite differences
// that have to straddle the interface.
Mat36 dipole_field_unguarded(const Vec3& x, const Void& v, const LameParams& p);
} // namespace detail

// Surface-quadrature check that the field's tractions integrate to zero
// force and moment over the cavity boundary.  Tractions are computed from
// finite-difference gradients (step fd_step_scale * radius) so the check is
// independent of any closed-form derivative.
struct OrthogonalityReport {
  double max_force;  // sup-norm over the 3x6 force integrals
  double max_moment; // sup-norm over the 3x6 moment integrals
};
OrthogonalityReport check_orthogonality(const Void& v, const LameParams& p,
                                        int n_polar = 16, int n_azimuth = 32,
                                        double fd_step_scale = 1e-4);

} // namespace mesovoid
