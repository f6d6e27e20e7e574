#pragma once

#include <array>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "curvedcp/polarizability.hpp"

namespace curvedcp {

enum class GeomFrame { general, principal };

/// Local surface data at the point closest to the particle, for a smooth
/// height profile z = H(x, y) with H(0) = d and grad H(0) = 0.
///
/// hessian holds d_i d_j H (units 1/length) and grad_lap holds
/// d_i (laplacian H) (units 1/length^2), both at the foot point. Every
/// higher contraction the expansion needs is built from these. Curvatures
/// are stored as 1/R_i (so a flat direction is simply 0); signs follow the
/// height function, positive curvature = surface bending away from the
/// particle.
struct LocalGeometry {
  double d = 1.0;
  std::array<std::array<double, 2>, 2> hessian{};
  std::array<double, 2> grad_lap{};
  GeomFrame frame = GeomFrame::general;

  // Principal data, meaningful when frame == principal. curvature1 <= curvature2
  // when produced by to_principal_frame; directly constructed geometries may
  // order them freely (the assembly formulas are covariant).
  double curvature1 = 0.0;  // 1/R1
  double curvature2 = 0.0;  // 1/R2
  double principal_angle = 0.0;

  // Stencil error estimates for grid-derived data; zero for analytic kinds.
  double hessian_error = 0.0;
  double grad_lap_error = 0.0;

  static LocalGeometry make_principal(double d, double inv_r1, double inv_r2,
                                      std::array<double, 2> grad_lap = {0.0,
                                                                        0.0});
  static LocalGeometry make_general(double d,
                                    std::array<std::array<double, 2>, 2> hess,
                                    std::array<double, 2> grad_lap = {0.0,
                                                                      0.0});
};

struct PlaneProfile {};

struct SphereProfile {
  double radius = 1.0;  // > 0, particle on the symmetry axis
};

struct CylinderProfile {
  double radius = 1.0;      // > 0
  double axis_angle = 0.0;  // in-plane angle of the cylinder axis, radians
};

/// H(x, y) = d + sum c_{mn} x^m y^n with total degree m+n <= 4. The foot-point
/// condition requires vanishing constant and linear coefficients.
struct PolynomialProfile {
  std::map<std::pair<int, int>, double> coeffs;
};

/// Sampled heights around the foot point, which is the central node of the
/// grid. values[row][col] with row = y index, col = x index; at least 7x7
/// and odd in both directions so the symmetric stencils fit.
struct HeightGridProfile {
  double spacing = 1.0;
  std::vector<std::vector<double>> values;
};

using SurfaceProfile = std::variant<PlaneProfile, SphereProfile,
                                    CylinderProfile, PolynomialProfile,
                                    HeightGridProfile>;

/// Local derivative data for the profile at separation d: exact derivatives
/// for the analytic kinds, central finite differences for grids (4th order
/// for the Hessian, 2nd order for the third derivatives, with error
/// estimates attached).
LocalGeometry local_geometry_from_profile(const SurfaceProfile& profile,
                                          double d);

/// Diagonalizes the Hessian and re-expresses everything in the principal
/// frame: returns the rotated geometry (curvature1 <= curvature2) together
/// with the polarizability tensor rotated by the same in-plane angle. An
/// already-ordered diagonal Hessian (including the umbilic case) maps to the
/// identity rotation.
std::pair<LocalGeometry, PolarizabilityTensor> to_principal_frame(
    const LocalGeometry& geom, const PolarizabilityTensor& alpha);

}  // namespace curvedcp
