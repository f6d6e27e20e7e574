#pragma once

#include <array>
#include <cmath>

namespace curvedcp {

/// Static electric dipole polarizability tensor alpha^0_{mu nu} in volume
/// units. Indices 0,1,2 = x,y,z. The physics requires a symmetric tensor;
/// consumers validate with is_symmetric() before contracting.
struct PolarizabilityTensor {
  std::array<std::array<double, 3>, 3> m{};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  double perp() const { return m[0][0] + m[1][1]; }
  double zz() const { return m[2][2]; }
  double xx_minus_yy() const { return m[0][0] - m[1][1]; }

  bool is_symmetric(double rel_tol = 1e-12) const {
    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(m[i][j]));
    if (scale == 0.0) return true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (std::abs(m[i][j] - m[j][i]) > rel_tol * scale) return false;
    return true;
  }

  static PolarizabilityTensor isotropic(double alpha) {
    PolarizabilityTensor t;
    t.m[0][0] = t.m[1][1] = t.m[2][2] = alpha;
    return t;
  }

  static PolarizabilityTensor diagonal(double axx, double ayy, double azz) {
    PolarizabilityTensor t;
    t.m[0][0] = axx;
    t.m[1][1] = ayy;
    t.m[2][2] = azz;
    return t;
  }

  PolarizabilityTensor scaled(double s) const {
    PolarizabilityTensor t = *this;
    for (auto& row : t.m)
      for (auto& v : row) v *= s;
    return t;
  }
};

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// alpha' = R^T alpha R for the given 3x3 rotation matrix (columns = new
/// basis vectors in old coordinates), i.e. the tensor expressed in the
/// rotated frame.
inline PolarizabilityTensor rotate_tensor(const PolarizabilityTensor& a,
                                          const Mat3& r) {
  PolarizabilityTensor out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s += r[k][i] * a.m[k][l] * r[l][j];
      out.m[i][j] = s;
    }
  return out;
}

inline Mat3 rot_z(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

inline Mat3 rot_y(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return {{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

/// Rotation about z by angle (radians) applied as a passive frame change.
inline PolarizabilityTensor rotate_tensor_z(const PolarizabilityTensor& a,
                                            double angle) {
  return rotate_tensor(a, rot_z(angle));
}

/// Active rotation of a body-frame tensor into the lab frame,
/// alpha_lab = R alpha_body R^T, with R = Rz(z1) Ry(y) Rz(z2) (ZYZ Euler).
struct Rotation {
  double z1 = 0.0;
  double y = 0.0;
  double z2 = 0.0;

  static Rotation in_plane(double angle) { return {angle, 0.0, 0.0}; }
};

inline Mat3 rotation_matrix(const Rotation& rot) {
  return mat_mul(mat_mul(rot_z(rot.z1), rot_y(rot.y)), rot_z(rot.z2));
}

inline PolarizabilityTensor orient(const PolarizabilityTensor& body,
                                   const Rotation& rot) {
  // active rotation: alpha_lab = R alpha R^T = rotate_tensor with R^T
  const Mat3 r = rotation_matrix(rot);
  Mat3 rt;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rt[i][j] = r[j][i];
  return rotate_tensor(body, rt);
}

}  // namespace curvedcp
