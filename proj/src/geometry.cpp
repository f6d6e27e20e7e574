#include "curvedcp/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace curvedcp {

namespace {

void check_distance(double d) {
  if (!(d > 0.0))
    throw std::invalid_argument("geometry: separation d must be positive");
}

LocalGeometry from_polynomial(const PolynomialProfile& p, double d) {
  auto c = [&](int m, int n) {
    auto it = p.coeffs.find({m, n});
    return it == p.coeffs.end() ? 0.0 : it->second;
  };
  for (const auto& [mn, v] : p.coeffs) {
    if (mn.first < 0 || mn.second < 0 || mn.first + mn.second > 4)
      throw std::invalid_argument(
          "polynomial profile: total degree must be between 0 and 4");
    if (!std::isfinite(v))
      throw std::invalid_argument("polynomial profile: non-finite coefficient");
  }
  if (c(0, 0) != 0.0 || c(1, 0) != 0.0 || c(0, 1) != 0.0)
    throw std::invalid_argument(
        "polynomial profile: constant and linear coefficients must vanish at "
        "the foot point (H = d, grad H = 0)");

  LocalGeometry g;
  g.d = d;
  g.hessian = {{{2.0 * c(2, 0), c(1, 1)}, {c(1, 1), 2.0 * c(0, 2)}}};
  // d_x lap H = H_xxx + H_xyy, d_y lap H = H_yyy + H_xxy at the origin
  g.grad_lap = {6.0 * c(3, 0) + 2.0 * c(1, 2), 6.0 * c(0, 3) + 2.0 * c(2, 1)};
  g.frame = GeomFrame::general;
  return g;
}

LocalGeometry from_grid(const HeightGridProfile& grid, double d) {
  if (!(grid.spacing > 0.0))
    throw std::invalid_argument("height grid: spacing must be positive");
  const size_t rows = grid.values.size();
  if (rows < 7 || rows % 2 == 0)
    throw std::invalid_argument(
        "height grid: need an odd number of rows, at least 7, around the "
        "foot point (stencil error)");
  const size_t cols = grid.values.front().size();
  if (cols < 7 || cols % 2 == 0)
    throw std::invalid_argument(
        "height grid: need an odd number of columns, at least 7, around the "
        "foot point (stencil error)");
  for (const auto& row : grid.values) {
    if (row.size() != cols)
      throw std::invalid_argument("height grid: ragged rows");
    for (double v : row)
      if (!std::isfinite(v))
        throw std::invalid_argument("height grid: non-finite height value");
  }

  const int iy = static_cast<int>(rows / 2);
  const int ix = static_cast<int>(cols / 2);
  const double h = grid.spacing;
  auto f = [&](int dx, int dy) { return grid.values[iy + dy][ix + dx]; };

  // 4th-order second derivatives
  const double fxx4 = (-f(-2, 0) + 16 * f(-1, 0) - 30 * f(0, 0) +
                       16 * f(1, 0) - f(2, 0)) /
                      (12 * h * h);
  const double fyy4 = (-f(0, -2) + 16 * f(0, -1) - 30 * f(0, 0) +
                       16 * f(0, 1) - f(0, 2)) /
                      (12 * h * h);
  // mixed derivative from the 4th-order first-derivative stencil applied twice
  const double w[5] = {1.0, -8.0, 0.0, 8.0, -1.0};
  double fxy4 = 0.0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) fxy4 += w[a + 2] * w[b + 2] * f(a, b);
  fxy4 /= 144.0 * h * h;

  // 2nd-order companions, reused as error indicators
  const double fxx2 = (f(-1, 0) - 2 * f(0, 0) + f(1, 0)) / (h * h);
  const double fyy2 = (f(0, -1) - 2 * f(0, 0) + f(0, 1)) / (h * h);
  const double fxy2 =
      (f(1, 1) - f(1, -1) - f(-1, 1) + f(-1, -1)) / (4 * h * h);

  // 2nd-order third derivatives
  const double h3 = h * h * h;
  const double fxxx = (-f(-2, 0) + 2 * f(-1, 0) - 2 * f(1, 0) + f(2, 0)) /
                      (2 * h3);
  const double fyyy = (-f(0, -2) + 2 * f(0, -1) - 2 * f(0, 1) + f(0, 2)) /
                      (2 * h3);
  auto dyy_at = [&](int a) { return f(a, -1) - 2 * f(a, 0) + f(a, 1); };
  auto dxx_at = [&](int b) { return f(-1, b) - 2 * f(0, b) + f(1, b); };
  const double fxyy = (dyy_at(1) - dyy_at(-1)) / (2 * h3);
  const double fxxy = (dxx_at(1) - dxx_at(-1)) / (2 * h3);

  // 4th-order xxx/yyy (need +-3 points, available on a 7x7 grid), used only
  // to estimate the error of the 2nd-order values above
  const double fxxx4 = (f(-3, 0) - 8 * f(-2, 0) + 13 * f(-1, 0) -
                        13 * f(1, 0) + 8 * f(2, 0) - f(3, 0)) /
                       (8 * h3);
  const double fyyy4 = (f(0, -3) - 8 * f(0, -2) + 13 * f(0, -1) -
                        13 * f(0, 1) + 8 * f(0, 2) - f(0, 3)) /
                       (8 * h3);

  LocalGeometry g;
  g.d = d;
  g.hessian = {{{fxx4, fxy4}, {fxy4, fyy4}}};
  g.grad_lap = {fxxx + fxyy, fyyy + fxxy};
  g.frame = GeomFrame::general;
  g.hessian_error = std::max({std::abs(fxx4 - fxx2), std::abs(fyy4 - fyy2),
                              std::abs(fxy4 - fxy2)});
  g.grad_lap_error =
      2.0 * (std::abs(fxxx - fxxx4) + std::abs(fyyy - fyyy4));
  return g;
}

}  // namespace

LocalGeometry LocalGeometry::make_principal(double d, double inv_r1,
                                            double inv_r2,
                                            std::array<double, 2> grad_lap) {
  check_distance(d);
  LocalGeometry g;
  g.d = d;
  g.hessian = {{{inv_r1, 0.0}, {0.0, inv_r2}}};
  g.grad_lap = grad_lap;
  g.frame = GeomFrame::principal;
  g.curvature1 = inv_r1;
  g.curvature2 = inv_r2;
  return g;
}

LocalGeometry LocalGeometry::make_general(
    double d, std::array<std::array<double, 2>, 2> hess,
    std::array<double, 2> grad_lap) {
  check_distance(d);
  if (hess[0][1] != hess[1][0])
    throw std::invalid_argument("LocalGeometry: Hessian must be symmetric");
  LocalGeometry g;
  g.d = d;
  g.hessian = hess;
  g.grad_lap = grad_lap;
  g.frame = GeomFrame::general;
  return g;
}

LocalGeometry local_geometry_from_profile(const SurfaceProfile& profile,
                                          double d) {
  check_distance(d);
  return std::visit(
      [&](const auto& p) -> LocalGeometry {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PlaneProfile>) {
          LocalGeometry g;
          g.d = d;
          g.frame = GeomFrame::principal;
          return g;
        } else if constexpr (std::is_same_v<T, SphereProfile>) {
          if (!(p.radius > 0.0))
            throw std::invalid_argument("sphere profile: radius must be > 0");
          // On the axis of H = d + R - sqrt(R^2 - r^2) the Hessian is
          // isotropic and the odd third derivatives vanish.
          LocalGeometry g = LocalGeometry::make_principal(
              d, 1.0 / p.radius, 1.0 / p.radius);
          return g;
        } else if constexpr (std::is_same_v<T, CylinderProfile>) {
          if (!(p.radius > 0.0))
            throw std::invalid_argument(
                "cylinder profile: radius must be > 0");
          const double c = std::cos(p.axis_angle);
          const double s = std::sin(p.axis_angle);
          // curved direction is normal to the axis: n = (-sin, cos)
          const double k = 1.0 / p.radius;
          LocalGeometry g;
          g.d = d;
          g.hessian = {{{k * s * s, -k * s * c}, {-k * s * c, k * c * c}}};
          g.frame = GeomFrame::general;
          return g;
        } else if constexpr (std::is_same_v<T, PolynomialProfile>) {
          return from_polynomial(p, d);
        } else {
          return from_grid(p, d);
        }
      },
      profile);
}

std::pair<LocalGeometry, PolarizabilityTensor> to_principal_frame(
    const LocalGeometry& geom, const PolarizabilityTensor& alpha) {
  check_distance(geom.d);
  if (geom.frame == GeomFrame::principal) return {geom, alpha};

  const double a = geom.hessian[0][0];
  const double b = geom.hessian[0][1];
  const double c = geom.hessian[1][1];

  double theta, k1, k2;
  if (b == 0.0) {
    // Diagonal input: identity if already ordered (covers the umbilic tie),
    // quarter turn otherwise so curvature1 <= curvature2 holds.
    theta = (a <= c) ? 0.0 : std::numbers::pi / 2.0;
    k1 = std::min(a, c);
    k2 = std::max(a, c);
  } else {
    theta = 0.5 * std::atan2(2.0 * b, a - c);
    double ct = std::cos(theta), st = std::sin(theta);
    double k_along = a * ct * ct + 2.0 * b * st * ct + c * st * st;
    if (k_along > (a + c) - k_along) {
      theta += std::numbers::pi / 2.0;
      ct = std::cos(theta);
      st = std::sin(theta);
      k_along = a * ct * ct + 2.0 * b * st * ct + c * st * st;
    }
    // principal directions are lines: reduce the angle to (-pi/2, pi/2]
    if (theta > std::numbers::pi / 2.0) theta -= std::numbers::pi;
    k1 = k_along;
    k2 = (a + c) - k1;
  }

  const double ct = std::cos(theta), st = std::sin(theta);
  LocalGeometry out = geom;
  out.frame = GeomFrame::principal;
  out.curvature1 = k1;
  out.curvature2 = k2;
  out.principal_angle = theta;
  out.hessian = {{{k1, 0.0}, {0.0, k2}}};
  // grad_lap transforms as an in-plane vector: g' = R^T g
  out.grad_lap = {ct * geom.grad_lap[0] + st * geom.grad_lap[1],
                  -st * geom.grad_lap[0] + ct * geom.grad_lap[1]};

  return {out, rotate_tensor_z(alpha, theta)};
}

}  // namespace curvedcp
