#pragma once

#include <numbers>

namespace curvedcp::units {

// CODATA 2018, pinned so outputs are bit-reproducible.
inline constexpr double hbar_c_ev_nm = 197.3269804;
inline constexpr double k_b_ev_per_k = 8.617333262e-5;
inline constexpr double ev_to_joule = 1.602176634e-19;

/// Thermal wavelength lambda_T = hbar c / (2 pi k_B T) in nm.
inline double lambda_t_nm(double temperature_k) {
  return hbar_c_ev_nm / (2.0 * std::numbers::pi * k_b_ev_per_k * temperature_k);
}

/// tau = d / lambda_T.
inline double tau_from(double d_nm, double temperature_k) {
  return d_nm / lambda_t_nm(temperature_k);
}

/// Converts the dimensionless potential U * pi d^4 / (hbar c) (with alpha in
/// units of d^3) to electron volts, given the separation in nm.
inline double u_hat_to_ev(double u_hat, double d_nm) {
  return u_hat * hbar_c_ev_nm / (std::numbers::pi * d_nm);
}

}  // namespace curvedcp::units
