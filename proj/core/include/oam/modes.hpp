#pragma once

#include <complex>

namespace oam {

// Azimuthal winding number l (any sign) and radial index p >= 0 of a
// Laguerre-Gaussian mode.
struct ModeIndex {
  int l = 0;
  int p = 0;
};

// Gaussian beam frame: waist radius, wavenumber and the propagation
// distance z from the waist plane.
struct BeamGeometry {
  double waist_w0 = 1.0;
  double wavenumber_k = 1.0;
  double z = 0.0;

  double rayleigh_range() const;   // z_R = k w0^2 / 2
  double spot_size() const;        // w(z) = w0 sqrt(1 + (z/z_R)^2)
  double gouy_phase() const;       // atan(z / z_R)
  // 1 / R(z) = z / (z^2 + z_R^2); finite everywhere, 0 at the waist.
  double inverse_curvature_radius() const;

  // Throws std::domain_error unless waist_w0 > 0, wavenumber_k > 0 and
  // z is finite.
  void validate() const;
};

// Normalization constant sqrt(2 p! / (pi (|l| + p)!)).
double lg_norm_constant(ModeIndex mode);

// Signed radial profile of the waist-plane mode in the scaled radius
// u = rho / w0, with the leading 1/w0 removed:
//   N (sqrt(2) u)^{|l|} L_p^{|l|}(2 u^2) exp(-u^2).
// The full waist field is (1/w0) * lg_radial_waist(mode, u) * e^{-i l phi}.
double lg_radial_waist(ModeIndex mode, double u);

// Laguerre-Gaussian field at the waist plane (z = 0).
// Throws std::domain_error on p < 0, w0 <= 0 or non-finite rho/phi.
std::complex<double> lg_field_waist(ModeIndex mode, double waist_w0,
                                    double rho, double phi);

// Laguerre-Gaussian field at arbitrary z, including curvature phase
// exp(-i k rho^2 / (2 R)) and Gouy phase exp(-i (2p + |l| + 1) psi).
// Reduces exactly to lg_field_waist at z = 0.
std::complex<double> lg_field(ModeIndex mode, const BeamGeometry& geometry,
                              double rho, double phi);

} // namespace oam
