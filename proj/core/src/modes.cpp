#include "oam/modes.hpp"

#include <cmath>
#include <stdexcept>

#include "oam/specfun.hpp"

namespace oam {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_mode(ModeIndex mode) {
  if (mode.p < 0) {
    throw std::domain_error("ModeIndex: radial index p must be >= 0");
  }
}

void require_point(double rho, double phi) {
  if (!std::isfinite(rho) || rho < 0.0) {
    throw std::domain_error("mode field: rho must be finite and >= 0");
  }
  if (!std::isfinite(phi)) {
    throw std::domain_error("mode field: phi must be finite");
  }
}

} // namespace

double BeamGeometry::rayleigh_range() const {
  return wavenumber_k * waist_w0 * waist_w0 / 2.0;
}

double BeamGeometry::spot_size() const {
  const double ratio = z / rayleigh_range();
  return waist_w0 * std::sqrt(1.0 + ratio * ratio);
}

double BeamGeometry::gouy_phase() const { return std::atan(z / rayleigh_range()); }

double BeamGeometry::inverse_curvature_radius() const {
  const double z_r = rayleigh_range();
  return z / (z * z + z_r * z_r);
}

void BeamGeometry::validate() const {
  if (!(waist_w0 > 0.0) || !std::isfinite(waist_w0)) {
    throw std::domain_error("BeamGeometry: waist_w0 must be positive");
  }
  if (!(wavenumber_k > 0.0) || !std::isfinite(wavenumber_k)) {
    throw std::domain_error("BeamGeometry: wavenumber_k must be positive");
  }
  if (!std::isfinite(z)) {
    throw std::domain_error("BeamGeometry: z must be finite");
  }
}

double lg_norm_constant(ModeIndex mode) {
  require_mode(mode);
  const int abs_l = std::abs(mode.l);
  // N^2 = 2 p! / (pi (p + |l|)!) = 2 / (pi (p+1)(p+2)...(p+|l|)).
  if (abs_l + mode.p <= 30) {
    unsigned __int128 rising = 1;
    for (int j = 1; j <= abs_l; ++j) {
      rising *= static_cast<unsigned>(mode.p + j);
    }
    return std::sqrt(2.0 / (kPi * static_cast<double>(rising)));
  }
  const double log_n2 = std::log(2.0 / kPi) + log_factorial(mode.p) -
                        log_factorial(mode.p + abs_l);
  return std::exp(0.5 * log_n2);
}

double lg_radial_waist(ModeIndex mode, double u) {
  require_mode(mode);
  if (!std::isfinite(u) || u < 0.0) {
    throw std::domain_error("lg_radial_waist: u must be finite and >= 0");
  }
  const double u2 = u * u;
  // exp(-u^2) underflows past here and swamps any polynomial factor.
  if (u2 > 745.0) return 0.0;
  const int abs_l = std::abs(mode.l);
  return lg_norm_constant(mode) * std::pow(std::sqrt(2.0) * u, abs_l) *
         assoc_laguerre(mode.p, abs_l, 2.0 * u2) * std::exp(-u2);
}

std::complex<double> lg_field_waist(ModeIndex mode, double waist_w0,
                                    double rho, double phi) {
  require_mode(mode);
  if (!(waist_w0 > 0.0) || !std::isfinite(waist_w0)) {
    throw std::domain_error("lg_field_waist: waist_w0 must be positive");
  }
  require_point(rho, phi);
  const double radial = lg_radial_waist(mode, rho / waist_w0) / waist_w0;
  const double phase = -static_cast<double>(mode.l) * phi;
  return radial * std::complex<double>(std::cos(phase), std::sin(phase));
}

std::complex<double> lg_field(ModeIndex mode, const BeamGeometry& geometry,
                              double rho, double phi) {
  require_mode(mode);
  geometry.validate();
  require_point(rho, phi);
  const double w = geometry.spot_size();
  const double radial = lg_radial_waist(mode, rho / w) / w;
  const int abs_l = std::abs(mode.l);
  const double phase =
      -geometry.wavenumber_k * rho * rho *
          geometry.inverse_curvature_radius() / 2.0 -
      static_cast<double>(mode.l) * phi -
      (2.0 * mode.p + abs_l + 1.0) * geometry.gouy_phase();
  return radial * std::complex<double>(std::cos(phase), std::sin(phase));
}

} // namespace oam
