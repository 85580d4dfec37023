#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oam/quadrature.hpp"

namespace oam {

// Single-mode fiber whose guided mode is modelled as the Gaussian
// E0 exp(-rho^2 / omega^2) with mode field radius omega = diameter / 2.
struct FiberSpec {
  double mode_field_diameter = 2.0;
  double peak_amplitude = 1.0;

  double mode_field_radius() const { return mode_field_diameter / 2.0; }

  // Throws std::domain_error unless mode_field_diameter > 0 and
  // peak_amplitude > 0.
  void validate() const;
};

// Guided-mode amplitude at radius rho >= 0.
double fiber_mode(const FiberSpec& fiber, double rho);

// Relative power coupled into the fiber by the LG_p^l beam whose waist
// matches the mode field radius, with the overlap and normalization
// integrals restricted to the detection disk rho <= omega:
//   Q_p = A_p^2 / (B_p G),  A_p = overlap, B_p = beam norm, G = mode norm.
// Zero for l != 0 (azimuthal mismatch). Evaluated analytically from the
// Laguerre expansion and cross-checked against quadrature to 1e-9; a
// disagreement throws std::logic_error. A beam waist that differs from
// the mode field radius by more than 1e-12 (relative) is rejected with
// std::domain_error.
double coupling_efficiency(int l, int p, double beam_waist,
                           const FiberSpec& fiber,
                           const QuadratureSpec& quad = {});

// Q_p for l = 0 with the detection disk radius expressed in units of the
// mode field radius; u_max may be +inf (whole transverse plane), where
// every p > 0 decouples exactly. Pure quadrature path.
double coupling_q_disk(int p, double u_max, const QuadratureSpec& quad = {});

// Closed form of coupling_q_disk from the Laguerre monomial expansion and
// the finite lower-incomplete-gamma sums.
double coupling_q_disk_analytic(int p, double u_max);

// Q_0..Q_p_max normalized to Q_0 = 1.
std::vector<double> relative_q_vector(int p_max, const FiberSpec& fiber,
                                      const QuadratureSpec& quad = {});

// CSV with header p,q; shortest round-trip numbers.
void write_csv(const std::vector<double>& q_vector, std::ostream& out);

// JSON array of records with the same fields as the CSV.
std::string to_json(const std::vector<double>& q_vector);

} // namespace oam
