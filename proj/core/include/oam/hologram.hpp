#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "oam/modes.hpp"
#include "oam/quadrature.hpp"

namespace oam {

// Blazed phase hologram with an l-fold fork dislocation: phase depth
// delta, carrier grating period Lambda and the diffraction order m that
// the detector selects. Order m shifts the winding number by m * l.
struct HologramSpec {
  int charge_l = 1;
  double phase_depth = 6.283185307179586476925286766559; // 2 pi
  double grating_period = 1.0;
  int diffraction_order = 1;

  int winding_shift() const { return diffraction_order * charge_l; }

  // Throws std::domain_error unless 0 <= phase_depth <= 2 pi and
  // grating_period > 0 (+inf allowed: no carrier).
  void validate() const;
};

// Transmission function exp(i delta mod(l phi - 2 pi rho cos(phi) /
// Lambda, 2 pi) / (2 pi)) evaluated at one point.
// Throws std::domain_error on non-finite rho/phi or rho < 0.
std::complex<double> transmittance(const HologramSpec& spec, double rho,
                                   double phi);

// Overlap <out| e^{-i delta_l phi} |in> of waist-plane modes sharing the
// waist. Zero unless out.l == in.l - delta_l; otherwise the real radial
// overlap integral of the two profiles. Independent of the shared waist.
std::complex<double> mode_overlap_after_charge(ModeIndex in, ModeIndex out,
                                               int delta_l, double waist_w0,
                                               const QuadratureSpec& quad = {});

// First-order diffraction coefficient a_{p_in p_out} for detection in the
// fundamental winding: the hologram removes delta_l from l_in, and only
// l_in == delta_l reaches the l = 0 detection mode. The returned value is
// real; its squared magnitude is the conversion weight.
std::complex<double> first_order_coefficient(int p_in, int l_in, int delta_l,
                                             int p_out, double waist_w0,
                                             const QuadratureSpec& quad = {});

// Conversion weights P(p_in, p_out) = |a|^2 for winding |delta_l| -> 0.
// Weights depend on delta_l only through |delta_l|, so the table is
// canonicalized to the absolute value.
struct ConversionTable {
  int delta_l_abs = 0;
  int p_in_max = 0;
  int p_out_max = 0;
  std::map<std::pair<int, int>, double> weights; // (p_in, p_out) -> P

  double weight(int p_in, int p_out) const;      // .at() semantics
};

ConversionTable conversion_table(int delta_l, int p_in_max, int p_out_max,
                                 const QuadratureSpec& quad = {});

// CSV with header delta_l,p_in,p_out,weight; shortest round-trip numbers.
void write_csv(const ConversionTable& table, std::ostream& out);

// JSON array of records with the same fields as the CSV.
std::string to_json(const ConversionTable& table);

} // namespace oam
