#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>

#include "oam/quadrature.hpp"

namespace oam {

// Pump beam description. Only a Gaussian radial profile (p0 = 0) is
// supported; signal, idler and pump share the single waist given here.
struct PumpSpec {
  int winding_l0 = 0;
  int radial_p0 = 0;
  double waist_w0 = 1.0;

  // Throws std::domain_error unless radial_p0 == 0 and waist_w0 > 0.
  void validate() const;
};

// Signal/idler mode pair labelling one down-conversion amplitude.
struct PairIndex {
  int l1 = 0;
  int p1 = 0;
  int l2 = 0;
  int p2 = 0;

  auto operator<=>(const PairIndex&) const = default;
};

// Relative amplitudes C for every pair with |l1| <= l_max, p1, p2 <= p_max
// and l2 fixed by winding conservation l1 + l2 = l0. Weights are C^2.
struct AmplitudeTable {
  PumpSpec pump;
  int l_max = 0;
  int p_max = 0;
  std::map<PairIndex, double> amplitudes;
};

// Relative amplitude of the |l1, p1> x |l2, p2> pair for a pump winding
// l0, normalized so that the fundamental pair at l0 = 0 has amplitude 1.
// Evaluated from the closed double sum over the mode expansion, with
// exact rational arithmetic while every factorial argument stays <= 30
// and a compensated log-domain sum beyond.
// Throws std::domain_error on negative radial indices or l1 + l2 != l0.
double amplitude_closed_form(int l1, int p1, int l2, int p2, int l0);

// Same amplitude from the defining overlap integral of the two detected
// profiles against the pump profile at the waist plane, normalized by the
// fundamental-pair overlap so the anchor is 1. Winding conservation is
// enforced before integrating. Serves as the independent cross-check of
// amplitude_closed_form.
double amplitude_quadrature(int l1, int p1, int l2, int p2,
                            const PumpSpec& pump,
                            const QuadratureSpec& quad = {});

// Squared amplitude C^2, the relative creation probability of the pair.
double pair_weight(int l1, int p1, int l2, int p2, int l0);

// Tabulates amplitude_closed_form over the rectangular index range.
// Throws std::domain_error on l_max < 0 or p_max < 0.
AmplitudeTable build_state_table(const PumpSpec& pump, int l_max, int p_max);

// CSV with header l1,p1,l2,p2,amplitude,weight; shortest round-trip
// number formatting.
void write_csv(const AmplitudeTable& table, std::ostream& out);

// JSON array of records with the same fields as the CSV.
std::string to_json(const AmplitudeTable& table);

} // namespace oam
