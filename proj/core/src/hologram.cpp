#include "oam/hologram.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "oam/format.hpp"

namespace oam {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

} // namespace

void HologramSpec::validate() const {
  if (std::isnan(phase_depth) || phase_depth < 0.0 || phase_depth > kTwoPi) {
    throw std::domain_error("HologramSpec: phase_depth must lie in [0, 2 pi]");
  }
  if (std::isnan(grating_period) || !(grating_period > 0.0)) {
    throw std::domain_error("HologramSpec: grating_period must be positive");
  }
}

std::complex<double> transmittance(const HologramSpec& spec, double rho,
                                   double phi) {
  spec.validate();
  if (!std::isfinite(rho) || rho < 0.0) {
    throw std::domain_error("transmittance: rho must be finite and >= 0");
  }
  if (!std::isfinite(phi)) {
    throw std::domain_error("transmittance: phi must be finite");
  }
  // kTwoPi / inf == 0: an infinite period removes the carrier grating.
  const double carrier = kTwoPi / spec.grating_period * rho * std::cos(phi);
  double wrapped = std::fmod(spec.charge_l * phi - carrier, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  const double phase = spec.phase_depth * wrapped / kTwoPi;
  return {std::cos(phase), std::sin(phase)};
}

std::complex<double> mode_overlap_after_charge(ModeIndex in, ModeIndex out,
                                               int delta_l, double waist_w0,
                                               const QuadratureSpec& quad) {
  if (in.p < 0 || out.p < 0) {
    throw std::domain_error(
        "mode_overlap_after_charge: radial indices must be >= 0");
  }
  if (!(waist_w0 > 0.0) || !std::isfinite(waist_w0)) {
    throw std::domain_error(
        "mode_overlap_after_charge: waist_w0 must be positive");
  }
  // The azimuthal integral enforces l_out = l_in - delta_l.
  if (out.l != in.l - delta_l) return {0.0, 0.0};
  // Radial profiles are real and the shared waist drops out of the
  // scaled radial variable, so the overlap is real and waist-free.
  const double value = kTwoPi * integrate_halfline(
                                    [=](double u) {
                                      return lg_radial_waist(out, u) *
                                             lg_radial_waist(in, u) * u;
                                    },
                                    quad);
  return {value, 0.0};
}

std::complex<double> first_order_coefficient(int p_in, int l_in, int delta_l,
                                             int p_out, double waist_w0,
                                             const QuadratureSpec& quad) {
  return mode_overlap_after_charge({l_in, p_in}, {0, p_out}, delta_l,
                                   waist_w0, quad);
}

double ConversionTable::weight(int p_in, int p_out) const {
  return weights.at({p_in, p_out});
}

ConversionTable conversion_table(int delta_l, int p_in_max, int p_out_max,
                                 const QuadratureSpec& quad) {
  if (p_in_max < 0 || p_out_max < 0) {
    throw std::domain_error("conversion_table: index bounds must be >= 0");
  }
  ConversionTable table;
  table.delta_l_abs = std::abs(delta_l);
  table.p_in_max = p_in_max;
  table.p_out_max = p_out_max;
  for (int p_in = 0; p_in <= p_in_max; ++p_in) {
    for (int p_out = 0; p_out <= p_out_max; ++p_out) {
      const std::complex<double> a = first_order_coefficient(
          p_in, table.delta_l_abs, table.delta_l_abs, p_out, 1.0, quad);
      table.weights[{p_in, p_out}] = std::norm(a);
    }
  }
  return table;
}

void write_csv(const ConversionTable& table, std::ostream& out) {
  out << "delta_l,p_in,p_out,weight\n";
  for (const auto& [key, weight] : table.weights) {
    out << table.delta_l_abs << ',' << key.first << ',' << key.second << ','
        << format_full(weight) << '\n';
  }
}

std::string to_json(const ConversionTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, weight] : table.weights) {
    rows.push_back({{"delta_l", table.delta_l_abs},
                    {"p_in", key.first},
                    {"p_out", key.second},
                    {"weight", weight}});
  }
  return rows.dump(2);
}

} // namespace oam
