#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oam/quadrature.hpp"

namespace oam {

// Hologram charges applied in the two arms when measuring winding l.
struct ArmCharges {
  int signal_delta_l = 0;
  int idler_delta_l = 0;
};

// Configuration of the joint-detection model: pair generation truncated
// at p_pair_max in each arm, mode conversion through the analysis
// holograms, and coupling into single-mode fibers.
struct DetectionConfig {
  int p_pair_max = 2;              // generation sum over p1, p2

  // Converted radial orders kept per input order: p_out <= p_in + 1 by
  // default, or a fixed cap when p_out_cap is set.
  std::optional<int> p_out_cap;

  bool restrict_p_to_zero = false; // keep only the p1 = p2 = 0 pair
  bool ideal_elements = false;     // perfect conversion and coupling

  QuadratureSpec quadrature{};

  // Measuring winding l puts charge -l on the signal arm and +l on the
  // idler arm so both convert to the fundamental fiber mode.
  ArmCharges arm_charges(int l) const { return {-l, l}; }

  int p_out_limit(int p_in) const {
    return p_out_cap ? *p_out_cap : p_in + 1;
  }

  // Throws std::domain_error on negative p_pair_max or p_out_cap and
  // propagates QuadratureSpec validation.
  void validate() const;
};

// Relative coincidence rate R_l for detecting the winding pair (l, -l):
//   R_l = sum_{p1,p2} C^2(l,p1,-l,p2) S_l(p1) S_l(p2),
// where S_l(p) folds the conversion weights with the fiber couplings
// (S_l(p) = Q_p exactly when l = 0 or ideal_elements). Symmetric in the
// sign of l bitwise.
double joint_probability(int l, const DetectionConfig& config = {});

// R_l with the generation sum restricted to the p1 = p2 = 0 pair.
double joint_probability_p0(int l, const DetectionConfig& config = {});

// Rates and their normalization to the l = 0 channel.
struct DetectionReport {
  std::vector<int> l_values;
  std::map<int, double> rate_per_l; // raw R_l
  std::vector<double> ratios;       // R_l / R_0 in l_values order
  DetectionConfig config;
};

// Evaluates R_l for every requested l and normalizes to R_0; l = 0 must
// be in the list (std::domain_error otherwise).
DetectionReport build_detection_report(const std::vector<int>& l_values,
                                       const DetectionConfig& config = {});

// One row of an experiment/model ratio comparison.
struct ComparisonRow {
  int l = 0;
  double experiment_ratio = 0;
  double model_ratio = 0;
};

// Turns measured state amplitudes (l, amplitude) into detection-rate
// ratios |a_l / a_0|^2 and pairs them with the model prediction for the
// same l values. The l = 0 anchor must be present (std::domain_error).
std::vector<ComparisonRow> compare_experiment(
    const std::vector<std::pair<int, double>>& amplitudes,
    const DetectionConfig& config = {});

// CSV with header l,rate,ratio; shortest round-trip numbers.
void write_csv(const DetectionReport& report, std::ostream& out);

// JSON object with the raw rates, ratios and the configuration echo.
std::string to_json(const DetectionReport& report);

// CSV with header l,experiment_ratio,model_ratio.
void write_csv(const std::vector<ComparisonRow>& rows, std::ostream& out);

// JSON array of comparison records.
std::string to_json(const std::vector<ComparisonRow>& rows);

} // namespace oam
