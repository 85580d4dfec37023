#include "oam/detection.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "oam/fiber.hpp"
#include "oam/format.hpp"
#include "oam/hologram.hpp"
#include "oam/spdc.hpp"

namespace oam {

namespace {

void kahan_add(double term, double& sum, double& comp) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

// Per-arm detection factor S_l(p): conversion weights into the analyzed
// winding folded with the fiber couplings of the converted orders.
std::vector<double> arm_factors(int l_abs, const DetectionConfig& config) {
  const int p_max = config.restrict_p_to_zero ? 0 : config.p_pair_max;
  int p_out_needed = 0;
  for (int p = 0; p <= p_max; ++p) {
    p_out_needed = std::max(p_out_needed, config.p_out_limit(p));
  }

  std::vector<double> couplings;
  if (config.ideal_elements) {
    couplings.assign(p_out_needed + 1, 1.0);
  } else {
    couplings = relative_q_vector(p_out_needed, FiberSpec{}, config.quadrature);
  }

  std::vector<double> factors(p_max + 1, 0.0);
  if (l_abs == 0 || config.ideal_elements) {
    // No charge to remove (or perfect elements): the conversion table is
    // the exact identity, so only p_out = p_in survives.
    for (int p = 0; p <= p_max; ++p) {
      factors[p] = p <= config.p_out_limit(p) ? couplings[p] : 0.0;
    }
    return factors;
  }

  const ConversionTable table =
      conversion_table(l_abs, p_max, p_out_needed, config.quadrature);
  for (int p = 0; p <= p_max; ++p) {
    double sum = 0.0;
    double comp = 0.0;
    const int limit = std::min(config.p_out_limit(p), p_out_needed);
    for (int p_out = 0; p_out <= limit; ++p_out) {
      kahan_add(table.weight(p, p_out) * couplings[p_out], sum, comp);
    }
    factors[p] = sum;
  }
  return factors;
}

} // namespace

void DetectionConfig::validate() const {
  if (p_pair_max < 0) {
    throw std::domain_error("DetectionConfig: p_pair_max must be >= 0");
  }
  if (p_out_cap && *p_out_cap < 0) {
    throw std::domain_error("DetectionConfig: p_out_cap must be >= 0");
  }
  quadrature.validate();
}

double joint_probability(int l, const DetectionConfig& config) {
  config.validate();
  const int l_abs = std::abs(l);
  const int p_max = config.restrict_p_to_zero ? 0 : config.p_pair_max;
  const std::vector<double> factors = arm_factors(l_abs, config);
  double sum = 0.0;
  double comp = 0.0;
  for (int p1 = 0; p1 <= p_max; ++p1) {
    for (int p2 = 0; p2 <= p_max; ++p2) {
      const double amplitude = amplitude_closed_form(l_abs, p1, -l_abs, p2, 0);
      kahan_add(amplitude * amplitude * factors[p1] * factors[p2], sum, comp);
    }
  }
  return sum;
}

double joint_probability_p0(int l, const DetectionConfig& config) {
  DetectionConfig restricted = config;
  restricted.restrict_p_to_zero = true;
  return joint_probability(l, restricted);
}

DetectionReport build_detection_report(const std::vector<int>& l_values,
                                       const DetectionConfig& config) {
  config.validate();
  if (std::find(l_values.begin(), l_values.end(), 0) == l_values.end()) {
    throw std::domain_error(
        "build_detection_report: the l = 0 anchor channel is required");
  }
  DetectionReport report;
  report.l_values = l_values;
  report.config = config;
  for (int l : l_values) {
    if (!report.rate_per_l.count(l)) {
      report.rate_per_l[l] = joint_probability(l, config);
    }
  }
  const double anchor = report.rate_per_l.at(0);
  if (!(anchor > 0.0)) {
    throw std::runtime_error(
        "build_detection_report: the l = 0 rate vanished");
  }
  report.ratios.reserve(l_values.size());
  for (int l : l_values) {
    report.ratios.push_back(report.rate_per_l.at(l) / anchor);
  }
  return report;
}

std::vector<ComparisonRow> compare_experiment(
    const std::vector<std::pair<int, double>>& amplitudes,
    const DetectionConfig& config) {
  config.validate();
  const auto anchor_it =
      std::find_if(amplitudes.begin(), amplitudes.end(),
                   [](const auto& entry) { return entry.first == 0; });
  if (anchor_it == amplitudes.end()) {
    throw std::domain_error(
        "compare_experiment: an l = 0 anchor amplitude is required");
  }
  const double anchor_amplitude = anchor_it->second;
  if (anchor_amplitude == 0.0) {
    throw std::domain_error(
        "compare_experiment: the l = 0 anchor amplitude must be nonzero");
  }

  std::map<int, double> model_rates;
  for (const auto& [l, amplitude] : amplitudes) {
    const int l_abs = std::abs(l);
    if (!model_rates.count(l_abs)) {
      model_rates[l_abs] = joint_probability(l_abs, config);
    }
  }
  const double model_anchor = model_rates.at(0);

  std::vector<ComparisonRow> rows;
  rows.reserve(amplitudes.size());
  for (const auto& [l, amplitude] : amplitudes) {
    const double scaled = amplitude / anchor_amplitude;
    rows.push_back(
        {l, scaled * scaled, model_rates.at(std::abs(l)) / model_anchor});
  }
  return rows;
}

void write_csv(const DetectionReport& report, std::ostream& out) {
  out << "l,rate,ratio\n";
  for (std::size_t i = 0; i < report.l_values.size(); ++i) {
    const int l = report.l_values[i];
    out << l << ',' << format_full(report.rate_per_l.at(l)) << ','
        << format_full(report.ratios[i]) << '\n';
  }
}

namespace {

nlohmann::ordered_json config_to_json(const DetectionConfig& config) {
  nlohmann::ordered_json quad{
      {"base_node_count", config.quadrature.base_node_count},
      {"relative_tolerance", config.quadrature.relative_tolerance},
      {"max_doublings", config.quadrature.max_doublings}};
  nlohmann::ordered_json out{
      {"p_pair_max", config.p_pair_max},
      {"p_out_cap", nullptr},
      {"restrict_p_to_zero", config.restrict_p_to_zero},
      {"ideal_elements", config.ideal_elements},
      {"quadrature", quad}};
  if (config.p_out_cap) out["p_out_cap"] = *config.p_out_cap;
  return out;
}

} // namespace

std::string to_json(const DetectionReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.l_values.size(); ++i) {
    const int l = report.l_values[i];
    rows.push_back({{"l", l},
                    {"rate", report.rate_per_l.at(l)},
                    {"ratio", report.ratios[i]}});
  }
  nlohmann::ordered_json out{{"rows", rows},
                             {"config", config_to_json(report.config)}};
  return out.dump(2);
}

void write_csv(const std::vector<ComparisonRow>& rows, std::ostream& out) {
  out << "l,experiment_ratio,model_ratio\n";
  for (const ComparisonRow& row : rows) {
    out << row.l << ',' << format_full(row.experiment_ratio) << ','
        << format_full(row.model_ratio) << '\n';
  }
}

std::string to_json(const std::vector<ComparisonRow>& rows) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const ComparisonRow& row : rows) {
    array.push_back({{"l", row.l},
                     {"experiment_ratio", row.experiment_ratio},
                     {"model_ratio", row.model_ratio}});
  }
  return array.dump(2);
}

} // namespace oam
