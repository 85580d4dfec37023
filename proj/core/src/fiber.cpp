#include "oam/fiber.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "oam/format.hpp"
#include "oam/specfun.hpp"

namespace oam {

namespace {

// integral_0^T t^k e^{-t} dt = k! (1 - e^{-T} sum_{j<=k} T^j / j!),
// with the T = inf limit reducing to k!.
std::vector<double> incomplete_gamma_moments(int k_max, double t_upper) {
  std::vector<double> moments(k_max + 1);
  const double damp = std::isinf(t_upper) ? 0.0 : std::exp(-t_upper);
  double factorial = 1.0;
  double partial = 0.0;   // sum_{j<=k} T^j / j!
  double power_term = 1.0; // T^k / k!
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      factorial *= k;
      power_term *= t_upper / k;
      if (std::isinf(t_upper)) power_term = 0.0;
    }
    partial += power_term;
    moments[k] = factorial * (1.0 - damp * partial);
  }
  return moments;
}

void require_radial(int p) {
  if (p < 0) throw std::domain_error("fiber coupling: p must be >= 0");
}

void require_disk(double u_max) {
  if (std::isnan(u_max) || !(u_max > 0.0)) {
    throw std::domain_error("fiber coupling: disk radius must be positive");
  }
}

} // namespace

void FiberSpec::validate() const {
  if (!(mode_field_diameter > 0.0) || !std::isfinite(mode_field_diameter)) {
    throw std::domain_error("FiberSpec: mode_field_diameter must be positive");
  }
  if (!(peak_amplitude > 0.0) || !std::isfinite(peak_amplitude)) {
    throw std::domain_error("FiberSpec: peak_amplitude must be positive");
  }
}

double fiber_mode(const FiberSpec& fiber, double rho) {
  fiber.validate();
  if (!std::isfinite(rho) || rho < 0.0) {
    throw std::domain_error("fiber_mode: rho must be finite and >= 0");
  }
  const double radius = fiber.mode_field_radius();
  return fiber.peak_amplitude * std::exp(-rho * rho / (radius * radius));
}

double coupling_q_disk(int p, double u_max, const QuadratureSpec& quad) {
  require_radial(p);
  require_disk(u_max);
  const auto overlap_integrand = [p](double u) {
    return assoc_laguerre(p, 0, 2.0 * u * u) * std::exp(-2.0 * u * u) * u;
  };
  const auto norm_integrand = [p](double u) {
    const double l_value = assoc_laguerre(p, 0, 2.0 * u * u);
    return l_value * l_value * std::exp(-2.0 * u * u) * u;
  };
  const auto mode_integrand = [](double u) {
    return std::exp(-2.0 * u * u) * u;
  };
  double overlap, beam_norm, mode_norm;
  if (std::isinf(u_max)) {
    overlap = integrate_halfline(overlap_integrand, quad);
    beam_norm = integrate_halfline(norm_integrand, quad);
    mode_norm = integrate_halfline(mode_integrand, quad);
  } else {
    overlap = integrate_interval(overlap_integrand, 0.0, u_max, quad);
    beam_norm = integrate_interval(norm_integrand, 0.0, u_max, quad);
    mode_norm = integrate_interval(mode_integrand, 0.0, u_max, quad);
  }
  return overlap * overlap / (beam_norm * mode_norm);
}

double coupling_q_disk_analytic(int p, double u_max) {
  require_radial(p);
  require_disk(u_max);
  const double t_upper =
      std::isinf(u_max) ? std::numeric_limits<double>::infinity()
                        : 2.0 * u_max * u_max;
  const std::vector<double> coeffs = laguerre_coefficients(p, 0);
  const std::vector<double> moments = incomplete_gamma_moments(2 * p, t_upper);
  double overlap = 0.0;
  for (int k = 0; k <= p; ++k) overlap += coeffs[k] * moments[k];
  // Coefficients of L_p^2 by convolution.
  std::vector<double> squared(2 * p + 1, 0.0);
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= p; ++j) squared[i + j] += coeffs[i] * coeffs[j];
  }
  double beam_norm = 0.0;
  for (int k = 0; k <= 2 * p; ++k) beam_norm += squared[k] * moments[k];
  const double mode_norm = moments[0];
  return overlap * overlap / (beam_norm * mode_norm);
}

double coupling_efficiency(int l, int p, double beam_waist,
                           const FiberSpec& fiber, const QuadratureSpec& quad) {
  fiber.validate();
  require_radial(p);
  if (!(beam_waist > 0.0) || !std::isfinite(beam_waist)) {
    throw std::domain_error("coupling_efficiency: beam_waist must be positive");
  }
  const double radius = fiber.mode_field_radius();
  if (std::abs(beam_waist - radius) > 1e-12 * radius) {
    throw std::domain_error(
        "coupling_efficiency: beam waist must match the fiber mode field "
        "radius");
  }
  // Any winding other than 0 is orthogonal to the guided mode.
  if (l != 0) return 0.0;
  const double analytic = coupling_q_disk_analytic(p, 1.0);
  const double numeric = coupling_q_disk(p, 1.0, quad);
  if (std::abs(analytic - numeric) >
      1e-9 * std::max(1.0, std::abs(analytic))) {
    throw std::logic_error(
        "coupling_efficiency: analytic and quadrature paths disagree");
  }
  return analytic;
}

std::vector<double> relative_q_vector(int p_max, const FiberSpec& fiber,
                                      const QuadratureSpec& quad) {
  if (p_max < 0) {
    throw std::domain_error("relative_q_vector: p_max must be >= 0");
  }
  std::vector<double> q(p_max + 1);
  for (int p = 0; p <= p_max; ++p) {
    q[p] = coupling_efficiency(0, p, fiber.mode_field_radius(), fiber, quad);
  }
  return q;
}

void write_csv(const std::vector<double>& q_vector, std::ostream& out) {
  out << "p,q\n";
  for (std::size_t p = 0; p < q_vector.size(); ++p) {
    out << p << ',' << format_full(q_vector[p]) << '\n';
  }
}

std::string to_json(const std::vector<double>& q_vector) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t p = 0; p < q_vector.size(); ++p) {
    rows.push_back({{"p", p}, {"q", q_vector[p]}});
  }
  return rows.dump(2);
}

} // namespace oam
