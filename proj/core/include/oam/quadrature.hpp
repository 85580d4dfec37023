#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace oam {

// Thrown when adaptive node doubling runs out of refinements before the
// requested tolerance is met.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Controls for the adaptive Gauss-Legendre integrators below.
struct QuadratureSpec {
  int base_node_count = 32;         // nodes of the first rule
  double relative_tolerance = 1e-10;
  int max_doublings = 6;            // refinements before giving up

  // Throws std::invalid_argument unless base_node_count >= 16,
  // relative_tolerance is in (0, 1e-3] and max_doublings >= 1.
  void validate() const;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// computed by Newton iteration on the Legendre recurrence.
void gauss_legendre_rule(int n, std::vector<double>& nodes,
                         std::vector<double>& weights);

// Single application of the n-point Gauss-Legendre rule mapped to [a, b].
// Exact for polynomials of degree 2n - 1.
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int n);

// Integrates f over [a, b], doubling the node count until two successive
// rules agree to spec.relative_tolerance (absolute once the magnitude
// drops below 1e-12). Throws ConvergenceError when doubling is exhausted.
double integrate_interval(const std::function<double(double)>& f, double a,
                          double b, const QuadratureSpec& spec = {});

// Integrates f over [0, inf) for integrands with Gaussian-like decay by
// the substitution u = s / (1 - s), which maps [0, 1) onto the half line.
// Same convergence policy as integrate_interval.
double integrate_halfline(const std::function<double(double)>& f,
                          const QuadratureSpec& spec = {});

} // namespace oam
