#include "oam/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace oam {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Rules are cached per node count; they are pure data, so a shared map
// behind a mutex keeps the integrators thread-safe.
const Rule& cached_rule(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    Rule rule;
    gauss_legendre_rule(n, rule.nodes, rule.weights);
    it = cache.emplace(n, std::move(rule)).first;
  }
  return it->second;
}

// Shared node-doubling driver for both integrators.
double converge_by_doubling(const std::function<double(int)>& evaluate,
                            const QuadratureSpec& spec, const char* what) {
  int n = spec.base_node_count;
  double previous = evaluate(n);
  for (int step = 0; step < spec.max_doublings; ++step) {
    n *= 2;
    const double current = evaluate(n);
    const double difference = std::abs(current - previous);
    const double magnitude = std::abs(current);
    const double bound = magnitude > 1e-12
                             ? spec.relative_tolerance * magnitude
                             : spec.relative_tolerance;
    if (difference <= bound) return current;
    previous = current;
  }
  throw ConvergenceError(std::string(what) + ": no convergence after " +
                         std::to_string(spec.max_doublings) +
                         " node doublings (final rule " + std::to_string(n) +
                         " nodes)");
}

} // namespace

void QuadratureSpec::validate() const {
  if (base_node_count < 16) {
    throw std::invalid_argument(
        "QuadratureSpec: base_node_count must be >= 16");
  }
  if (!(relative_tolerance > 0.0) || !(relative_tolerance <= 1e-3)) {
    throw std::invalid_argument(
        "QuadratureSpec: relative_tolerance must be in (0, 1e-3]");
  }
  if (max_doublings < 1) {
    throw std::invalid_argument("QuadratureSpec: max_doublings must be >= 1");
  }
}

void gauss_legendre_rule(int n, std::vector<double>& nodes,
                         std::vector<double>& weights) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre_rule: n must be >= 1");
  }
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev estimate of the i-th root, polished by Newton iteration
    // on the three-term Legendre recurrence.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      double pk = 1.0;
      double pk_minus = 0.0;
      for (int j = 0; j < n; ++j) {
        const double pk_minus2 = pk_minus;
        pk_minus = pk;
        pk = ((2.0 * j + 1.0) * x * pk_minus - j * pk_minus2) / (j + 1.0);
      }
      derivative = n * (x * pk - pk_minus) / (x * x - 1.0);
      const double dx = pk / derivative;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] =
        2.0 / ((1.0 - x * x) * derivative * derivative);
  }
  if (n & 1) nodes[n / 2] = 0.0;
}

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int n) {
  const Rule& rule = cached_rule(n);
  const double center = 0.5 * (a + b);
  const double half_width = 0.5 * (b - a);
  double sum = 0.0;
  double comp = 0.0;
  for (int i = 0; i < n; ++i) {
    const double term = rule.weights[i] * f(center + half_width * rule.nodes[i]);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum * half_width;
}

double integrate_interval(const std::function<double(double)>& f, double a,
                          double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate_interval: bounds must be finite");
  }
  return converge_by_doubling(
      [&](int n) { return gauss_legendre(f, a, b, n); }, spec,
      "integrate_interval");
}

double integrate_halfline(const std::function<double(double)>& f,
                          const QuadratureSpec& spec) {
  spec.validate();
  const auto mapped = [&f](double s) {
    const double remainder = 1.0 - s;
    return f(s / remainder) / (remainder * remainder);
  };
  return converge_by_doubling(
      [&](int n) { return gauss_legendre(mapped, 0.0, 1.0, n); }, spec,
      "integrate_halfline");
}

} // namespace oam
