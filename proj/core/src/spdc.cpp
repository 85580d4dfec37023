#include "oam/spdc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include "oam/format.hpp"
#include "oam/modes.hpp"
#include "oam/specfun.hpp"

namespace oam {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Largest factorial argument for which the double sum is carried out in
// exact rational arithmetic before a single rounding to double.
constexpr int kExactLimit = 30;

BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Double from a big rational. Exact when numerator and denominator both
// fit a double; otherwise both are pre-shifted into range so the final
// division rounds once.
double rational_to_double(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  double sign = 1.0;
  if (num < 0) {
    sign = -1.0;
    num = -num;
  }
  const long bits_num = static_cast<long>(boost::multiprecision::msb(num));
  const long bits_den = static_cast<long>(boost::multiprecision::msb(den));
  const long shift_num = std::max(0L, bits_num - 970);
  const long shift_den = std::max(0L, bits_den - 970);
  const double top = (num >> shift_num).convert_to<double>();
  const double bottom = (den >> shift_den).convert_to<double>();
  return sign * std::ldexp(top / bottom, static_cast<int>(shift_num - shift_den));
}

void kahan_add(double term, double& sum, double& comp) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

void require_pair(int p1, int p2, int l1, int l2, int l0) {
  if (p1 < 0 || p2 < 0) {
    throw std::domain_error("amplitude: radial indices must be >= 0");
  }
  if (l1 + l2 != l0) {
    throw std::domain_error(
        "amplitude: winding conservation l1 + l2 = l0 violated");
  }
}

constexpr double kPi = 3.14159265358979323846;

// Pump radial profile at the waist: sqrt(2/pi) (sqrt(2) u)^{|l0|} e^{-u^2}.
// Unlike lg_radial_waist this carries no per-winding 1/sqrt(|l0|!) factor,
// so pump beams of different charge share one amplitude scale and the
// down-converted amplitudes stay mutually comparable across l0.
double pump_radial_waist(int l0, double u) {
  const double u2 = u * u;
  if (u2 > 745.0) return 0.0;
  return std::sqrt(2.0 / kPi) *
         std::pow(std::sqrt(2.0) * u, std::abs(l0)) * std::exp(-u2);
}

} // namespace

void PumpSpec::validate() const {
  if (radial_p0 != 0) {
    throw std::domain_error("PumpSpec: only a Gaussian pump (p0 = 0) is supported");
  }
  if (!(waist_w0 > 0.0) || !std::isfinite(waist_w0)) {
    throw std::domain_error("PumpSpec: waist_w0 must be positive");
  }
}

double amplitude_closed_form(int l1, int p1, int l2, int p2, int l0) {
  require_pair(p1, p2, l1, l2, l0);
  int a1 = std::abs(l1);
  int a2 = std::abs(l2);
  // The sum depends only on (p1, a1), (p2, a2) and |l0|; ordering the two
  // arms canonically makes the exchange symmetry hold bit for bit.
  if (std::make_pair(p2, a2) < std::make_pair(p1, a1)) {
    std::swap(p1, p2);
    std::swap(a1, a2);
  }
  // Winding conservation forces a1 + a2 + |l0| even; anything else means
  // require_pair let an inconsistent index set through.
  if ((a1 + a2 + std::abs(l0)) % 2 != 0) {
    throw std::logic_error("amplitude: index parity violated");
  }
  const int s_base = (a1 + a2 + std::abs(l0)) / 2;
  const int s_max = p1 + p2 + s_base;

  const bool exact =
      a1 + p1 <= kExactLimit && a2 + p2 <= kExactLimit && s_max <= kExactLimit;
  if (exact) {
    BigRat sum = 0;
    for (int m = 0; m <= p1; ++m) {
      for (int n = 0; n <= p2; ++n) {
        const int s = m + n + s_base;
        BigInt numerator = boost::multiprecision::pow(BigInt(2), s) *
                           big_factorial(s);
        if ((m + n) & 1) numerator = -numerator;
        const BigInt denominator =
            boost::multiprecision::pow(BigInt(3), s) * big_factorial(p1 - m) *
            big_factorial(p2 - n) * big_factorial(a1 + m) *
            big_factorial(a2 + n) * big_factorial(m) * big_factorial(n);
        sum += BigRat(numerator, denominator);
      }
    }
    const BigInt square = big_factorial(p1) * big_factorial(p2) *
                          big_factorial(a1 + p1) * big_factorial(a2 + p2);
    const BigInt root = boost::multiprecision::sqrt(square);
    if (root * root == square) {
      // Perfect square: the whole amplitude is one rational number and
      // rounds to double exactly once.
      return rational_to_double(sum * root);
    }
    return rational_to_double(sum) * std::sqrt(square.convert_to<double>());
  }

  // Log-domain fallback: rescale by the largest term magnitude, then a
  // compensated sum of the rescaled terms.
  const double log_two_thirds = std::log(2.0) - std::log(3.0);
  std::vector<double> logs;
  std::vector<int> signs;
  logs.reserve(static_cast<std::size_t>(p1 + 1) * (p2 + 1));
  signs.reserve(logs.capacity());
  double max_log = -std::numeric_limits<double>::infinity();
  for (int m = 0; m <= p1; ++m) {
    for (int n = 0; n <= p2; ++n) {
      const int s = m + n + s_base;
      const double log_term =
          s * log_two_thirds + log_factorial(s) - log_factorial(p1 - m) -
          log_factorial(p2 - n) - log_factorial(a1 + m) -
          log_factorial(a2 + n) - log_factorial(m) - log_factorial(n);
      logs.push_back(log_term);
      signs.push_back(((m + n) & 1) ? -1 : 1);
      max_log = std::max(max_log, log_term);
    }
  }
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    kahan_add(signs[i] * std::exp(logs[i] - max_log), sum, comp);
  }
  const double log_front = 0.5 * (log_factorial(p1) + log_factorial(p2) +
                                  log_factorial(a1 + p1) +
                                  log_factorial(a2 + p2));
  return sum * std::exp(max_log + log_front);
}

double amplitude_quadrature(int l1, int p1, int l2, int p2,
                            const PumpSpec& pump, const QuadratureSpec& quad) {
  pump.validate();
  require_pair(p1, p2, l1, l2, pump.winding_l0);
  const auto raw_overlap = [&quad](ModeIndex first, ModeIndex second, int l0) {
    return integrate_halfline(
        [=](double u) {
          return lg_radial_waist(first, u) * lg_radial_waist(second, u) *
                 pump_radial_waist(l0, u) * u;
        },
        quad);
  };
  const double overlap = raw_overlap({l1, p1}, {l2, p2}, pump.winding_l0);
  const double anchor = raw_overlap({0, 0}, {0, 0}, 0);
  return overlap / anchor;
}

double pair_weight(int l1, int p1, int l2, int p2, int l0) {
  const double c = amplitude_closed_form(l1, p1, l2, p2, l0);
  return c * c;
}

AmplitudeTable build_state_table(const PumpSpec& pump, int l_max, int p_max) {
  pump.validate();
  if (l_max < 0 || p_max < 0) {
    throw std::domain_error("build_state_table: l_max and p_max must be >= 0");
  }
  AmplitudeTable table;
  table.pump = pump;
  table.l_max = l_max;
  table.p_max = p_max;
  for (int l1 = -l_max; l1 <= l_max; ++l1) {
    const int l2 = pump.winding_l0 - l1;
    for (int p1 = 0; p1 <= p_max; ++p1) {
      for (int p2 = 0; p2 <= p_max; ++p2) {
        table.amplitudes[{l1, p1, l2, p2}] =
            amplitude_closed_form(l1, p1, l2, p2, pump.winding_l0);
      }
    }
  }
  return table;
}

void write_csv(const AmplitudeTable& table, std::ostream& out) {
  out << "l1,p1,l2,p2,amplitude,weight\n";
  for (const auto& [key, amplitude] : table.amplitudes) {
    out << key.l1 << ',' << key.p1 << ',' << key.l2 << ',' << key.p2 << ','
        << format_full(amplitude) << ',' << format_full(amplitude * amplitude)
        << '\n';
  }
}

std::string to_json(const AmplitudeTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, amplitude] : table.amplitudes) {
    rows.push_back({{"l1", key.l1},
                    {"p1", key.p1},
                    {"l2", key.l2},
                    {"p2", key.p2},
                    {"amplitude", amplitude},
                    {"weight", amplitude * amplitude}});
  }
  return rows.dump(2);
}

} // namespace oam
