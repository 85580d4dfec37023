#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "oam/fiber.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Closed forms of the first nonzero relative couplings, derived from the
// incomplete-gamma sums at the disk edge (t = 2):
//   Q1 = 4 / ((1 - e^2)(5 - e^2)),  Q3 = 4 / ((1 - e^2)(49 - 9 e^2)).
double q1_reference() {
  const double e2 = std::exp(2.0);
  return 4.0 / ((1.0 - e2) * (5.0 - e2));
}

double q3_reference() {
  const double e2 = std::exp(2.0);
  return 4.0 / ((1.0 - e2) * (49.0 - 9.0 * e2));
}

} // namespace

TEST_CASE("FiberSpec geometry and validation") {
  oam::FiberSpec fiber;
  CHECK(fiber.mode_field_radius() == 1.0);
  fiber.mode_field_diameter = 9.0;
  CHECK(fiber.mode_field_radius() == 4.5);

  fiber.mode_field_diameter = 0.0;
  CHECK_THROWS_AS(fiber.validate(), std::domain_error);
  fiber = {};
  fiber.peak_amplitude = -2.0;
  CHECK_THROWS_AS(fiber.validate(), std::domain_error);
  fiber = {};
  fiber.mode_field_diameter = kInf;
  CHECK_THROWS_AS(fiber.validate(), std::domain_error);
}

TEST_CASE("guided mode is the centered Gaussian") {
  oam::FiberSpec fiber;
  fiber.mode_field_diameter = 3.0;
  fiber.peak_amplitude = 2.5;
  CHECK(oam::fiber_mode(fiber, 0.0) == 2.5);
  CHECK(oam::fiber_mode(fiber, 1.5) ==
        doctest::Approx(2.5 * std::exp(-1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(oam::fiber_mode(fiber, -0.1), std::domain_error);
}

TEST_CASE("fundamental beam couples with efficiency exactly 1") {
  oam::FiberSpec fiber;
  CHECK(oam::coupling_efficiency(0, 0, 1.0, fiber) == 1.0);
}

TEST_CASE("low radial orders match the closed-form couplings") {
  oam::FiberSpec fiber;
  const double q1 = oam::coupling_efficiency(0, 1, 1.0, fiber);
  CHECK(q1 == doctest::Approx(q1_reference()).epsilon(1e-12));
  // p = 2 decouples: the overlap across the disk cancels exactly.
  CHECK(std::abs(oam::coupling_efficiency(0, 2, 1.0, fiber)) < 1e-10);
  const double q3 = oam::coupling_efficiency(0, 3, 1.0, fiber);
  CHECK(q3 == doctest::Approx(q3_reference()).epsilon(1e-12));
}

TEST_CASE("nonzero windings are rejected by the fundamental fiber mode") {
  oam::FiberSpec fiber;
  CHECK(oam::coupling_efficiency(1, 0, 1.0, fiber) == 0.0);
  CHECK(oam::coupling_efficiency(-3, 2, 1.0, fiber) == 0.0);
}

TEST_CASE("a mismatched beam waist is rejected") {
  oam::FiberSpec fiber;
  CHECK_THROWS_AS(oam::coupling_efficiency(0, 0, 1.001, fiber),
                  std::domain_error);
  CHECK_THROWS_AS(oam::coupling_efficiency(0, 0, -1.0, fiber),
                  std::domain_error);
  CHECK_THROWS_AS(oam::coupling_efficiency(0, -1, 1.0, fiber),
                  std::domain_error);
  // A waist within the 1e-12 relative window passes.
  CHECK_NOTHROW(oam::coupling_efficiency(0, 0, 1.0 + 1e-13, fiber));
}

TEST_CASE("relative q vector reproduces the per-order couplings") {
  oam::FiberSpec fiber;
  const std::vector<double> q = oam::relative_q_vector(7, fiber);
  REQUIRE(q.size() == 8);
  CHECK(q[0] == 1.0);
  CHECK(q[1] == doctest::Approx(q1_reference()).epsilon(1e-12));
  CHECK(std::abs(q[2]) < 1e-10);
  CHECK(q[3] == doctest::Approx(q3_reference()).epsilon(1e-12));
  // Frozen reference values for the tail orders.
  CHECK(q[4] == doctest::Approx(0.046370).epsilon(1e-3));
  CHECK(q[5] == doctest::Approx(0.018686).epsilon(1e-3));
  CHECK(q[6] == doctest::Approx(0.000928).epsilon(1e-2));
  CHECK(q[7] == doctest::Approx(0.003017).epsilon(1e-2));
  for (int p = 0; p <= 7; ++p) {
    CHECK(q[p] == oam::coupling_efficiency(0, p, 1.0, fiber));
  }
  CHECK_THROWS_AS(oam::relative_q_vector(-1, fiber), std::domain_error);
}

TEST_CASE("relative couplings do not depend on the mode field diameter") {
  // Q_p is a ratio of overlap integrals in units of the mode field radius,
  // so rescaling the fiber rescales the matched beam with it and every
  // coupling comes out identical.
  oam::FiberSpec wide;
  wide.mode_field_diameter = 9.2;
  oam::FiberSpec narrow;
  narrow.mode_field_diameter = 4.6;
  const std::vector<double> q_wide = oam::relative_q_vector(3, wide);
  const std::vector<double> q_narrow = oam::relative_q_vector(3, narrow);
  REQUIRE(q_wide.size() == q_narrow.size());
  for (std::size_t p = 0; p < q_wide.size(); ++p) {
    CHECK(q_wide[p] == q_narrow[p]);
  }
}

TEST_CASE("the fundamental order couples at least as strongly as p <= 3") {
  oam::FiberSpec fiber;
  const std::vector<double> q = oam::relative_q_vector(3, fiber);
  for (int p = 1; p <= 3; ++p) {
    CHECK(q[p] <= q[0]);
  }
}

TEST_CASE("quadrature and analytic disk couplings agree everywhere") {
  for (int p = 0; p <= 6; ++p) {
    for (double u_max : {0.5, 1.0, 2.0}) {
      const double numeric = oam::coupling_q_disk(p, u_max);
      const double analytic = oam::coupling_q_disk_analytic(p, u_max);
      CHECK_MESSAGE(std::abs(numeric - analytic) <=
                        1e-9 * std::max(1.0, std::abs(analytic)),
                    "p=", p, " u_max=", u_max, " numeric=", numeric,
                    " analytic=", analytic);
    }
  }
}

TEST_CASE("whole-plane detection keeps only the fundamental order") {
  CHECK(oam::coupling_q_disk_analytic(0, kInf) == 1.0);
  CHECK(oam::coupling_q_disk(0, kInf) == doctest::Approx(1.0).epsilon(1e-12));
  for (int p = 1; p <= 4; ++p) {
    CHECK(std::abs(oam::coupling_q_disk_analytic(p, kInf)) < 1e-20);
    CHECK(std::abs(oam::coupling_q_disk(p, kInf)) < 1e-12);
  }
}

TEST_CASE("disk couplings never exceed 1") {
  // Cauchy-Schwarz bound on the normalized overlap.
  for (int p = 0; p <= 6; ++p) {
    for (double u_max : {0.3, 1.0, 3.0, kInf}) {
      CHECK(oam::coupling_q_disk_analytic(p, u_max) <= 1.0 + 1e-12);
    }
  }
  CHECK_THROWS_AS(oam::coupling_q_disk(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(oam::coupling_q_disk_analytic(0, -1.0), std::domain_error);
}

TEST_CASE("q vector serialization") {
  oam::FiberSpec fiber;
  const std::vector<double> q = oam::relative_q_vector(2, fiber);
  std::ostringstream csv;
  oam::write_csv(q, csv);
  const std::string text = csv.str();
  CHECK(text.rfind("p,q\n", 0) == 0);
  CHECK(text.find("0,1\n") != std::string::npos);

  const auto parsed = nlohmann::json::parse(oam::to_json(q));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0]["q"] == 1.0);
  CHECK(parsed[1]["q"].get<double>() ==
        doctest::Approx(q1_reference()).epsilon(1e-12));
}
