#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "oam/modes.hpp"
#include "oam/quadrature.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

double mode_norm_integral(oam::ModeIndex mode) {
  // 2 pi integral |R(u)|^2 u du over the scaled radius; 1 for every mode.
  return 2.0 * kPi * oam::integrate_halfline([mode](double u) {
           const double r = oam::lg_radial_waist(mode, u);
           return r * r * u;
         });
}

} // namespace

TEST_CASE("BeamGeometry derived quantities") {
  oam::BeamGeometry geometry{1.5, 2.0, 0.0};
  CHECK(geometry.rayleigh_range() == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(geometry.spot_size() == 1.5);
  CHECK(geometry.gouy_phase() == 0.0);
  CHECK(geometry.inverse_curvature_radius() == 0.0);

  geometry.z = geometry.rayleigh_range();
  CHECK(geometry.spot_size() ==
        doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(geometry.gouy_phase() == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  // 1/R = z / (z^2 + z_R^2) peaks at z = z_R with value 1 / (2 z_R).
  CHECK(geometry.inverse_curvature_radius() ==
        doctest::Approx(1.0 / (2.0 * 2.25)).epsilon(1e-15));
}

TEST_CASE("BeamGeometry validation") {
  CHECK_THROWS_AS((oam::BeamGeometry{0.0, 1.0, 0.0}).validate(),
                  std::domain_error);
  CHECK_THROWS_AS((oam::BeamGeometry{1.0, -2.0, 0.0}).validate(),
                  std::domain_error);
  CHECK_THROWS_AS(
      (oam::BeamGeometry{1.0, 1.0, std::numeric_limits<double>::infinity()})
          .validate(),
      std::domain_error);
}

TEST_CASE("lg_norm_constant matches the factorial expression") {
  CHECK(oam::lg_norm_constant({0, 0}) ==
        doctest::Approx(std::sqrt(2.0 / kPi)).epsilon(1e-15));
  // N^2 = 2 p! / (pi (|l|+p)!): for l=3, p=2 that is 2*2/(pi*120).
  CHECK(oam::lg_norm_constant({3, 2}) ==
        doctest::Approx(std::sqrt(4.0 / (kPi * 120.0))).epsilon(1e-14));
  CHECK(oam::lg_norm_constant({-3, 2}) == oam::lg_norm_constant({3, 2}));
}

TEST_CASE("fundamental waist field is the normalized Gaussian") {
  const double w0 = 0.8;
  const std::complex<double> center = oam::lg_field_waist({0, 0}, w0, 0.0, 0.3);
  CHECK(center.real() ==
        doctest::Approx(std::sqrt(2.0 / kPi) / w0).epsilon(1e-15));
  CHECK(center.imag() == 0.0);

  const double rho = 0.6;
  const std::complex<double> off = oam::lg_field_waist({0, 0}, w0, rho, 0.0);
  CHECK(off.real() / center.real() ==
        doctest::Approx(std::exp(-rho * rho / (w0 * w0))).epsilon(1e-13));
}

TEST_CASE("winding phase rotates as exp(-i l phi)") {
  const oam::ModeIndex mode{2, 0};
  const double rho = 0.5;
  const std::complex<double> ref = oam::lg_field_waist(mode, 1.0, rho, 0.0);
  for (double phi : {0.4, 2.0, 5.5}) {
    const std::complex<double> value =
        oam::lg_field_waist(mode, 1.0, rho, phi);
    CHECK(std::abs(value) == doctest::Approx(std::abs(ref)).epsilon(1e-13));
    const std::complex<double> rotated =
        ref * std::exp(std::complex<double>(0.0, -mode.l * phi));
    CHECK(value.real() == doctest::Approx(rotated.real()).epsilon(1e-12));
    CHECK(value.imag() == doctest::Approx(rotated.imag()).epsilon(1e-12));
  }
}

TEST_CASE("modes are normalized over the transverse plane") {
  for (int l = 0; l <= 5; ++l) {
    for (int p = 0; p <= 5; ++p) {
      CHECK_MESSAGE(
          std::abs(mode_norm_integral({l, p}) - 1.0) < 1e-9, "l=", l, " p=", p);
    }
  }
}

TEST_CASE("same-winding modes of different radial order are orthogonal") {
  for (int l = 0; l <= 3; ++l) {
    for (int p = 0; p <= 4; ++p) {
      for (int q = 0; q < p; ++q) {
        const double overlap =
            2.0 * kPi * oam::integrate_halfline([=](double u) {
              return oam::lg_radial_waist({l, p}, u) *
                     oam::lg_radial_waist({l, q}, u) * u;
            });
        CHECK_MESSAGE(std::abs(overlap) < 1e-9, "l=", l, " p=", p, " q=", q);
      }
    }
  }
}

TEST_CASE("propagated field stays normalized away from the waist") {
  const oam::BeamGeometry geometry{0.9, 4.0, 1.3};
  const oam::ModeIndex mode{1, 2};
  const double norm = 2.0 * kPi * oam::integrate_halfline([&](double rho) {
    const std::complex<double> field = oam::lg_field(mode, geometry, rho, 0.0);
    return std::norm(field) * rho;
  });
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lg_field reduces to the waist form at z = 0") {
  const oam::ModeIndex mode{3, 1};
  const oam::BeamGeometry geometry{0.7, 5.0, 0.0};
  for (double rho : {0.0, 0.4, 1.1}) {
    for (double phi : {0.0, 1.9}) {
      const std::complex<double> at_waist =
          oam::lg_field_waist(mode, geometry.waist_w0, rho, phi);
      const std::complex<double> propagated =
          oam::lg_field(mode, geometry, rho, phi);
      CHECK(propagated.real() == at_waist.real());
      CHECK(propagated.imag() == at_waist.imag());
    }
  }
}

TEST_CASE("lg_field is continuous as z -> 0") {
  const oam::ModeIndex mode{1, 2};
  oam::BeamGeometry geometry{0.7, 5.0, 0.0};
  geometry.z = 1e-9 * geometry.rayleigh_range();
  const std::complex<double> near =
      oam::lg_field(mode, geometry, 0.45, 1.2);
  const std::complex<double> at_waist =
      oam::lg_field_waist(mode, geometry.waist_w0, 0.45, 1.2);
  CHECK(std::abs(near - at_waist) <= 1e-6 * std::abs(at_waist));
}

TEST_CASE("field evaluation validates inputs") {
  CHECK_THROWS_AS(oam::lg_field_waist({0, -1}, 1.0, 0.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(oam::lg_field_waist({0, 0}, 0.0, 0.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(oam::lg_field_waist({0, 0}, 1.0, -0.5, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(oam::lg_field_waist({0, 0}, 1.0, 0.5, std::nan("")),
                  std::domain_error);
  CHECK_THROWS_AS(
      oam::lg_field_waist({0, 0}, 1.0,
                          std::numeric_limits<double>::infinity(), 0.0),
      std::domain_error);
  CHECK_THROWS_AS(oam::lg_radial_waist({0, 0}, -0.1), std::domain_error);
}

TEST_CASE("far tail underflows to zero instead of NaN") {
  CHECK(oam::lg_radial_waist({10, 3}, 40.0) == 0.0);
  CHECK(oam::lg_radial_waist({40, 0}, 30.0) == 0.0);
}
