#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "plankcert/certify.hpp"

using namespace plankcert;
using certify::ZoneSpec;
using geom::AngularDomain;
using geom::AnnulusConfig;
using geom::kPi;
using geom::kTwoPi;
using geom::Strip;
using measure::Method;

namespace {
const AnnulusConfig kUnit = AnnulusConfig::make(1.0, 2.0);
}

TEST_CASE("hat-box zone areas") {
  SUBCASE("closed form is 2*pi*width") {
    CHECK(certify::hatbox_zone_area({Strip::make(0.0, -0.3, 0.2)}, Method::closed_form) ==
          doctest::Approx(kPi).epsilon(1e-14));
    CHECK(certify::hatbox_zone_area({Strip::make(0.0, -1.0, 1.0)}, Method::closed_form) ==
          doctest::Approx(4.0 * kPi).epsilon(1e-14));
  }
  SUBCASE("quadrature agrees for the full-disc strip (whole sphere)") {
    const double area =
        certify::hatbox_zone_area({Strip::make(0.0, -1.0, 1.0)}, Method::quadrature);
    CHECK(std::fabs(area - 4.0 * kPi) <= 1e-6);
  }
  SUBCASE("off-center strip at an arbitrary normal angle") {
    const double area =
        certify::hatbox_zone_area({Strip::make(1.0, 0.1, 0.4)}, Method::quadrature);
    CHECK(std::fabs(area - 0.6 * kPi) <= 1e-6);
  }
  SUBCASE("position independence over random placements") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> lo(-1.0, 0.7);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    const double width = 0.3;
    for (int i = 0; i < 10; ++i) {
      const double a = lo(rng);
      const double area = certify::hatbox_zone_area(
          {Strip::make(ang(rng), a, a + width)}, Method::quadrature);
      CHECK(std::fabs(area - 2.0 * kPi * width) <= 1e-6);
    }
  }
  SUBCASE("unclipped mode rejects lines missing the unit circle") {
    CHECK_THROWS_AS(certify::hatbox_zone_area({Strip::make(0.0, -3.0, 0.5)}, Method::closed_form),
                    std::invalid_argument);
  }
  SUBCASE("clipped variant uses the slab ∩ [-1,1] width") {
    CHECK(certify::hatbox_zone_area_clipped({Strip::make(0.0, -3.0, 0.5)}, Method::closed_form) ==
          doctest::Approx(3.0 * kPi).epsilon(1e-14));
    CHECK(certify::hatbox_zone_area_clipped({Strip::make(0.0, 2.0, 3.0)}, Method::closed_form) ==
          0.0);
    const double q =
        certify::hatbox_zone_area_clipped({Strip::make(0.0, -3.0, 0.5)}, Method::quadrature);
    CHECK(std::fabs(q - 3.0 * kPi) <= 1e-6);
  }
  SUBCASE("lifted slab width equals the strip width") {
    const ZoneSpec z{Strip::make(0.4, -0.2, 0.5)};
    CHECK(z.lifted_width() == doctest::Approx(0.7));
  }
}

TEST_CASE("plank certification") {
  SUBCASE("partition of [-1,1] into widths 0.5, 0.5, 1.0 achieves equality") {
    const std::vector<Strip> strips{Strip::make(0.0, -1.0, -0.5), Strip::make(0.0, -0.5, 0.0),
                                    Strip::make(0.0, 0.0, 1.0)};
    const auto cert = certify::certify_plank(strips);
    CHECK(cert.coverage.covered);
    CHECK(cert.asserted);
    CHECK(cert.inequality_holds);
    CHECK(std::fabs(cert.sum_widths - 2.0) <= 1e-12);
    for (std::size_t i = 0; i < strips.size(); ++i) {
      CHECK(std::fabs(cert.zone_areas[i] - 2.0 * kPi * strips[i].width()) <= 1e-6);
    }
  }
  SUBCASE("single full strip") {
    const std::vector<Strip> strips{Strip::make(0.7, -1.0, 1.0)};
    const auto cert = certify::certify_plank(strips);
    CHECK(cert.inequality_holds);
    CHECK(cert.sum_widths == doctest::Approx(2.0));
  }
  SUBCASE("two crossing narrow strips leave the corners uncovered") {
    const std::vector<Strip> strips{Strip::make(0.0, -0.4, 0.4),
                                    Strip::make(kPi / 2, -0.4, 0.4)};
    const auto cert = certify::certify_plank(strips);
    CHECK_FALSE(cert.coverage.covered);
    CHECK_FALSE(cert.asserted);
    CHECK_FALSE(cert.inequality_holds);  // vacuous, not asserted
    REQUIRE(cert.coverage.witness.has_value());
    for (const auto& s : strips) CHECK_FALSE(contains(s, *cert.coverage.witness));
    CHECK(geom::norm(*cert.coverage.witness) <= 1.0 + 1e-12);
  }
  SUBCASE("strips must reach the unit disc") {
    const std::vector<Strip> strips{Strip::make(0.0, -1.5, 0.0)};
    CHECK_THROWS_AS(certify::certify_plank(strips), std::invalid_argument);
  }
}

TEST_CASE("angular certification") {
  SUBCASE("single full wedge achieves equality") {
    const std::vector<AngularDomain> ds{
        geom::make_regular(kUnit, 0.0, +1, 2.0 * kUnit.epsilon).as_angular()};
    const auto cert = certify::certify_angular(kUnit, ds);
    CHECK(cert.asserted);
    CHECK(cert.inequality_holds);
    CHECK(std::fabs(cert.slack) <= 1e-9);
    CHECK(cert.mu_chain_holds);
    CHECK(std::fabs(cert.sum_measures - cert.view_angle) <= 1e-6);
  }
  SUBCASE("two opposite full wedges") {
    const std::vector<AngularDomain> ds{
        geom::make_regular(kUnit, 0.0, +1, 2.0 * kUnit.epsilon).as_angular(),
        geom::make_regular(kUnit, kPi, +1, 2.0 * kUnit.epsilon).as_angular()};
    const auto cert = certify::certify_angular(kUnit, ds);
    CHECK(cert.inequality_holds);
    CHECK(cert.sum_angles == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-12));
    CHECK(cert.view_angle == doctest::Approx(kPi / 3.0).epsilon(1e-12));
  }
  SUBCASE("strip decomposition wedges at R = 50 satisfy the chain") {
    const auto cfg = AnnulusConfig::make(1.0, 50.0);
    const auto dec = coverage::strip_to_regular_domains(cfg, Strip::make(0.0, -1.0, 1.0));
    const std::vector<AngularDomain> ds{dec.wedge_low, dec.wedge_high};
    const auto cert = certify::certify_angular(cfg, ds);
    CHECK(cert.asserted);
    CHECK(cert.inequality_holds);  // sum of the two wedge angles >= 2*epsilon
    CHECK(cert.sum_angles >= cert.view_angle - 1e-12);
  }
  SUBCASE("vacuous certificate on a punctured family") {
    std::vector<AngularDomain> ds;
    const double d0 = 0.9 * std::cos(kPi / 6.0 - 1e-3);
    ds.push_back(
        geom::make_regular(kUnit, 0.0, +1, kUnit.epsilon - std::asin(d0 / kUnit.R)).as_angular());
    ds.push_back(geom::make_regular(kUnit, 2.0 * kPi / 3.0, +1, kUnit.epsilon).as_angular());
    ds.push_back(geom::make_regular(kUnit, -2.0 * kPi / 3.0, +1, kUnit.epsilon).as_angular());
    const auto cert = certify::certify_angular(kUnit, ds);
    CHECK_FALSE(cert.asserted);
    CHECK_FALSE(cert.inequality_holds);
    REQUIRE(cert.coverage.witness.has_value());
  }
  SUBCASE("vertices outside K are rejected") {
    const std::vector<AngularDomain> ds{AngularDomain::make({2.5, 0.0}, kPi, 0.4)};
    CHECK_THROWS_AS(certify::certify_angular(kUnit, ds), std::invalid_argument);
  }
}

TEST_CASE("theorem-level soundness over generated covering families") {
  std::mt19937_64 rng(60601);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  int covered_families = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<AngularDomain> ds;
    const int kind = trial % 3;
    if (kind == 0) {
      ds.push_back(geom::make_regular(kUnit, ang(rng), +1, 2.0 * kUnit.epsilon).as_angular());
    } else if (kind == 1) {
      // Two opposite caps overlapping by a hair: a tight covering.
      const double delta = 1e-3 * (1.0 + u01(rng));
      const double base = ang(rng);
      ds.push_back(geom::make_regular(kUnit, base, +1, kUnit.epsilon + delta).as_angular());
      ds.push_back(geom::make_regular(kUnit, base + kPi, +1, kUnit.epsilon + delta).as_angular());
    } else {
      const double base = ang(rng);
      for (int i = 0; i < 3; ++i) {
        const double alpha = kUnit.epsilon * (1.0 + 0.8 * u01(rng));
        ds.push_back(
            geom::make_regular(kUnit, base + i * kTwoPi / 3.0, +1, alpha).as_angular());
      }
    }
    const auto cert = certify::certify_angular(kUnit, ds, 128);
    if (!cert.coverage.covered) continue;
    ++covered_families;
    // A covered family with sum below the view angle is an implementation bug.
    CHECK(cert.sum_angles >= cert.view_angle - 1e-9);
    CHECK(cert.sum_measures >= cert.view_angle - 1e-6);
  }
  CHECK(covered_families >= 15);
}

TEST_CASE("limit derivation chain") {
  SUBCASE("spec rows") {
    const std::vector<double> widths{0.5, 0.5, 0.5, 0.5};
    const std::vector<double> Rs{2.0, 10.0, 100.0, 1000.0};
    const auto table = certify::limit_derivation_check(widths, Rs);
    REQUIRE(table.size() == 4);
    for (const auto& row : table) {
      CHECK(row.link_widths_ge_angles);
      CHECK(row.link_angles_ge_view);
      CHECK(row.link_view_ge_sine);
    }
    CHECK(table[1].implied_lower_bound == doctest::Approx(1.8).epsilon(1e-14));
    CHECK(table[3].implied_lower_bound == doctest::Approx(1.998).epsilon(1e-14));
    for (std::size_t i = 1; i < table.size(); ++i) {
      CHECK(table[i].implied_lower_bound >= table[i - 1].implied_lower_bound);
    }
    CHECK(table.back().implied_lower_bound < 2.0);
  }
  SUBCASE("preconditions") {
    const std::vector<double> widths{0.5, 0.5, 0.5, 0.5};
    const std::vector<double> bad_R{1.5};
    CHECK_THROWS_AS(certify::limit_derivation_check(widths, bad_R), std::invalid_argument);
    const std::vector<double> thin{0.5, 0.5};
    const std::vector<double> Rs{10.0};
    CHECK_THROWS_AS(certify::limit_derivation_check(thin, Rs), std::invalid_argument);
    CHECK_THROWS_AS(certify::limit_derivation_check({}, Rs), std::invalid_argument);
  }
}
