#include "ffam/analysis/report.hpp"
#include "ffam/exactfield/field.hpp"
#include "ffam/exactfield/trig.hpp"
#include "ffam/stargeom/constants.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace ffam;

TEST_CASE("scaling lemma claims") {
  auto r = verify_scaling_lemma(24, 3);
  CHECK(r.all_pass());
  CHECK(r.claims.size() == 4);  // j = 1..3 plus the swap identity
  CHECK_THROWS_AS(verify_scaling_lemma(10, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_scaling_lemma(10, 5), std::invalid_argument);
  for (const auto& c : r.claims) {
    CHECK(c.lhs == c.rhs);
    CHECK(c.anchor.find("scale") != std::string::npos);
  }
}

TEST_CASE("even symmetry") {
  for (int N = 4; N <= 30; N += 2) {
    CAPTURE(N);
    auto r = verify_even_symmetry(N);
    CHECK(r.all_pass());
    CHECK_FALSE(r.first_failure());
  }
  CHECK_THROWS_AS(verify_even_symmetry(7), std::invalid_argument);
}

TEST_CASE("independence ranks") {
  for (int N = 3; N <= 30; ++N) {
    CAPTURE(N);
    CHECK(independence_rank(N) == static_cast<int>(euler_phi(N)) / 2);
    CHECK(dual_independence_rank(N) == static_cast<int>(euler_phi(N)) / 2);
  }
}

TEST_CASE("units") {
  for (int N : {5, 7, 8, 9, 12, 16, 24, 27}) CHECK(verify_units(N).all_pass());
  auto r6 = verify_units(6);
  CHECK(r6.all_pass());
  CHECK(r6.claims.size() == 1);  // twice-odd: only the primitivity claim
}

TEST_CASE("complexity profile") {
  auto c = complexity_profile(12);
  CHECK(c.phi == 4);
  CHECK(c.sin_degree == 1);
  CHECK(c.sin_predicted == 1);
  CHECK(c.consistent());
  auto c4 = complexity_profile(4);
  CHECK(c4.sin_predicted == -1);
  CHECK(c4.tan2_predicted == -1);
  for (int N = 3; N <= 24; ++N) CHECK(complexity_profile(N).consistent());
}

TEST_CASE("suites") {
  auto r = verify_suite("all", 12);
  CHECK(r.all_pass());
  CHECK(r.claims.size() > 50);
  CHECK_THROWS_AS(verify_suite("bogus", 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_suite("all", 2), std::invalid_argument);
}

TEST_CASE("dimension presets") {
  CHECK(dimension_preset("n8").dimension == doctest::Approx(1.246477).epsilon(1e-6));
  CHECK(dimension_preset("n12").dimension == doctest::Approx(1.2513).epsilon(1e-4));
  CHECK(dimension_preset("n5").dimension == doctest::Approx(1.24114).epsilon(1e-5));
  CHECK(dimension_preset("goetz5").dimension == doctest::Approx(1.4404).epsilon(1e-4));
  // independent: -ln 9 / ln((sqrt2 - 1)^2)
  CHECK(dimension_preset("n8").dimension == doctest::Approx(-std::log(9.0) / (2 * std::log(std::sqrt(2.0) - 1))));
  CHECK_THROWS_AS(dimension_preset("n9"), std::invalid_argument);
  CHECK_THROWS_AS(fractal_dimension(1.5, 3), std::domain_error);
  CHECK_THROWS_AS(fractal_dimension(0.5, 1), std::domain_error);
}

TEST_CASE("temporal scaling") {
  auto t = temporal_scaling_estimate({12, 420, 14148, 387252});
  REQUIRE(t.ratios.size() == 3);
  CHECK(t.ratios[0] == 35);
  CHECK(t.estimate == doctest::Approx(27.37).epsilon(1e-3));
  CHECK_THROWS_AS(temporal_scaling_estimate({5}), std::invalid_argument);
  CHECK_THROWS_AS(temporal_scaling_estimate({5, 3}), std::invalid_argument);
}

TEST_CASE("generation periods of N = 12") {
  auto p = generation_periods(12, 1, 2, 10000);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == 12);
  CHECK(p[1] == 420);
}

TEST_CASE("json reports") {
  auto j = to_json(verify_scaling_lemma(12, 2));
  CHECK(j["all_pass"] == true);
  CHECK(j["claims"][0]["status"] == "pass");
  auto d = to_json(dimension_preset("n8"));
  CHECK(d["label"] == "n8");
  auto c = to_json(complexity_profile(9));
  CHECK(c["tan_pi_N"]["computed"] == 6);
}
