#include "ffam/exactfield/embed.hpp"
#include "ffam/exactfield/field.hpp"
#include "ffam/exactfield/linalg.hpp"
#include "ffam/exactfield/minpoly.hpp"
#include "ffam/exactfield/trig.hpp"
#include "ffam/stargeom/constants.hpp"

#include <doctest.h>

#include <cmath>

using namespace ffam;

namespace {

std::vector<std::string> strs(const PolyQ& p) {
  std::vector<std::string> out;
  for (const auto& q : p.coeffs()) out.push_back(to_string(q));
  return out;
}

PolyQ ints(std::vector<long> c) { return PolyQ::from_integers(c); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  PolyQ a = ints({-1, 0, 1}), b = ints({1, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q == ints({-1, 1}));
  CHECK(r.is_zero());
  auto e = xgcd(ints({1, 0, 1}), ints({-1, 1}));
  CHECK(e.g.degree() == 0);
  CHECK(e.s * ints({1, 0, 1}) + e.t * ints({-1, 1}) == e.g);
  PolyQ h(std::vector<Rational>{Rational(-1, 3), 0, 1});
  CHECK(h.integer_form() == std::vector<Integer>{-1, 0, 3});
  CHECK(h.str() == "x^2 - 1/3");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(15) == ints({1, -1, 0, 1, -1, 1, 0, -1, 1}));
  CHECK(cyclotomic_poly(7) == ints({1, 1, 1, 1, 1, 1, 1}));
  for (unsigned n : {1u, 2u, 5u, 8u, 9u, 24u, 30u}) CHECK(cyclotomic_poly(n).degree() == static_cast<int>(euler_phi(n)));
}

TEST_CASE("field arithmetic") {
  auto z = FieldElement::zeta(9);
  CHECK(z.pow(9) == FieldElement::one(9));
  auto x = z + FieldElement::rational(9, 2);
  CHECK(x * x.inverse() == FieldElement::one(9));
  CHECK(FieldElement::imag_unit(8) * FieldElement::imag_unit(8) == FieldElement::rational(8, -1));
  CHECK_THROWS_AS(FieldElement::imag_unit(6), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement::zero(5) + FieldElement::zero(7), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement::zero(5).inverse(), std::domain_error);
  CHECK(z.lift(18) == FieldElement::zeta(18, 2));
  CHECK(z.automorphism(2) == z * z);
}

TEST_CASE("trig values embed correctly") {
  for (int N = 3; N <= 30; ++N)
    for (int k = 1; 2 * k < N; ++k) {
      CHECK(tan_pi(N, k).to_double() == doctest::Approx(std::tan(k * M_PI / N)).epsilon(1e-13));
      CHECK(tan_pi(N, k).modulus_index() == static_cast<unsigned>(4 * N));
    }
  CHECK(cos_2pi(7).to_double() == doctest::Approx(std::cos(2 * M_PI / 7)));
  CHECK(sin_2pi(12).to_double() == doctest::Approx(0.5));
  CHECK(lambda(14).to_double() == doctest::Approx(2 * std::cos(M_PI / 7)));
  CHECK(embed_decimal(tan_pi(4, 1).element(), 5) == "1.00000");
  CHECK(tan_pi_d(1, 4) == 1.0);
}

TEST_CASE("minimal polynomials against classical values") {
  // 2cos(2pi/7): x^3 + x^2 - 2x - 1
  CHECK(minimal_polynomial(lambda(7).element()) == ints({-1, -2, 1, 1}));
  // tan(pi/8) = sqrt2 - 1
  CHECK(minimal_polynomial(tan_pi(8, 1).element()) == ints({-1, 2, 1}));
  // tan(pi/6): 3x^2 - 1 once cleared
  CHECK(minimal_polynomial(tan_pi(6, 1).element()).integer_form() == std::vector<Integer>{-1, 0, 3});
  // tan(pi/12) = 2 - sqrt3
  CHECK(minimal_polynomial(tan_pi(12, 1).element()) == ints({1, -4, 1}));
  CHECK(minimal_polynomial(FieldElement::rational(5, Rational(2, 3))).degree() == 1);
}

TEST_CASE("degree table N = 3..20") {
  const int cos_deg[] = {1, 1, 2, 1, 3, 2, 3, 2, 5, 2, 6, 3, 4, 4, 8, 3, 9, 4};
  const int tan_deg[] = {2, 1, 4, 2, 6, 2, 6, 4, 10, 2, 12, 6, 8, 4, 16, 6, 18, 4};
  for (int N = 3; N <= 20; ++N) {
    CAPTURE(N);
    CHECK(minimal_polynomial(cos_2pi(N).element()).degree() == cos_deg[N - 3]);
    CHECK(minimal_polynomial(tan_pi(N, 1).element()).degree() == tan_deg[N - 3]);
  }
}

TEST_CASE("primitive basis decompositions") {
  auto d9 = decompose_in_primitive_basis(9, 3);
  CHECK(d9.size() == 3);
  CHECK(d9[1] == Rational(1, 3));
  CHECK(d9[2] == Rational(-1, 3));
  CHECK(d9[4] == Rational(1, 3));
  auto d8 = decompose_in_primitive_basis(8, 2);
  CHECK(d8[1] == Rational(-1, 2));
  CHECK(d8[3] == Rational(1, 2));
  auto d6 = decompose_in_primitive_basis(6, 2);
  CHECK(d6.size() == 1);
  CHECK(d6[1] == 3);
  // a primitive index decomposes onto itself
  auto d7 = decompose_in_primitive_basis(7, 2);
  CHECK(d7[2] == 1);
  CHECK(d7[1] == 0);
}

TEST_CASE("generator expansions") {
  // sqrt3 over tan(pi/15)
  CHECK(strs(express_in_generator(tan_pi(15, 5), tan_pi(15, 1))) ==
        std::vector<std::string>{"0", "395/32", "0", "-3075/32", "0", "2297/32", "0", "-25/32"});
  CHECK(strs(express_in_generator(scale(24, 9), gen_scale(24))) ==
        std::vector<std::string>{"9/64", "-321/64", "179/64", "-3/64"});
  CHECK_THROWS_AS(express_in_generator(tan_pi(8, 1), RealElement::rational(8, 2)), std::domain_error);
}

TEST_CASE("N = 27 expansions of scale[9]") {
  RealElement t = tan_pi(27, 1);
  CHECK(strs(express_in_generator(scale(27, 9), t * t)) ==
        std::vector<std::string>{"6435/32768", "-88311/8192", "420353/4096", "-2535207/8192", "5678187/16384",
                                 "-3843943/24576", "53727/2048", "-11253/8192", "143/32768"});
  CHECK(strs(express_in_generator(scale(27, 9), gen_scale(27))) ==
        std::vector<std::string>{"35/384", "-671/192", "171/64", "871/64", "109/16", "-253/192", "-241/192",
                                 "-25/192", "5/384"});
}

TEST_CASE("norms and units") {
  auto u = norm_and_unit_test(gen_scale(7));
  CHECK(u.algebraic_integer);
  CHECK(u.unit);
  auto v = norm_and_unit_test(gen_scale(6));
  CHECK_FALSE(v.algebraic_integer);
  CHECK(v.minpoly.integer_form() == std::vector<Integer>{-1, 3});
  auto w = norm_and_unit_test(RealElement::rational(4, 2));
  CHECK(w.algebraic_integer);
  CHECK_FALSE(w.unit);
  // lambda_8 = sqrt2 is an integer but not a unit
  CHECK_FALSE(norm_and_unit_test(lambda(8)).unit);
}

TEST_CASE("rank over Q") {
  QMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(m) == 2);
  auto x = solve_unique({{2, 0}, {0, 4}}, {1, 1});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 4));
  CHECK_FALSE(solve_unique({{1, 1}, {1, 1}}, {1, 2}));
}
