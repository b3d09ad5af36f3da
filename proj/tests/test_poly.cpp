#include <doctest.h>

#include "gen.hpp"
#include "hpd/poly.hpp"

using namespace hpd;
using hpdtest::Gen;

TEST_CASE("gaussian rational arithmetic is exact and canonical") {
  GaussianRational a = GaussianRational::fraction(2, 4);
  CHECK(a.re() == mpq_class(1, 2));
  GaussianRational i = GaussianRational::imaginary_unit();
  CHECK((i * i) == GaussianRational(-1));
  CHECK((a / a) == GaussianRational(1));
  GaussianRational b(mpq_class(3, 7), mpq_class(-2, 5));
  CHECK(b.conj().conj() == b);
  CHECK((b * b.conj()).is_real());
  CHECK_THROWS_AS(b / GaussianRational(0), Error);
  CHECK_THROWS_AS(GaussianRational::fraction(1, 0), Error);
}

TEST_CASE("polynomial ring axioms on random triples") {
  Gen g(11);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 1 + g.upto(2);
    Poly a = g.poly(n, 3, 4);
    Poly b = g.poly(n, 3, 4);
    Poly c = g.poly(n, 3, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly(n));
    CHECK(a * Poly(n) == Poly(n));
    CHECK(a * Poly::constant(n, GaussianRational(1)) == a);
  }
}

TEST_CASE("zero coefficients are never stored") {
  Gen g(12);
  for (int rep = 0; rep < 40; ++rep) {
    Poly a = g.poly(2, 3, 4);
    Poly d = a - a;
    CHECK(d.term_count() == 0);
    CHECK(d.is_zero());
    const Poly s = a + a;
    for (const auto& [m, c] : s.terms()) CHECK(!c.is_zero());
  }
}

TEST_CASE("conjugation is a multiplicative involution swapping z and w") {
  Gen g(13);
  for (int rep = 0; rep < 40; ++rep) {
    Poly a = g.poly(2, 3, 4);
    Poly b = g.poly(2, 3, 4);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  Poly z1 = Poly::variable(2, 0);
  Poly w1 = Poly::variable(2, 0, true);
  CHECK(z1.conj() == w1);
  Poly iz = z1.scaled(GaussianRational::imaginary_unit());
  CHECK(iz.conj() == w1.scaled(-GaussianRational::imaginary_unit()));
}

TEST_CASE("grlex printing order: total degree first, then largest variable") {
  // z1 < z2 < w1 < w2; terms print in descending order.
  Poly p = parse_poly(2, "z1 + w2 + z2^2 + w1");
  CHECK(p.str() == "z2^2 + w2 + w1 + z1");
  CHECK(parse_poly(2, "1 + z1*w1 + z1").str() == "z1*w1 + z1 + 1");
}

TEST_CASE("printing round-trips through the parser") {
  Gen g(14);
  for (int rep = 0; rep < 80; ++rep) {
    const std::size_t n = 1 + g.upto(3);
    Poly a = g.poly(n, 4, 5);
    CHECK(parse_poly(n, a.str()) == a);
  }
  CHECK(Poly(3).str() == "0");
  CHECK(parse_poly(3, "0") == Poly(3));
}

TEST_CASE("parser handles the documented grammar") {
  CHECK(parse_poly(2, "3/2*z1^3*w2").str() == "3/2*z1^3*w2");
  CHECK(parse_poly(2, " - z1 ").str() == "-z1");
  CHECK(parse_poly(2, "i*w2").coeff(Monomial{0, 0, 0, 1}) ==
        GaussianRational::imaginary_unit());
  CHECK(parse_poly(2, "(1+2*i)*z1").coeff(Monomial{1, 0, 0, 0}) ==
        GaussianRational(mpq_class(1), mpq_class(2)));
  CHECK(parse_poly(2, "(-i)*z1") == Poly::variable(2, 0).scaled(-GaussianRational::imaginary_unit()));
  CHECK(parse_poly(2, "(2/3*i)*z1") ==
        Poly::variable(2, 0).scaled(GaussianRational(mpq_class(0), mpq_class(2, 3))));
  CHECK(parse_poly(2, "(3-i)*z2").coeff(Monomial{0, 1, 0, 0}) ==
        GaussianRational(mpq_class(3), mpq_class(-1)));
  CHECK(parse_poly(1, "z1*z1*z1") == parse_poly(1, "z1^3"));
  CHECK_THROWS_AS(parse_poly(2, "z3"), ParseError);
  CHECK_THROWS_AS(parse_poly(2, "z1 +"), ParseError);
  CHECK_THROWS_AS(parse_poly(2, "q1"), ParseError);
  CHECK_THROWS_AS(parse_poly(2, "1/0"), ParseError);
  CHECK_THROWS_AS(parse_poly(2, ""), ParseError);
}

TEST_CASE("partial derivatives satisfy the product rule") {
  Gen g(15);
  for (int rep = 0; rep < 40; ++rep) {
    Poly a = g.poly(2, 3, 4);
    Poly b = g.poly(2, 3, 4);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK((a * b).dz(i) == a.dz(i) * b + a * b.dz(i));
      CHECK((a * b).dw(i) == a.dw(i) * b + a * b.dw(i));
    }
  }
  CHECK(parse_poly(2, "z1^3*w2").dz(0) == parse_poly(2, "3*z1^2*w2"));
  CHECK(parse_poly(2, "z1^3*w2").dw(1) == parse_poly(2, "z1^3"));
  CHECK(parse_poly(2, "z1^3*w2").dw(0).is_zero());
}

TEST_CASE("holomorphicity predicates look only at the right block") {
  CHECK(parse_poly(2, "z1^2*z2 + 4").is_holomorphic());
  CHECK(!parse_poly(2, "z1*w1").is_holomorphic());
  CHECK(parse_poly(2, "w1^2").is_antiholomorphic());
  CHECK(parse_poly(2, "7").is_holomorphic());
  CHECK(parse_poly(2, "7").is_antiholomorphic());
}

TEST_CASE("exact division recovers cofactors and rejects non-divisors") {
  Gen g(16);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 1 + g.upto(2);
    Poly a = g.poly(n, 3, 4);
    Poly b = g.nonzero_poly(n, 3, 3);
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  Poly z1 = Poly::variable(2, 0);
  Poly z2 = Poly::variable(2, 1);
  CHECK(!z1.divide_exact(z2).has_value());
  CHECK(!(z1 * z1 + Poly::constant(2, GaussianRational(1))).divide_exact(z1).has_value());
  auto q = parse_poly(2, "z1^2 - z2^2").divide_exact(parse_poly(2, "z1 - z2"));
  REQUIRE(q.has_value());
  CHECK(*q == parse_poly(2, "z1 + z2"));
}

TEST_CASE("degree and coefficient accessors") {
  Poly p = parse_poly(2, "3*z1^2*w2 - z2");
  CHECK(p.total_degree() == 3);
  CHECK(p.coeff(Monomial{2, 0, 0, 1}) == GaussianRational(3));
  CHECK(p.coeff(Monomial{0, 0, 0, 0}).is_zero());
  CHECK(!p.is_constant());
  CHECK(Poly::constant(2, GaussianRational(5)).constant_value() == GaussianRational(5));
  CHECK(Poly(2).total_degree() == 0);
  CHECK(Poly::w_degree(Monomial{2, 0, 1, 3}, 2) == 4);
}

TEST_CASE("times_variable agrees with multiplication by the variable") {
  Gen g(17);
  for (int rep = 0; rep < 30; ++rep) {
    Poly a = g.poly(2, 3, 4);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(a.times_variable(i, false) == a * Poly::variable(2, i, false));
      CHECK(a.times_variable(i, true) == a * Poly::variable(2, i, true));
    }
  }
}
