#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>

#include "fricke/errors.hpp"
#include "fricke/polynomial.hpp"
#include "fricke/rng.hpp"

using namespace fricke;

namespace {

TracePoly vx() { return TracePoly::variable(Var::x); }
TracePoly vy() { return TracePoly::variable(Var::y); }
TracePoly vz() { return TracePoly::variable(Var::z); }

TracePoly kappa() {
  return vx() * vx() + vy() * vy() + vz() * vz() - vx() * vy() * vz() -
         TracePoly(2);
}

TracePoly random_poly(Rng& rng, int max_terms = 5, int max_exp = 3) {
  TracePoly p;
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    TracePoly t(static_cast<long long>(rng.below(2001)) - 1000);
    for (Var v : {Var::x, Var::y, Var::z}) {
      t *= TracePoly::variable(v,
                               static_cast<std::uint16_t>(rng.below(max_exp)));
    }
    p += t;
  }
  return p;
}

std::map<Var, Complex> random_assignment(Rng& rng) {
  return {{Var::x, rng.box()}, {Var::y, rng.box()}, {Var::z, rng.box()}};
}

// independent expansion of h(u) at u = zeta + 1/zeta as a Laurent polynomial,
// via binomial powers; used as the exact round-trip oracle
LaurentPoly expand_in_zeta(const TracePoly& h) {
  const LaurentPoly zeta_plus_inv =
      LaurentPoly::term(1, TracePoly(1)) + LaurentPoly::term(-1, TracePoly(1));
  LaurentPoly out;
  for (const auto& [mono, coeff] : h.terms()) {
    Monomial rest = mono;
    const int upow = rest.exp[static_cast<int>(Var::u)];
    rest.exp[static_cast<int>(Var::u)] = 0;
    TracePoly base;
    base += TracePoly(coeff);
    // reattach the non-u part of the monomial
    TracePoly rest_poly(1);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (rest.exp[i] > 0) {
        rest_poly *= TracePoly::variable(static_cast<Var>(i), rest.exp[i]);
      }
    }
    LaurentPoly term = LaurentPoly::term(0, base * rest_poly);
    for (int k = 0; k < upow; ++k) {
      term = term * zeta_plus_inv;
    }
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("ring identities on small examples") {
  CHECK((vx() * vy() - vz()) + vz() == vx() * vy());
  CHECK((vx() + vy()) * (vx() - vy()) == vx() * vx() - vy() * vy());
  const TracePoly f = vx() * vx() - TracePoly(2);
  CHECK(f * TracePoly(1) == f);
}

TEST_CASE("evaluation examples") {
  const std::map<Var, Complex> at222 = {
      {Var::x, 2.0}, {Var::y, 2.0}, {Var::z, 2.0}};
  CHECK(kappa().eval(at222) == Complex{2.0, 0.0});  // 4+4+4-8-2
  CHECK((vx() * vx() - TracePoly(2)).eval({{Var::x, 0.0}}) ==
        Complex{-2.0, 0.0});
  CHECK((vx() * vy() - vz())
            .eval({{Var::x, 3.0}, {Var::y, 4.0}, {Var::z, 5.0}}) ==
        Complex{7.0, 0.0});
  CHECK_THROWS_AS(kappa().eval(std::map<Var, Complex>{{Var::x, 1.0}}),
                  UnboundVariable);
}

TEST_CASE("canonical formatting") {
  const TracePoly p = vx() * vx() * vy() - TracePoly(2) * vz() + TracePoly(2);
  CHECK(p.str() == "x^2*y - 2*z + 2");
  // graded-lex descending puts the degree-3 monomial first
  CHECK(kappa().str() == "-x*y*z + x^2 + y^2 + z^2 - 2");
  CHECK(TracePoly().str() == "0");
  CHECK(TracePoly(-7).str() == "-7");
  CHECK((vx() - vx()).str() == "0");
}

TEST_CASE("parse round trips and errors") {
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x^2*y - 2*z + 2") ==
        vx() * vx() * vy() - TracePoly(2) * vz() + TracePoly(2));
  CHECK(parse_poly("2x^2y") == TracePoly(2) * vx() * vx() * vy());
  CHECK(parse_poly("t12*t3 - t123") ==
        TracePoly::variable(Var::t12) * TracePoly::variable(Var::t3) -
            TracePoly::variable(Var::t123));
  CHECK(parse_poly("-x + x") == TracePoly());
  CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_poly("w"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x +"), ParseError);

  Rng rng(77001);
  for (int i = 0; i < 200; ++i) {
    const TracePoly p = random_poly(rng);
    CHECK(parse_poly(p.str()) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(55002);
  for (int i = 0; i < 100; ++i) {
    const TracePoly a = random_poly(rng);
    const TracePoly b = random_poly(rng);
    const TracePoly c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a - a == TracePoly());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(55003);
  for (int i = 0; i < 200; ++i) {
    const TracePoly a = random_poly(rng);
    const TracePoly b = random_poly(rng);
    const auto at = random_assignment(rng);
    const Complex lhs = (a * b).eval(at);
    const Complex rhs = a.eval(at) * b.eval(at);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("zeta power sums") {
  const TracePoly u = TracePoly::variable(Var::u);
  CHECK(zeta_power_sum(0) == TracePoly(2));
  CHECK(zeta_power_sum(1) == u);
  CHECK(zeta_power_sum(2) == u * u - TracePoly(2));
  CHECK(zeta_power_sum(3) == u * u * u - TracePoly(3) * u);

  // numeric cross-check of p3 at zeta = 2 + 0.5i
  const Complex zeta{2.0, 0.5};
  const Complex uval = zeta + 1.0 / zeta;
  const Complex direct = std::pow(zeta, 3) + std::pow(zeta, -3);
  const Complex via = zeta_power_sum(3).eval({{Var::u, uval}});
  CHECK(std::abs(direct - via) <= 1e-12 * (1.0 + std::abs(direct)));
}

TEST_CASE("symmetrize_laurent examples") {
  const LaurentPoly one_pair =
      LaurentPoly::term(1, TracePoly(1)) + LaurentPoly::term(-1, TracePoly(1));
  CHECK(symmetrize_laurent(one_pair) == TracePoly::variable(Var::u));

  const LaurentPoly two_pair =
      LaurentPoly::term(2, TracePoly(1)) + LaurentPoly::term(-2, TracePoly(1));
  CHECK(symmetrize_laurent(two_pair) == zeta_power_sum(2));

  CHECK_THROWS_AS(symmetrize_laurent(LaurentPoly::term(1, TracePoly(1))),
                  NotSymmetric);
  CHECK_THROWS_AS(
      symmetrize_laurent(LaurentPoly::term(2, vx()) +
                         LaurentPoly::term(-2, vy())),
      NotSymmetric);
}

TEST_CASE("symmetrization round trips exactly and numerically") {
  // exact: expanding h(zeta + 1/zeta) back out recovers F
  Rng rng(55004);
  for (int i = 0; i < 60; ++i) {
    LaurentPoly f = LaurentPoly::term(0, random_poly(rng, 3, 2));
    const int top = 1 + static_cast<int>(rng.below(6));
    for (int e = 1; e <= top; ++e) {
      const TracePoly c = random_poly(rng, 3, 2);
      f += LaurentPoly::term(e, c);
      f += LaurentPoly::term(-e, c);
    }
    REQUIRE(f.is_symmetric());
    const TracePoly h = symmetrize_laurent(f);
    CHECK(expand_in_zeta(h) == f);

    // numeric agreement at a random nonzero zeta
    Complex zeta = rng.box();
    while (std::abs(zeta) < 0.1) {
      zeta = rng.box();
    }
    auto at = random_assignment(rng);
    const Complex direct = f.eval(zeta, at);
    at[Var::u] = zeta + 1.0 / zeta;
    const Complex via = h.eval(at);
    CHECK(std::abs(direct - via) <= 1e-9 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("degree and variables") {
  const TracePoly p = vx() * vy() * vz() - TracePoly(11);
  CHECK(p.total_degree() == 3);
  CHECK(p.variables() == std::vector<Var>{Var::x, Var::y, Var::z});
  CHECK(TracePoly().total_degree() == 0);
  CHECK(TracePoly(5).variables().empty());
}
