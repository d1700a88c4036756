#include <doctest.h>

#include <random>

#include "scmc/poly.hpp"

using namespace scmc;

namespace {

Poly random_poly(std::mt19937& rng, int deg) {
  std::normal_distribution<double> n;
  std::vector<cplx> c(deg + 1);
  for (cplx& v : c) v = {n(rng), n(rng)};
  return Poly(c);
}

}  // namespace

TEST_CASE("poly arithmetic and evaluation") {
  Poly p{1.0, 2.0, 3.0};
  CHECK(p.degree() == 2);
  CHECK(p(2.0) == cplx(17.0));
  CHECK(p.derivative() == Poly({2.0, 6.0}));
  CHECK((p - p).is_zero());
  CHECK(Poly({1.0, 0.0, 0.0}).degree() == 0);
  CHECK(Poly::from_roots({1.0, -1.0}) == Poly({-1.0, 0.0, 1.0}));
  auto [q, r] = divmod(Poly({-1.0, 0.0, 1.0}), Poly({1.0, 1.0}));
  CHECK(max_coeff_diff(q, Poly({-1.0, 1.0})) < 1e-15);
  CHECK(r.max_abs_coeff() < 1e-15);
}

TEST_CASE("divmod reconstructs the numerator") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Poly n = random_poly(rng, 6), d = random_poly(rng, 2);
    auto [q, r] = divmod(n, d);
    CHECK(r.degree() < 2);
    CHECK(max_coeff_diff(q * d + r, n) < 1e-10);
  }
}

TEST_CASE("conjugate reflection is an involution") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + t % 5;
    Poly p = random_poly(rng, n);
    CHECK(max_coeff_diff(conjugate_reflect(conjugate_reflect(p, n), n), p) < 1e-15);
    for (cplx z : {cplx(0.3, 0.7), cplx(-1.2, 0.1)}) {
      cplx lhs = conjugate_reflect(p, n)(z);
      cplx rhs = std::pow(z, n) * std::conj(p(1.0 / std::conj(z)));
      CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
  CHECK_THROWS_AS(conjugate_reflect(Poly{1.0, 1.0, 1.0}, 1), DegreeError);
}

TEST_CASE("projections land in their classes and are idempotent") {
  std::mt19937 rng(3);
  for (int g = 0; g < 4; ++g) {
    Poly a = project_a(random_poly(rng, 2 * g), g);
    Poly b = project_b(random_poly(rng, g + 1), g);
    Poly c = project_c(random_poly(rng, g + 1), g);
    CHECK(check_reality(b, RealityClass::b(g), 1e-12).pass);
    CHECK(check_reality(c, RealityClass::c(g), 1e-12).pass);
    CHECK(check_reality(a, RealityClass::a(g), 1e-12).residual < 1e-12);
    CHECK(max_coeff_diff(project_a(a, g), a) < 1e-15);
    CHECK(max_coeff_diff(project_b(b, g), b) < 1e-15);
    // i maps class B onto class C
    CHECK(check_reality(b * cplx(0.0, 1.0), RealityClass::c(g), 1e-12).pass);
  }
}

TEST_CASE("class A sign condition and class P normalization") {
  CHECK(check_reality(Poly{-1.0 / 16.0}, RealityClass::a(0), 1e-12).pass);
  CHECK_FALSE(check_reality(Poly{1.0 / 16.0}, RealityClass::a(0), 1e-12).pass);
  Poly a1{-1.0 / 16.0, -3.0 / 16.0, -1.0 / 16.0};
  CHECK(check_reality(a1, RealityClass::a(1), 1e-12).pass);
  // alpha < 2 changes sign on the circle
  CHECK_FALSE(check_reality(Poly{-1.0 / 16.0, -1.0 / 16.0, -1.0 / 16.0}, RealityClass::a(1), 1e-12).pass);
  CHECK(check_reality(Poly{1.0, 1.0}, RealityClass::p(1), 1e-12).pass);
  CHECK_FALSE(check_reality(Poly{2.0, 2.0}, RealityClass::p(1), 1e-12).pass);
  CHECK_FALSE(check_reality(Poly{1.0, 1.0, 1.0}, RealityClass::b(0), 1e-12).pass);
}

TEST_CASE("roots with multiplicities") {
  Poly p = Poly::from_roots({1.0, 1.0, -2.0});
  auto rs = roots(p);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].multiplicity == 1);
  CHECK(std::abs(rs[0].value + 2.0) < 1e-12);
  CHECK(rs[1].multiplicity == 2);
  CHECK(std::abs(rs[1].value - 1.0) < 1e-7);
  CHECK(roots(Poly{3.0}).empty());
  CHECK_THROWS_AS(roots(Poly{}), DegenerateError);
  CHECK(roots_flat(p).size() == 3);
}

TEST_CASE("reflection pairing of class A roots") {
  Poly a{-1.0 / 16.0, -3.0 / 16.0, -1.0 / 16.0};
  ReflectPairing rp = reflect_pairing(a, 1);
  REQUIRE(rp.pairs.size() == 1);
  CHECK(rp.unimodular.empty());
  double r = (-3.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(rp.pairs[0].first - r) < 1e-12);
  CHECK(std::abs(rp.pairs[0].second - 1.0 / r) < 1e-12);

  Poly a2{-1.0 / 16.0, -2.0 / 16.0, -1.0 / 16.0};
  ReflectPairing rp2 = reflect_pairing(a2, 1);
  REQUIRE(rp2.unimodular.size() == 1);
  CHECK(rp2.unimodular[0].multiplicity == 2);
  CHECK_THROWS_AS(reflect_pairing(Poly{-0.5, 1.0, 0.0, 0.0, 1.0}, 2), RealityViolation);
}

TEST_CASE("class P polynomials from reflection-closed root sets") {
  cplx beta(0.5, 0.2);
  Poly p = class_p_from_roots({beta, 1.0 / std::conj(beta)});
  CHECK(check_reality(p, RealityClass::p(2), 1e-12).pass);
  Poly q = class_p_from_roots({std::polar(1.0, 0.4)});
  CHECK(check_reality(q, RealityClass::p(1), 1e-12).pass);
  CHECK(std::abs(q(std::polar(1.0, 0.4))) < 1e-14);
}
