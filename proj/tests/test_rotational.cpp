#include <doctest.h>

#include "scmc/rotational.hpp"

using namespace scmc;

TEST_CASE("closed-form constants") {
  CHECK(std::abs(rot::beta0(0.0) - M_PI / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(rot::beta1(0.0, 4.0) - M_PI / 2.0) < 1e-14);
  cplx l = rot::sym_point(1.0);
  CHECK(std::abs(l - cplx(1.0, -1.0) / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(std::abs(l) - 1.0) < 1e-15);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(rot::genus0(-0.1), DomainError);
  CHECK_THROWS_AS(rot::genus1(1.0, 1.9), DomainError);
  CHECK_THROWS_AS(rot::genus1(NAN, 3.0), DomainError);
  CHECK_THROWS_AS(rot::embed_genus0_to_1(rot::genus1(1.0, 3.0)), PreconditionError);
}

TEST_CASE("both genus 0 branches are spectral data") {
  for (double H : {0.0, 0.5, 2.0}) {
    SpectralData e = rot::genus0(H), n = rot::genus0(H, true);
    CHECK(check_conditions(e, 1e-9).all_pass());
    CHECK(check_conditions(n, 1e-9).all_pass());
    CHECK(std::abs(mean_curvature(n) - H) < 1e-12);
    // b = -i beta' (lambda + 1) / 8 on the non-embedded branch
    double bp = rot::beta0(H, true);
    CHECK(max_coeff_diff(n.b, Poly{cplx(0.0, -bp / 8.0), cplx(0.0, -bp / 8.0)}) < 1e-14);
  }
}

TEST_CASE("embedding rot0 lands on alpha = 2 up to the sign of b") {
  for (double H : {0.0, 1.0, 5.0}) {
    SpectralData e = rot::embed_genus0_to_1(rot::genus0(H));
    SpectralData r = rot::genus1(H, 2.0);
    CHECK(max_coeff_diff(e.a, r.a) < 1e-14);
    CHECK(max_coeff_diff(e.b, -r.b) < 1e-14);
    CHECK(std::abs(e.lambda1 - r.lambda1) < 1e-15);
  }
}

TEST_CASE("reflect_minus twice returns the data up to the sign of b") {
  for (int g : {0, 1}) {
    SpectralData d = g == 0 ? rot::genus0(0.3) : rot::genus1(0.3, 3.0);
    SpectralData t = rot::reflect_minus(rot::reflect_minus(d));
    CHECK(max_coeff_diff(t.a, d.a) < 1e-15);
    CHECK(std::min(max_coeff_diff(t.b, d.b), max_coeff_diff(t.b, -d.b)) < 1e-15);
    CHECK(std::abs(t.lambda1 - d.lambda1) < 1e-15);
  }
}

TEST_CASE("membership classification") {
  CHECK(rot::classify_membership(rot::genus0(1.0), 1e-9).kind == rot::Membership::Rot0);
  CHECK(rot::classify_membership(rot::genus0(0.0), 1e-9).kind == rot::Membership::Boundary);
  CHECK(rot::classify_membership(rot::genus1(1.0, 3.0), 1e-9).kind == rot::Membership::Rot1);
  CHECK(rot::classify_membership(rot::genus1(1.0, 2.0), 1e-9).kind == rot::Membership::Boundary);
  rot::Membership m = rot::classify_membership(rot::genus1(2.0, 4.0), 1e-9);
  CHECK(std::abs(m.H - 2.0) < 1e-12);
  CHECK(std::abs(m.alpha - 4.0) < 1e-12);
  SpectralData off = rot::genus1(1.0, 3.0);
  off.b = off.b * cplx(1.1);
  CHECK(rot::classify_membership(off, 1e-9).kind == rot::Membership::Outside);
  CHECK(std::string(rot::to_string(rot::Membership::Rot1)) == "Rot1");
}

TEST_CASE("parameter sweep agrees with the serial sweep") {
  std::vector<double> Hs{0.0, 1.0}, as{2.5, 3.0};
  auto p = rot::sweep(Hs, as, 1e-9, true), s = rot::sweep(Hs, as, 1e-9, false);
  REQUIRE(p.size() == 6);
  for (size_t k = 0; k < p.size(); ++k) {
    CHECK(p[k].report.all_pass());
    CHECK(p[k].report.max_residual() == s[k].report.max_residual());
  }
}
