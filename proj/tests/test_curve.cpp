#include <doctest.h>

#include <random>

#include "scmc/rotational.hpp"

using namespace scmc;

namespace {

CurvePoint on_curve(const SpectralData& d, cplx l) { return {l, std::sqrt(d.a(l) / l)}; }

bool is_on_curve(const SpectralData& d, const CurvePoint& p) {
  return std::abs(p.nu * p.nu - d.a(p.lambda) / p.lambda) < 1e-12 * (1.0 + std::abs(p.nu * p.nu));
}

cplx h_along(const Curve& c, const std::vector<cplx>& way) {
  CurvePoint cur = c.base();
  cplx h = 0.0;
  for (size_t k = 0; k + 1 < way.size(); ++k) {
    auto s = c.segment_samples(way[k], way[k + 1]);
    SheetPath p = c.nu_continue(s, cur);
    h += c.integrate_dh(p).value;
    cur = p.back();
  }
  return h;
}

}  // namespace

TEST_CASE("involutions preserve the curve and square to the identity") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int g : {0, 1}) {
    SpectralData d = g == 0 ? rot::genus0(0.7) : rot::genus1(0.7, 3.5);
    for (int t = 0; t < 20; ++t) {
      CurvePoint p = on_curve(d, {u(rng), u(rng)});
      for (CurvePoint q : {sigma(p), rho(p, g), eta(p, g)}) CHECK(is_on_curve(d, q));
      for (CurvePoint q : {sigma(sigma(p)), rho(rho(p, g), g), eta(eta(p, g), g)}) {
        CHECK(std::abs(q.lambda - p.lambda) < 1e-12);
        CHECK(std::abs(q.nu - p.nu) < 1e-12);
      }
    }
  }
}

TEST_CASE("quadrature matches the genus 0 closed form") {
  for (double H : {0.0, 1.0, 3.0}) {
    SpectralData d = rot::genus0(H);
    Curve c(d);
    CHECK(std::abs(c.base().lambda + 1.0) < 1e-14);
    for (cplx l : {cplx(0.3, 0.4), cplx(2.0, -1.0), d.lambda1, cplx(-0.2, -0.9)}) {
      Curve::Evaluation e = c.evaluate(l);
      CHECK(std::abs(e.h - rot::genus0_h(d, e.point)) < 1e-8);
    }
  }
}

TEST_CASE("quadrature matches the genus 1 closed form h = 4 beta1 nu") {
  for (double alpha : {2.5, 3.0, 10.0}) {
    SpectralData d = rot::genus1(0.5, alpha);
    double b1 = rot::beta1(0.5, alpha);
    Curve c(d);
    for (cplx l : {cplx(0.3, 0.4), cplx(-2.0, 1.0), d.lambda1, d.lambda2()}) {
      Curve::Evaluation e = c.evaluate(l);
      cplx closed = rot::genus1_h(b1, e.point);
      // the base root is fixed, only the sheet sign is free
      CHECK(std::min(std::abs(e.h - closed), std::abs(e.h + closed)) < 1e-8);
    }
  }
}

TEST_CASE("h is invariant under homotopy of the path") {
  SpectralData d = rot::genus1(1.0, 4.0);
  Curve c(d);
  cplx target(0.4, 0.8);
  cplx direct = h_along(c, {c.base().lambda, target});
  for (cplx via : {cplx(0.2, 0.3), cplx(-0.5, 0.9), cplx(1.0, 1.0)}) {
    cplx bent = h_along(c, {c.base().lambda, via, target});
    CHECK(std::abs(bent - direct) < 1e-8);
  }
}

TEST_CASE("sheet continuation errors") {
  SpectralData d = rot::genus1(1.0, 3.0);
  Curve c(d);
  cplx r = c.branch_roots()[0].value;
  std::vector<cplx> through{r - 0.1, r, r + 0.1};
  CHECK_THROWS_AS(c.nu_continue(through, on_curve(d, r - 0.1)), BranchProximity);
  std::vector<cplx> pole{cplx(0.1, 0.0), cplx(0.0, 0.0), cplx(-0.1, 0.0)};
  CHECK_THROWS_AS(c.nu_continue(pole, on_curve(d, 0.1)), PoleError);
  CHECK_THROWS_AS(Curve(SpectralData{0, Poly{}, Poly{1.0}, 1.0}), DegenerateError);
}

TEST_CASE("rotational data passes all conditions and b corruption fails (iv)") {
  for (double H : {0.0, 1.0}) {
    CHECK(check_conditions(rot::genus0(H), 1e-9).all_pass());
    CHECK(check_conditions(rot::genus1(H, 3.0), 1e-9).all_pass());
  }
  SpectralData bad = rot::genus1(1.0, 3.0);
  bad.b = bad.b * cplx(1.01);
  ConditionReport r = check_conditions(bad, 1e-9);
  CHECK(r.reality.pass);
  CHECK_FALSE(r.sym_values.pass);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("Delta at the Sym points and arc lengths") {
  SpectralData d = rot::genus1(0.0, 3.0);
  Curve c(d);
  for (cplx l : {d.lambda1, d.lambda2()}) {
    cplx D = 2.0 * std::cosh(c.h_at(l));
    CHECK(std::min(std::abs(D - 2.0), std::abs(D + 2.0)) < 1e-9);
  }
  CHECK(std::abs(short_arc_length(d) - M_PI) < 1e-12);
  CHECK(std::abs(mean_curvature(rot::genus0(2.5)) - 2.5) < 1e-12);
  CHECK(distance_to_pi_i_z(cplx(0.0, 3.0 * M_PI)) < 1e-12);
}
