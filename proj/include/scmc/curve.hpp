#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scmc/poly.hpp"

namespace scmc {

// (a, b, lambda1) with lambda2 = 1/lambda1.
struct SpectralData {
  int g = 0;
  Poly a;
  Poly b;
  cplx lambda1{0.0, -1.0};

  cplx lambda2() const { return 1.0 / lambda1; }
};

struct CurvePoint {
  cplx lambda;
  cplx nu;
};

using SheetPath = std::vector<CurvePoint>;

inline constexpr double kBranchGuard = 1e-6;
inline constexpr double kQuadTol = 1e-10;

CurvePoint sigma(const CurvePoint& p);
CurvePoint rho(const CurvePoint& p, int g);
CurvePoint eta(const CurvePoint& p, int g);

struct Quadrature {
  cplx value;
  double error = 0.0;
};

// Spectral curve nu^2 = a(lambda)/lambda with the Abelian differential
// dh = b dlambda / (nu lambda^2). Holds the branch points of one SpectralData.
class Curve {
 public:
  explicit Curve(SpectralData d, double branch_guard = kBranchGuard);

  const SpectralData& data() const { return d_; }
  const std::vector<Root>& branch_roots() const { return roots_; }
  double branch_guard() const { return guard_; }

  // from the factored form, accurate near multiple roots of a
  cplx nu_squared(cplx l) const;
  bool is_singular(cplx l) const;

  SheetPath nu_continue(const std::vector<cplx>& samples, const CurvePoint& seed) const;
  // straight segment, sampled so that sheet continuation is unambiguous
  std::vector<cplx> segment_samples(cplx from, cplx to) const;
  Quadrature integrate_dh(const SheetPath& path) const;

  // Anchor of h: a root of a of odd multiplicity when one exists, any root
  // otherwise; for g = 0 the point b(0)/b'(0) where the odd primitive vanishes.
  const CurvePoint& base() const { return base_; }

  // Point over `target` continued from the base along a straight segment,
  // together with h there.
  struct Evaluation {
    CurvePoint point;
    cplx h;
    double error = 0.0;
  };
  Evaluation evaluate(cplx target) const;
  cplx h_at(cplx target) const { return evaluate(target).h; }

  // circle samples lambda_k = exp(i(theta0 + 2 pi k / n)), h accumulated along the circle
  std::vector<Evaluation> circle_scan(int n, double theta0 = 0.0) const;

 private:
  Quadrature chord(const CurvePoint& p, const CurvePoint& q) const;
  cplx pick(cplx l, cplx ref) const;

  SpectralData d_;
  double guard_;
  std::vector<Root> roots_;
  CurvePoint base_;
};

SheetPath nu_continue(const SpectralData& d, const std::vector<cplx>& samples, const CurvePoint& seed);
Quadrature integrate_dh(const SpectralData& d, const SheetPath& path);
// Delta = 2 cosh(h) with h continued from a base point whose h value is known
cplx delta_eval(const SpectralData& d, cplx lambda, const CurvePoint& base, cplx h_base);

double distance_to_pi_i_z(cplx h);
double short_arc_length(const SpectralData& d);
double mean_curvature(const SpectralData& d);

struct ConditionReport {
  struct Item {
    bool pass = false;
    double residual = 0.0;
  };
  Item reality;      // (i)
  Item segments;     // (ii)
  Item branch_values;// (iii)
  Item sym_values;   // (iv)
  Item normalization;// (v)

  double residual_a = 0.0, residual_b = 0.0, sign_min = 0.0;
  std::vector<double> segment_residuals;
  std::vector<cplx> roots_of_a;
  std::vector<cplx> h_roots;
  cplx h1, h2;         // h at lambda1, lambda2
  long m1 = 0, m2 = 0; // nearest integers to h / (pi i)
  cplx f1, f2;         // sinh(h)/nu at the Sym points
  cplx g1, g2;         // cosh(h) at the Sym points
  double abs_a0_defect = 0.0;
  double sym_defect = 0.0;

  bool all_pass() const {
    return reality.pass && segments.pass && branch_values.pass && sym_values.pass && normalization.pass;
  }
  double max_residual() const;
};

ConditionReport check_conditions(const SpectralData& d, double tol);

}  // namespace scmc
