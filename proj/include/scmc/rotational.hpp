#pragma once

#include "scmc/curve.hpp"

namespace scmc::rot {

double beta0(double H, bool non_embedded = false);
double beta1(double H, double alpha);

// Sym points (H - i)/sqrt(H^2+1) and its inverse
cplx sym_point(double H);

// a = -1/16, b = (beta0 lambda - beta0)/8. The non_embedded branch is the
// image of the first solution at -H under lambda -> -lambda, b -> i b(-lambda).
SpectralData genus0(double H, bool non_embedded = false);
// a = -(lambda^2 + alpha lambda + 1)/16, b = beta1 (1 - lambda^2)/8
SpectralData genus1(double H, double alpha);
// (a, b) -> ((lambda+1)^2 a, (lambda+1) b)
SpectralData embed_genus0_to_1(const SpectralData& d);
// lambda -> -lambda with b -> i^{g+1} b(-lambda) and swapped, negated Sym points
SpectralData reflect_minus(const SpectralData& d);

// closed-form h on the branch with h(lambda) = 2(b1 lambda - b0)/(lambda nu), g = 0
cplx genus0_h(const SpectralData& d, const CurvePoint& p);
// h = 4 beta1 nu, g = 1
cplx genus1_h(double beta1, const CurvePoint& p);

struct Membership {
  enum Kind { Rot0, Rot1, Boundary, Outside } kind = Outside;
  double H = 0.0;
  double alpha = 0.0;
};

const char* to_string(Membership::Kind k);

Membership classify_membership(const SpectralData& d, double tol);

}  // namespace scmc::rot

namespace scmc::rot {

struct SweepEntry {
  int genus = 0;
  double H = 0.0, alpha = 0.0;
  ConditionReport report;
};
// check_conditions over rot0(H) for every H and rot1(H, alpha) for every pair
std::vector<SweepEntry> sweep(const std::vector<double>& Hs, const std::vector<double>& alphas, double tol,
                              bool parallel = true);

}  // namespace scmc::rot
