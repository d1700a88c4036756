#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "scmc/errors.hpp"

namespace scmc {

using cplx = std::complex<double>;

// Complex polynomial, coefficients lowest degree first. Trailing exact zeros
// are trimmed, so the zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs);
  Poly(std::initializer_list<cplx> coeffs) : Poly(std::vector<cplx>(coeffs)) {}

  static Poly constant(cplx c) { return Poly({c}); }
  static Poly monomial(int k, cplx c = 1.0);
  static Poly from_roots(const std::vector<cplx>& roots, cplx lead = 1.0);

  const std::vector<cplx>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  cplx operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : cplx{}; }

  cplx eval(cplx z) const;
  cplx operator()(cplx z) const { return eval(z); }
  Poly derivative() const;
  // drops trailing coefficients below tol * (largest |coeff|)
  Poly trimmed(double tol) const;
  double max_abs_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(cplx s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, cplx s) { return a *= s; }
  friend Poly operator*(cplx s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  std::vector<cplx> c_;
};

// (quotient, remainder)
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
double max_coeff_diff(const Poly& p, const Poly& q);

// lambda -> lambda^n conj(p(1/conj(lambda))); coefficient k becomes conj(p[n-k]).
Poly conjugate_reflect(const Poly& p, int n);
// lambda -> p(s*lambda)
Poly scale_argument(const Poly& p, cplx s);

struct RealityClass {
  enum Kind { A, B, C, P } kind;
  int n;  // g for A, B, C; the degree for P

  static RealityClass a(int g) { return {A, g}; }
  static RealityClass b(int g) { return {B, g}; }
  static RealityClass c(int g) { return {C, g}; }
  static RealityClass p(int deg) { return {P, deg}; }
};

struct RealityCheck {
  bool pass = false;
  double residual = 0.0;    // coefficient symmetry residual
  double sign_min = 0.0;    // class A: min over the circle grid of -lambda^{-g} a
  double unit_defect = 0.0; // class P: | |p(0)| - 1 |
};

inline constexpr int kCircleGrid = 1024;

RealityCheck check_reality(const Poly& p, RealityClass cls, double tol);

// Orthogonal projections onto the symmetry classes (exact on coefficients).
Poly project_a(const Poly& a, int g);
Poly project_b(const Poly& b, int g);
Poly project_c(const Poly& c, int g);

struct Root {
  cplx value;
  int multiplicity = 1;
};

inline constexpr double kRootClusterTol = 1e-7;

// Companion-matrix eigenvalues, Newton polish, clustering at cluster_tol
// (relative). Clustered roots are refined on the (m-1)-th derivative.
std::vector<Root> roots(const Poly& p, double cluster_tol = kRootClusterTol);
std::vector<cplx> roots_flat(const Poly& p, double cluster_tol = kRootClusterTol);

struct ReflectPairing {
  std::vector<std::pair<cplx, cplx>> pairs;  // (alpha, 1/conj(alpha)), |alpha| < 1 first
  std::vector<Root> unimodular;
};

ReflectPairing reflect_pairing(const Poly& a, int g, double tol = 1e-6);

// Scales prod (lambda - r) into class P (|p(0)| = 1, self-reflective).
// The root set must be closed under r -> 1/conj(r).
Poly class_p_from_roots(const std::vector<cplx>& roots);

}  // namespace scmc
