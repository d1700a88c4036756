#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "scmc/curve.hpp"

namespace scmc {

using Mat2 = Eigen::Matrix2cd;

// xi = sum_{d=-1}^{g} xi_d lambda^d, coefficients stored from d = -1.
struct Potential {
  int g = 0;
  std::vector<Mat2> xi;

  Potential() = default;
  explicit Potential(int genus) : g(genus), xi(genus + 2, Mat2::Zero()) {}

  Mat2& operator[](int d) { return xi[d + 1]; }
  const Mat2& operator[](int d) const { return xi[d + 1]; }
  Mat2 eval(cplx lambda) const;
};

// max over d of |xi_d + conj(xi_{g-1-d})^T| and the non-upper-right part of xi_{-1}
double reality_defect(const Potential& p);
// -lambda det xi(lambda) as a polynomial of degree 2g
Poly minus_lambda_det(const Potential& p);
double potential_distance(const Potential& p, const Potential& q);

// One root from each pair (alpha, 1/conj(alpha)), |alpha| < 1, and half of every
// circle root (floor of the multiplicity; odd circle roots are not allowed).
std::vector<cplx> default_selection(const Poly& a, int g);
// xi = [[0, beta/lambda], [gamma, 0]] with beta gamma = a, gamma = -lambda^g conj(beta(1/conj(lambda))),
// beta(0) in i R+
Potential offdiag_potential(const Poly& a, int g, const std::vector<cplx>& selection);
Potential offdiag_potential(const Poly& a, int g);

// dz and dzbar blocks of the connection, alpha = U dz - V dzbar:
// U = [[a0/2, b_{-1}/lambda], [c0, -a0/2]], V = [[conj a0/2, conj c0], [conj b_{-1} lambda, -conj a0/2]]
struct Connection {
  Mat2 U_m1, U_0;  // U = U_m1 / lambda + U_0
  Mat2 V_0, V_1;   // V = V_0 + V_1 lambda
  Mat2 along(cplx w, cplx lambda) const;  // w U - conj(w) V, the derivative along z = z0 + s w
};
Connection connection(const Potential& zeta);

// d zeta / ds = [zeta, w U - conj(w) V] along z = z0 + s w
Potential lax_rhs(const Potential& zeta, cplx w);

struct KillingSample {
  cplx z;
  Potential zeta;
  double det_defect = 0.0;      // max coefficient of lambda det zeta + a
  double reality_defect = 0.0;
};

inline constexpr double kDzMax = 1e-2;

// RK4 along the polyline z_path (z_path[0] = 0), substepping segments longer than dz_max
std::vector<KillingSample> lax_flow(const Potential& xi, const std::vector<cplx>& z_path,
                                    double dz_max = kDzMax);

struct Omega {
  double omega = 0.0;
  cplx omega_z;
};
Omega extract_omega(const Potential& zeta);

// combined RK4 state: Killing field and frames at the two Sym points
struct LineState {
  Potential zeta;
  Mat2 F1 = Mat2::Identity();
  Mat2 F2 = Mat2::Identity();
};

struct LineIntegrator {
  cplx l1, l2;
  int reproject_every = 16;
  double max_correction = 0.0;
  int steps_since = 0;

  void step(LineState& s, cplx w, double ds);
  // n equal RK4 steps from s along direction w over length len
  void run(LineState& s, cplx w, double len, int n);
};

// polar projection back onto SU(2); returns the size of the correction
double reproject_su2(Mat2& F);

std::vector<Mat2> frame_integrate(const Potential& xi, const std::vector<cplx>& z_path, cplx lambda,
                                  double dz_max = kDzMax, double* max_correction = nullptr);

using Vec4 = std::array<double, 4>;
// quaternion coordinates (Re p, Im p, Re q, Im q) of F1 F2^{-1} = [[p, -conj q], [q, conj p]]
Vec4 sym_bobenko(const Mat2& F1, const Mat2& F2);
Vec4 su2_to_r4(const Mat2& m);

struct Monodromy {
  Mat2 M;
  double commutator = 0.0;   // |[M, xi(lambda)]|
  double periodicity = 0.0;  // |zeta(tau) - zeta(0)|
};
inline constexpr int kMonodromySteps = 2000;
Monodromy monodromy(const Potential& xi, cplx tau, cplx lambda, int steps = kMonodromySteps);

struct Period {
  cplx tau;
  double objective = 0.0;
  int sign = 1;
};
// the guess for rotational data is 32 b(0)
Period find_period(const Potential& xi, cplx l1, cplx l2, cplx guess, double threshold = 1e-6);

// closing at the period implied by the data, tau = 32 b(0) (the lambda -> 0
// asymptotics of h and of the monodromy eigenvalue agree for this tau)
Period find_period(const SpectralData& d, double threshold = 1e-6);

// first-order isospectral step in direction i (lambda^{-i} xi) by the Iwasawa splitting
Potential isospectral_step(const Potential& xi, int direction, double dt);
// the loop-unitary part u of a Laurent loop x, used by isospectral_step
std::vector<Mat2> unitary_part(const std::vector<Mat2>& x, int lowest_power, int& u_lowest);

// uniform grid, row-major in x: value(i, j) at x = i h, y = j h
struct Grid {
  int nx = 0, ny = 0;
  double h = 0.0;
  std::vector<cplx> v;
  cplx& at(int i, int j) { return v[static_cast<size_t>(j) * nx + i]; }
  cplx at(int i, int j) const { return v[static_cast<size_t>(j) * nx + i]; }
};

struct JacobiFields {
  Grid u1, u2, u3;
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;  // sup of |Lu| over the valid interior
  bool coarse = false;                   // residual dominated by the grid
};
// u1 = w_z, u2 = w_zzz - 2 w_z^3, u3 = w_zzzzz - 10 w_z^2 w_zzz - 10 w_z w_zz^2 + 6 w_z^5 and
// L u = Laplace u + cosh(2 w) u, all by central differences
JacobiFields pinkall_sterling_fields(const Grid& omega);

// 2 Laplace(w) + sinh(2 w) on the interior (equivalently 8 w_{z zbar} + sinh 2w)
double sinh_gordon_residual(const Grid& omega);

}  // namespace scmc
