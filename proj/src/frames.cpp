#include "scmc/frames.hpp"

#include <algorithm>
#include <cmath>

namespace scmc {

namespace {

constexpr cplx I{0.0, 1.0};

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

Mat2 comm(const Mat2& a, const Mat2& b) { return a * b - b * a; }

Potential axpy(const Potential& p, double h, const Potential& k) {
  Potential out = p;
  for (size_t d = 0; d < out.xi.size(); ++d) out.xi[d] += h * k.xi[d];
  return out;
}

Mat2 e12(cplx v) {
  Mat2 m = Mat2::Zero();
  m(0, 1) = v;
  return m;
}

}  // namespace

Mat2 Potential::eval(cplx lambda) const {
  Mat2 out = Mat2::Zero();
  cplx pw = 1.0 / lambda;
  for (const Mat2& m : xi) {
    out += pw * m;
    pw *= lambda;
  }
  return out;
}

double reality_defect(const Potential& p) {
  double r = std::max({std::abs(p[-1](0, 0)), std::abs(p[-1](1, 0)), std::abs(p[-1](1, 1))});
  for (int d = -1; d <= p.g; ++d) r = std::max(r, max_abs(p[d] + p[p.g - 1 - d].adjoint()));
  return r;
}

Poly minus_lambda_det(const Potential& p) {
  // lambda det xi has powers -1 .. 2g + 1; store from lambda^{-1}
  const int n = p.g + 2;
  std::vector<cplx> c(2 * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mat2& x = p.xi[i];
      const Mat2& y = p.xi[j];
      // power (i - 1) + (j - 1) + 1 of lambda det, shifted by one
      c[i + j] += x(0, 0) * y(1, 1) - x(0, 1) * y(1, 0);
    }
  std::vector<cplx> out(c.begin() + 1, c.end());
  for (cplx& v : out) v = -v;
  return Poly(out);
}

double potential_distance(const Potential& p, const Potential& q) {
  double r = 0.0;
  for (size_t d = 0; d < std::max(p.xi.size(), q.xi.size()); ++d) {
    Mat2 a = d < p.xi.size() ? p.xi[d] : Mat2::Zero();
    Mat2 b = d < q.xi.size() ? q.xi[d] : Mat2::Zero();
    r = std::max(r, max_abs(a - b));
  }
  return r;
}

std::vector<cplx> default_selection(const Poly& a, int g) {
  ReflectPairing rp = reflect_pairing(a, g);
  std::vector<cplx> sel;
  for (const auto& pr : rp.pairs) sel.push_back(pr.first);
  for (const Root& r : rp.unimodular) {
    if (r.multiplicity % 2 != 0) throw SelectionError("circle root of a with odd multiplicity");
    for (int k = 0; k < r.multiplicity / 2; ++k) sel.push_back(r.value / std::abs(r.value));
  }
  return sel;
}

Potential offdiag_potential(const Poly& a, int g, const std::vector<cplx>& selection) {
  if (static_cast<int>(selection.size()) != g) throw SelectionError("selection must contain g roots");
  if (a.degree() != 2 * g) throw DegreeError("a must have degree 2g");
  cplx P = 1.0;
  for (cplx r : selection) P *= -r;
  double kabs = std::sqrt(std::abs(a[2 * g]) / std::abs(P));
  cplx kappa = I * kabs * std::conj(P) / std::abs(P);
  Poly beta = Poly::from_roots(selection, kappa);
  std::vector<cplx> gam(g + 1);
  for (int k = 0; k <= g; ++k) gam[k] = -std::conj(beta[g - k]);
  Poly gamma(gam);
  if (max_coeff_diff(beta * gamma, a) > 1e-8 * std::max(1.0, a.max_abs_coeff()))
    throw SelectionError("selected roots do not factor a");

  Potential xi(g);
  xi[-1] = e12(beta[0]);
  for (int d = 0; d <= g; ++d) {
    Mat2 m = Mat2::Zero();
    m(0, 1) = beta[d + 1];
    m(1, 0) = gamma[d];
    xi[d] = m;
  }
  return xi;
}

Potential offdiag_potential(const Poly& a, int g) { return offdiag_potential(a, g, default_selection(a, g)); }

Mat2 Connection::along(cplx w, cplx lambda) const {
  return w * (U_m1 / lambda + U_0) - std::conj(w) * (V_0 + V_1 * lambda);
}

Connection connection(const Potential& zeta) {
  cplx a0 = zeta[0](0, 0), bm = zeta[-1](0, 1), c0 = zeta[0](1, 0);
  Connection c;
  c.U_m1 = e12(bm);
  c.U_0 << a0 / 2.0, 0.0, c0, -a0 / 2.0;
  c.V_0 << std::conj(a0) / 2.0, std::conj(c0), 0.0, -std::conj(a0) / 2.0;
  c.V_1 = Mat2::Zero();
  c.V_1(1, 0) = std::conj(bm);
  return c;
}

Potential lax_rhs(const Potential& zeta, cplx w) {
  Connection c = connection(zeta);
  const Mat2 A[3] = {w * c.U_m1, w * c.U_0 - std::conj(w) * c.V_0, -std::conj(w) * c.V_1};
  Potential out(zeta.g);
  for (int d = -1; d <= zeta.g; ++d) {
    Mat2 s = Mat2::Zero();
    for (int k = -1; k <= 1; ++k) {
      int e = d - k;
      if (e < -1 || e > zeta.g) continue;
      s += comm(zeta[e], A[k + 1]);
    }
    out[d] = s;
  }
  return out;
}

namespace {

Potential lax_rk4(const Potential& z, cplx w, double h) {
  Potential k1 = lax_rhs(z, w);
  Potential k2 = lax_rhs(axpy(z, h / 2, k1), w);
  Potential k3 = lax_rhs(axpy(z, h / 2, k2), w);
  Potential k4 = lax_rhs(axpy(z, h, k3), w);
  Potential out = z;
  for (size_t d = 0; d < out.xi.size(); ++d)
    out.xi[d] += (h / 6) * (k1.xi[d] + 2.0 * k2.xi[d] + 2.0 * k3.xi[d] + k4.xi[d]);
  return out;
}

}  // namespace

std::vector<KillingSample> lax_flow(const Potential& xi, const std::vector<cplx>& z_path, double dz_max) {
  if (z_path.empty() || z_path.front() != cplx{}) throw PreconditionError("z path must start at 0");
  Poly a = minus_lambda_det(xi);
  std::vector<KillingSample> out;
  Potential z = xi;
  out.push_back({z_path[0], z, 0.0, reality_defect(z)});
  for (size_t i = 1; i < z_path.size(); ++i) {
    cplx dz = z_path[i] - z_path[i - 1];
    double len = std::abs(dz);
    if (len > 0.0) {
      int n = std::max(1, static_cast<int>(std::ceil(len / dz_max - 1e-12)));
      cplx w = dz / len;
      for (int k = 0; k < n; ++k) z = lax_rk4(z, w, len / n);
    }
    KillingSample s{z_path[i], z, max_coeff_diff(minus_lambda_det(z), a), reality_defect(z)};
    if (s.reality_defect > 1e-5) throw IntegratorDrift("Killing field left the potential space");
    out.push_back(std::move(s));
  }
  return out;
}

Omega extract_omega(const Potential& zeta) {
  cplx x = -4.0 * I * zeta[-1](0, 1);
  if (!(x.real() > 0.0) || std::abs(x.imag()) > 1e-8 * std::abs(x))
    throw GaugeError("upper right lambda^{-1} coefficient is not in i R+");
  return {std::log(x.real()), zeta[0](0, 0)};
}

double reproject_su2(Mat2& F) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(F.adjoint() * F);
  Eigen::Vector2d ev = es.eigenvalues();
  Mat2 inv_sqrt = es.eigenvectors() * Eigen::Vector2d(1.0 / std::sqrt(ev(0)), 1.0 / std::sqrt(ev(1)))
                                          .cast<cplx>()
                                          .asDiagonal() *
                  es.eigenvectors().adjoint();
  Mat2 G = F * inv_sqrt;
  G /= std::sqrt(G.determinant());
  double corr = max_abs(G - F);
  F = G;
  return corr;
}

void LineIntegrator::step(LineState& s, cplx w, double h) {
  auto f = [&](const Potential& z, const Mat2& F1, const Mat2& F2, Potential& dz, Mat2& d1, Mat2& d2) {
    Connection c = connection(z);
    dz = lax_rhs(z, w);
    d1 = F1 * c.along(w, l1);
    d2 = F2 * c.along(w, l2);
  };
  Potential k1, k2, k3, k4;
  Mat2 a1, a2, a3, a4, b1, b2, b3, b4;
  f(s.zeta, s.F1, s.F2, k1, a1, b1);
  f(axpy(s.zeta, h / 2, k1), s.F1 + (h / 2) * a1, s.F2 + (h / 2) * b1, k2, a2, b2);
  f(axpy(s.zeta, h / 2, k2), s.F1 + (h / 2) * a2, s.F2 + (h / 2) * b2, k3, a3, b3);
  f(axpy(s.zeta, h, k3), s.F1 + h * a3, s.F2 + h * b3, k4, a4, b4);
  for (size_t d = 0; d < s.zeta.xi.size(); ++d)
    s.zeta.xi[d] += (h / 6) * (k1.xi[d] + 2.0 * k2.xi[d] + 2.0 * k3.xi[d] + k4.xi[d]);
  s.F1 += (h / 6) * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
  s.F2 += (h / 6) * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
  if (++steps_since >= reproject_every) {
    steps_since = 0;
    max_correction = std::max({max_correction, reproject_su2(s.F1), reproject_su2(s.F2)});
  }
}

void LineIntegrator::run(LineState& s, cplx w, double len, int n) {
  for (int k = 0; k < n; ++k) step(s, w, len / n);
}

std::vector<Mat2> frame_integrate(const Potential& xi, const std::vector<cplx>& z_path, cplx lambda,
                                  double dz_max, double* max_correction) {
  if (z_path.empty() || z_path.front() != cplx{}) throw PreconditionError("z path must start at 0");
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw PreconditionError("lambda must be unimodular");
  LineIntegrator li{lambda, lambda};
  LineState s{xi};
  std::vector<Mat2> out{s.F1};
  for (size_t i = 1; i < z_path.size(); ++i) {
    cplx dz = z_path[i] - z_path[i - 1];
    double len = std::abs(dz);
    if (len > 0.0) li.run(s, dz / len, len, std::max(1, static_cast<int>(std::ceil(len / dz_max - 1e-12))));
    if (std::abs(s.F1.determinant() - 1.0) > 1e-6) throw IntegratorDrift("frame determinant drifted");
    out.push_back(s.F1);
  }
  if (max_correction) *max_correction = li.max_correction;
  return out;
}

Vec4 su2_to_r4(const Mat2& m) {
  return {m(0, 0).real(), m(0, 0).imag(), m(1, 0).real(), m(1, 0).imag()};
}

Vec4 sym_bobenko(const Mat2& F1, const Mat2& F2) { return su2_to_r4(F1 * F2.inverse()); }

namespace {

LineState integrate_straight(const Potential& xi, cplx tau, cplx l1, cplx l2, int steps) {
  LineIntegrator li{l1, l2};
  LineState s{xi};
  double len = std::abs(tau);
  if (len > 0.0) li.run(s, tau / len, len, steps);
  return s;
}

double period_objective(const Potential& xi, cplx tau, cplx l1, cplx l2, int steps, int* sign) {
  LineState s = integrate_straight(xi, tau, l1, l2, steps);
  double best = INFINITY;
  for (int sg : {1, -1}) {
    Mat2 one = double(sg) * Mat2::Identity();
    double v = (s.F1 - one).norm() + (s.F2 - one).norm();
    if (v < best) {
      best = v;
      if (sign) *sign = sg;
    }
  }
  return best;
}

}  // namespace

Monodromy monodromy(const Potential& xi, cplx tau, cplx lambda, int steps) {
  Monodromy out;
  if (tau == cplx{}) {
    out.M = Mat2::Identity();
    return out;
  }
  LineState s = integrate_straight(xi, tau, lambda, lambda, steps);
  out.M = s.F1;
  Mat2 x = xi.eval(lambda);
  out.commutator = max_abs(comm(out.M, x));
  out.periodicity = potential_distance(s.zeta, xi);
  if (out.periodicity > 1e-6) throw NotPeriodic("Killing field is not periodic along tau");
  return out;
}

Period find_period(const Potential& xi, cplx l1, cplx l2, cplx guess, double threshold) {
  const int steps = 1000;
  auto f = [&](const Eigen::Vector2d& v) { return period_objective(xi, {v(0), v(1)}, l1, l2, steps, nullptr); };
  // Nelder-Mead over (Re tau, Im tau)
  double scale = 0.05 * std::max(1.0, std::abs(guess));
  std::array<Eigen::Vector2d, 3> s{Eigen::Vector2d(guess.real(), guess.imag()),
                                   Eigen::Vector2d(guess.real() + scale, guess.imag()),
                                   Eigen::Vector2d(guess.real(), guess.imag() + scale)};
  std::array<double, 3> fv{f(s[0]), f(s[1]), f(s[2])};
  for (int it = 0; it < 500; ++it) {
    std::array<int, 3> o{0, 1, 2};
    std::sort(o.begin(), o.end(), [&](int i, int j) { return fv[i] < fv[j]; });
    s = {s[o[0]], s[o[1]], s[o[2]]};
    fv = {fv[o[0]], fv[o[1]], fv[o[2]]};
    if ((s[2] - s[0]).norm() < 1e-13 * std::max(1.0, s[0].norm())) break;
    Eigen::Vector2d c = 0.5 * (s[0] + s[1]);
    Eigen::Vector2d r = c + (c - s[2]);
    double fr = f(r);
    if (fr < fv[0]) {
      Eigen::Vector2d e = c + 2.0 * (c - s[2]);
      double fe = f(e);
      if (fe < fr) s[2] = e, fv[2] = fe;
      else s[2] = r, fv[2] = fr;
    } else if (fr < fv[1]) {
      s[2] = r, fv[2] = fr;
    } else {
      Eigen::Vector2d k = fr < fv[2] ? Eigen::Vector2d(c + 0.5 * (r - c)) : Eigen::Vector2d(c + 0.5 * (s[2] - c));
      double fk = f(k);
      if (fk < std::min(fr, fv[2])) {
        s[2] = k, fv[2] = fk;
      } else {
        for (int i = 1; i < 3; ++i) s[i] = s[0] + 0.5 * (s[i] - s[0]), fv[i] = f(s[i]);
      }
    }
  }
  int best = std::min_element(fv.begin(), fv.end()) - fv.begin();
  Period p;
  p.tau = {s[best](0), s[best](1)};
  p.objective = period_objective(xi, p.tau, l1, l2, kMonodromySteps, &p.sign);
  if (!(p.objective < threshold) || std::abs(p.tau) < 1e-8) throw PeriodNotFound("no period near the guess");
  return p;
}

std::vector<Mat2> unitary_part(const std::vector<Mat2>& x, int lowest, int& u_lowest) {
  const int highest = lowest + static_cast<int>(x.size()) - 1;
  auto xk = [&](int k) { return k >= lowest && k <= highest ? x[k - lowest] : Mat2(Mat2::Zero()); };
  int K = std::max(0, -lowest);
  u_lowest = -K;
  std::vector<Mat2> u(2 * K + 1, Mat2::Zero());
  for (int k = -K; k < 0; ++k) {
    u[k + K] += xk(k);
    u[-k + K] -= xk(k).adjoint();
  }
  Mat2 c = xk(0);
  Mat2 u0;
  u0 << I * c(0, 0).imag(), -std::conj(c(1, 0)), c(1, 0), -I * c(0, 0).imag();
  u[K] += u0;
  return u;
}

Period find_period(const SpectralData& d, double threshold) {
  Potential xi = offdiag_potential(d.a, d.g);
  Period p;
  p.tau = 32.0 * d.b[0];
  p.objective = period_objective(xi, p.tau, d.lambda1, d.lambda2(), kMonodromySteps, &p.sign);
  if (!(p.objective < threshold)) throw PeriodNotFound("monodromy at the period implied by b is not +-1");
  return p;
}

Potential isospectral_step(const Potential& xi, int direction, double dt) {
  if (direction < 0 || direction > std::max(0, xi.g - 1)) throw PreconditionError("direction out of range");
  // x = lambda^{-direction} xi, lowest power -1 - direction
  int ul;
  std::vector<Mat2> u = unitary_part(xi.xi, -1 - direction, ul);
  const int g = xi.g;
  Potential out = xi;
  double lost = 0.0;
  for (int d = -1 + ul; d <= g - ul; ++d) {
    Mat2 s = Mat2::Zero();
    for (int k = 0; k < static_cast<int>(u.size()); ++k) {
      int e = d - (ul + k);
      if (e < -1 || e > g) continue;
      s += comm(xi[e], u[k]);
    }
    if (d < -1 || d > g) lost = std::max(lost, max_abs(s));
    else out[d] += dt * s;
  }
  double scale = 0.0;
  for (const Mat2& m : xi.xi) scale = std::max(scale, max_abs(m));
  if (lost > 1e-9 * std::max(1.0, scale * scale)) throw GaugeError("commutator left the potential degree range");
  Potential proj = out;
  for (int d = -1; d <= g; ++d) proj[d] = 0.5 * (out[d] - out[g - 1 - d].adjoint());
  proj[-1] = e12(proj[-1](0, 1));
  return proj;
}

namespace {

struct Field {
  Grid g;
  int margin = 0;
};

Field apply(const Field& f, auto op) {
  Field out{f.g, f.margin + 1};
  const Grid& s = f.g;
  for (int j = out.margin; j < s.ny - out.margin; ++j)
    for (int i = out.margin; i < s.nx - out.margin; ++i) out.g.at(i, j) = op(s, i, j);
  return out;
}

Field dz(const Field& f) {
  return apply(f, [](const Grid& s, int i, int j) {
    cplx fx = (s.at(i + 1, j) - s.at(i - 1, j)) / (2.0 * s.h);
    cplx fy = (s.at(i, j + 1) - s.at(i, j - 1)) / (2.0 * s.h);
    return 0.5 * (fx - I * fy);
  });
}

Field laplace(const Field& f) {
  return apply(f, [](const Grid& s, int i, int j) {
    return (s.at(i + 1, j) + s.at(i - 1, j) + s.at(i, j + 1) + s.at(i, j - 1) - 4.0 * s.at(i, j)) / (s.h * s.h);
  });
}

double jacobi_residual(const Field& u, const Grid& w, Grid* keep, double* field_size) {
  Field lu = laplace(u);
  double r = 0.0, sz = 0.0;
  for (int j = lu.margin; j < w.ny - lu.margin; ++j)
    for (int i = lu.margin; i < w.nx - lu.margin; ++i) {
      r = std::max(r, std::abs(lu.g.at(i, j) + std::cosh(2.0 * w.at(i, j).real()) * u.g.at(i, j)));
      sz = std::max(sz, std::abs(u.g.at(i, j)));
    }
  if (keep) *keep = u.g;
  *field_size = sz;
  return r;
}

}  // namespace

JacobiFields pinkall_sterling_fields(const Grid& omega) {
  if (omega.nx < 13 || omega.ny < 13) throw PreconditionError("grid too small for the Jacobi fields");
  Field w{omega, 0};
  Field w1 = dz(w), w2 = dz(w1), w3 = dz(w2), w4 = dz(w3), w5 = dz(w4);
  auto build = [&](int margin, auto fn) {
    Field f{omega, margin};
    for (cplx& v : f.g.v) v = 0.0;
    for (int j = margin; j < omega.ny - margin; ++j)
      for (int i = margin; i < omega.nx - margin; ++i) f.g.at(i, j) = fn(i, j);
    return f;
  };
  Field u1 = build(1, [&](int i, int j) { return w1.g.at(i, j); });
  Field u2 = build(3, [&](int i, int j) {
    cplx a = w1.g.at(i, j);
    return w3.g.at(i, j) - 2.0 * a * a * a;
  });
  Field u3 = build(5, [&](int i, int j) {
    cplx a = w1.g.at(i, j), b = w2.g.at(i, j), c = w3.g.at(i, j);
    return w5.g.at(i, j) - 10.0 * a * a * c - 10.0 * a * b * b + 6.0 * std::pow(a, 5);
  });
  JacobiFields out;
  double s1, s2, s3;
  out.r1 = jacobi_residual(u1, omega, &out.u1, &s1);
  out.r2 = jacobi_residual(u2, omega, &out.u2, &s2);
  out.r3 = jacobi_residual(u3, omega, &out.u3, &s3);
  out.coarse = out.r1 > 1e-2 * std::max(s1, 1e-12) || out.r2 > 1e-2 * std::max(s2, 1e-12) ||
               out.r3 > 1e-2 * std::max(s3, 1e-12);
  return out;
}

double sinh_gordon_residual(const Grid& omega) {
  double r = 0.0;
  const double h2 = omega.h * omega.h;
  for (int j = 1; j + 1 < omega.ny; ++j)
    for (int i = 1; i + 1 < omega.nx; ++i) {
      double w = omega.at(i, j).real();
      double lap = (omega.at(i + 1, j).real() + omega.at(i - 1, j).real() + omega.at(i, j + 1).real() +
                    omega.at(i, j - 1).real() - 4.0 * w) /
                   h2;
      r = std::max(r, std::abs(2.0 * lap + std::sinh(2.0 * w)));
    }
  return r;
}

}  // namespace scmc
