#include "scmc/mesh.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "scmc/io.hpp"

namespace scmc {

namespace {

constexpr cplx I{0.0, 1.0};

double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

Vec4 lin(double s, const Vec4& a, double t, const Vec4& b) {
  return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2], s * a[3] + t * b[3]};
}

double det3(double a, double b, double c, double d, double e, double f, double g, double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// vector orthogonal to a, b, c with components the signed 3x3 minors
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  Vec4 n;
  for (int k = 0; k < 4; ++k) {
    int r[3], m = 0;
    for (int j = 0; j < 4; ++j)
      if (j != k) r[m++] = j;
    double v = det3(a[r[0]], a[r[1]], a[r[2]], b[r[0]], b[r[1]], b[r[2]], c[r[0]], c[r[1]], c[r[2]]);
    n[k] = (k % 2 == 0 ? -1.0 : 1.0) * v;
  }
  return n;
}

void fill_row(SurfaceMesh& m, const LineState& start, int j, cplx l1, cplx l2, int sub, double& corr) {
  LineIntegrator li{l1, l2};
  LineState s = start;
  for (int i = 0; i < m.nx; ++i) {
    if (i > 0) li.run(s, 1.0, m.hx, sub);
    size_t k = m.idx(i, j);
    m.points[k] = sym_bobenko(s.F1, s.F2);
    Omega o = extract_omega(s.zeta);
    m.omega[k] = o.omega;
    m.omega_z[k] = o.omega_z;
  }
  corr = li.max_correction;
}

SurfaceMesh build(const Potential& xi, cplx l1, cplx l2, const MeshOptions& opt, bool parallel) {
  if (opt.nx < 2 || opt.ny < 2 || opt.substeps < 1) throw PreconditionError("mesh needs at least 2 x 2 points");
  SurfaceMesh m;
  m.nx = opt.nx;
  m.ny = opt.ny;
  m.hx = opt.x_extent / (opt.nx - 1);
  m.hy = opt.y_extent / (opt.ny - 1);
  size_t n = static_cast<size_t>(m.nx) * m.ny;
  m.points.resize(n);
  m.omega.resize(n);
  m.omega_z.resize(n);

  std::vector<LineState> column(m.ny);
  LineIntegrator li{l1, l2};
  LineState s{xi};
  for (int j = 0; j < m.ny; ++j) {
    if (j > 0) li.run(s, I, m.hy, opt.substeps);
    column[j] = s;
  }
  std::vector<double> corr(m.ny, 0.0);
  if (parallel) {
    int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int j = 0; j < m.ny; ++j) fill_row(m, column[j], j, l1, l2, opt.substeps, corr[j]);
  } else {
    for (int j = 0; j < m.ny; ++j) fill_row(m, column[j], j, l1, l2, opt.substeps, corr[j]);
  }
  m.max_correction = std::max(li.max_correction, *std::max_element(corr.begin(), corr.end()));
  return m;
}

}  // namespace

SurfaceMesh build_mesh(const Potential& xi, cplx l1, cplx l2, const MeshOptions& opt) {
  return build(xi, l1, l2, opt, true);
}

SurfaceMesh build_mesh_serial(const Potential& xi, cplx l1, cplx l2, const MeshOptions& opt) {
  return build(xi, l1, l2, opt, false);
}

Grid omega_grid(const Potential& xi, int n, double h, int substeps, bool parallel) {
  Grid g{n, n, h, std::vector<cplx>(static_cast<size_t>(n) * n)};
  std::vector<Potential> column(n);
  Potential z = xi;
  std::vector<cplx> seg{0.0, cplx(0.0, h)};
  for (int j = 0; j < n; ++j) {
    if (j > 0) z = lax_flow(z, seg, h / substeps).back().zeta;
    column[j] = z;
  }
  auto row = [&](int j) {
    Potential r = column[j];
    std::vector<cplx> step{0.0, cplx(h, 0.0)};
    for (int i = 0; i < n; ++i) {
      if (i > 0) r = lax_flow(r, step, h / substeps).back().zeta;
      g.at(i, j) = extract_omega(r).omega;
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) row(j);
  } else {
    for (int j = 0; j < n; ++j) row(j);
  }
  return g;
}

double rotational_defect(const std::vector<cplx>& omega_z, double* theta) {
  auto sup = [&](double t) {
    double c = std::cos(t), s = std::sin(t), r = 0.0;
    for (cplx wz : omega_z) r = std::max(r, std::abs(c * 2.0 * wz.real() - s * 2.0 * wz.imag()));
    return r;
  };
  const int n = 720;
  double best = INFINITY, bt = 0.0;
  for (int k = 0; k < n; ++k) {
    double t = M_PI * k / n;
    double v = sup(t);
    if (v < best) best = v, bt = t;
  }
  // golden-section refinement around the best grid direction
  double lo = bt - M_PI / n, hi = bt + M_PI / n;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 80; ++it) {
    double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
    if (sup(a) < sup(b)) hi = b;
    else lo = a;
  }
  double t = 0.5 * (lo + hi);
  double v = sup(t);
  if (v < best) best = v, bt = t;
  if (theta) *theta = bt;
  return best;
}

GeometryReport analyze(const SurfaceMesh& m, double H) {
  GeometryReport r;
  for (const Vec4& p : m.points) r.on_sphere = std::max(r.on_sphere, std::abs(std::sqrt(dot(p, p)) - 1.0));
  double ref = 1.0 / (4.0 * (H * H + 1.0));
  double hsum = 0.0;
  long count = 0;
  for (int j = 1; j + 1 < m.ny; ++j)
    for (int i = 1; i + 1 < m.nx; ++i) {
      const Vec4& f = m.points[m.idx(i, j)];
      const Vec4 &xp = m.points[m.idx(i + 1, j)], &xm = m.points[m.idx(i - 1, j)];
      const Vec4 &yp = m.points[m.idx(i, j + 1)], &ym = m.points[m.idx(i, j - 1)];
      Vec4 fx = lin(0.5 / m.hx, xp, -0.5 / m.hx, xm);
      Vec4 fy = lin(0.5 / m.hy, yp, -0.5 / m.hy, ym);
      Vec4 fxx, fyy;
      for (int k = 0; k < 4; ++k) {
        fxx[k] = (xp[k] - 2.0 * f[k] + xm[k]) / (m.hx * m.hx);
        fyy[k] = (yp[k] - 2.0 * f[k] + ym[k]) / (m.hy * m.hy);
      }
      Vec4 N = cross4(f, fx, fy);
      double nn = std::sqrt(dot(N, N));
      for (double& v : N) v /= nn;
      double E = dot(fx, fx), G = dot(fy, fy);
      double Hd = std::abs((dot(fxx, N) + dot(fyy, N)) / (E + G));
      hsum += Hd;
      ++count;
      r.mean_curvature_error = std::max(r.mean_curvature_error, std::abs(Hd - std::abs(H)) / std::max(std::abs(H), 1.0));
      r.conformality = std::max(r.conformality, (std::abs(E - G) + 2.0 * std::abs(dot(fx, fy))) / E);
      double v2 = std::exp(2.0 * m.omega[m.idx(i, j)]) * ref;
      r.conformal_factor = std::max(r.conformal_factor, std::abs(E / v2 - 1.0));
    }
  r.mean_curvature = count ? hsum / count : 0.0;
  if (std::abs(m.hx - m.hy) < 1e-14 * std::max(m.hx, m.hy)) {
    Grid g{m.nx, m.ny, m.hx, std::vector<cplx>(m.omega.begin(), m.omega.end())};
    r.sinh_gordon = sinh_gordon_residual(g);
  }
  r.rotational = rotational_defect(m.omega_z, &r.rotational_theta);
  return r;
}

double closure_defect(const SurfaceMesh& m) {
  double r = 0.0;
  for (int j = 0; j < m.ny; ++j) {
    Vec4 d = lin(1.0, m.points[m.idx(m.nx - 1, j)], -1.0, m.points[m.idx(0, j)]);
    r = std::max(r, std::sqrt(dot(d, d)));
  }
  return r;
}

void write_obj(const SurfaceMesh& m, const std::string& path, const Vec4& pole) {
  // orthonormal basis of the complement of the pole
  std::vector<Vec4> basis;
  for (int k = 0; k < 4 && basis.size() < 3; ++k) {
    Vec4 e{0, 0, 0, 0};
    e[k] = 1.0;
    Vec4 v = lin(1.0, e, -dot(e, pole), pole);
    for (const Vec4& b : basis) v = lin(1.0, v, -dot(v, b), b);
    double n = std::sqrt(dot(v, v));
    if (n > 1e-8) basis.push_back(lin(1.0 / n, v, 0.0, v));
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  for (const Vec4& p : m.points) {
    double den = 1.0 - dot(p, pole);
    out << "v " << format_double(dot(p, basis[0]) / den) << ' ' << format_double(dot(p, basis[1]) / den) << ' '
        << format_double(dot(p, basis[2]) / den) << '\n';
  }
  for (int j = 0; j + 1 < m.ny; ++j)
    for (int i = 0; i + 1 < m.nx; ++i) {
      size_t a = m.idx(i, j) + 1, b = m.idx(i + 1, j) + 1, c = m.idx(i + 1, j + 1) + 1, d = m.idx(i, j + 1) + 1;
      out << "f " << a << ' ' << b << ' ' << c << ' ' << d << '\n';
    }
}

void write_r4_csv(const SurfaceMesh& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << "i,j,x,y,f0,f1,f2,f3,omega\n";
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const Vec4& p = m.points[m.idx(i, j)];
      out << i << ',' << j << ',' << format_double(i * m.hx) << ',' << format_double(j * m.hy);
      for (double v : p) out << ',' << format_double(v);
      out << ',' << format_double(m.omega[m.idx(i, j)]) << '\n';
    }
}

}  // namespace scmc
