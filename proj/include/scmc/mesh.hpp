#pragma once

#include <string>
#include <vector>

#include "scmc/frames.hpp"

namespace scmc {

struct MeshOptions {
  int nx = 64;
  int ny = 64;
  double x_extent = 1.0;  // x in [0, x_extent], endpoints included
  double y_extent = 1.0;
  int substeps = 4;       // RK4 steps per grid spacing
  int threads = 0;        // 0: OpenMP default
};

struct SurfaceMesh {
  int nx = 0, ny = 0;
  double hx = 0.0, hy = 0.0;
  std::vector<Vec4> points;  // row-major in x
  std::vector<double> omega;
  std::vector<cplx> omega_z;
  double max_correction = 0.0;  // largest unitarity re-projection

  size_t idx(int i, int j) const { return static_cast<size_t>(j) * nx + i; }
};

// Killing field and frames along the column x = 0, then along every row.
SurfaceMesh build_mesh(const Potential& xi, cplx l1, cplx l2, const MeshOptions& opt);
SurfaceMesh build_mesh_serial(const Potential& xi, cplx l1, cplx l2, const MeshOptions& opt);

// omega on an n x n grid of spacing h (Killing field only)
Grid omega_grid(const Potential& xi, int n, double h, int substeps = 4, bool parallel = true);

struct GeometryReport {
  double on_sphere = 0.0;            // max | |f| - 1 |
  double mean_curvature = 0.0;       // mean of the discrete |H|
  double mean_curvature_error = 0.0; // max | |H_disc| - |H| | / max(|H|, 1)
  double conformality = 0.0;         // max (| |f_x|^2 - |f_y|^2 | + 2 |<f_x, f_y>|) / |f_x|^2
  double conformal_factor = 0.0;     // max | |f_x|^2 / (e^{2 w} / (4 (H^2 + 1))) - 1 |
  double sinh_gordon = 0.0;          // only when hx == hy
  double rotational = 0.0;           // min over theta of sup |d_theta w|
  double rotational_theta = 0.0;
};

GeometryReport analyze(const SurfaceMesh& m, double H);

// min over directions theta of sup |cos(theta) w_x + sin(theta) w_y|, w_x = 2 Re w_z, w_y = -2 Im w_z
double rotational_defect(const std::vector<cplx>& omega_z, double* theta = nullptr);

// max |f(tau, y) - f(0, y)| between the first and last column
double closure_defect(const SurfaceMesh& m);

// stereographic projection from pole (unit vector in R^4)
void write_obj(const SurfaceMesh& m, const std::string& path, const Vec4& pole = {-1.0, 0.0, 0.0, 0.0});
void write_r4_csv(const SurfaceMesh& m, const std::string& path);

}  // namespace scmc
