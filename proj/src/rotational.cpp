#include "scmc/rotational.hpp"

#include <cmath>

namespace scmc::rot {

double beta0(double H, bool non_embedded) {
  double s = std::sqrt(H * H + 1.0);
  double den = non_embedded ? 2.0 * s - 2.0 * H : 2.0 * s + 2.0 * H;
  return M_PI * std::sqrt(s / den);
}

double beta1(double H, double alpha) {
  double s = std::sqrt(H * H + 1.0);
  return M_PI * std::sqrt(s / (2.0 * H + alpha * s));
}

cplx sym_point(double H) { return cplx(H, -1.0) / std::sqrt(H * H + 1.0); }

namespace {

SpectralData first_genus0(double H) {
  double b0 = M_PI * std::sqrt(std::sqrt(H * H + 1.0) / (2.0 * std::sqrt(H * H + 1.0) + 2.0 * H));
  return {0, Poly{-1.0 / 16.0}, Poly{-b0 / 8.0, b0 / 8.0}, sym_point(H)};
}

}  // namespace

SpectralData genus0(double H, bool non_embedded) {
  if (!std::isfinite(H) || H < 0.0) throw DomainError("H must be finite and nonnegative");
  if (!non_embedded) return first_genus0(H);
  return reflect_minus(first_genus0(-H));
}

SpectralData genus1(double H, double alpha) {
  if (!std::isfinite(H) || H < 0.0) throw DomainError("H must be finite and nonnegative");
  if (!(alpha >= 2.0) || !std::isfinite(alpha)) throw DomainError("alpha must be at least 2");
  double b1 = beta1(H, alpha);
  return {1, Poly{-1.0 / 16.0, -alpha / 16.0, -1.0 / 16.0}, Poly{b1 / 8.0, 0.0, -b1 / 8.0}, sym_point(H)};
}

SpectralData embed_genus0_to_1(const SpectralData& d) {
  if (d.g != 0) throw PreconditionError("embedding expects genus 0 data");
  Poly p{1.0, 1.0};
  return {1, p * p * d.a, p * d.b, d.lambda1};
}

SpectralData reflect_minus(const SpectralData& d) {
  double sa = d.g % 2 == 0 ? 1.0 : -1.0;
  cplx sb = std::pow(cplx(0.0, 1.0), d.g + 1);
  return {d.g, sa * scale_argument(d.a, -1.0), sb * scale_argument(d.b, -1.0), -d.lambda2()};
}

cplx genus0_h(const SpectralData& d, const CurvePoint& p) {
  return 2.0 * (d.b[1] * p.lambda - d.b[0]) / (p.lambda * p.nu);
}

cplx genus1_h(double b1, const CurvePoint& p) { return 4.0 * b1 * p.nu; }

const char* to_string(Membership::Kind k) {
  switch (k) {
    case Membership::Rot0: return "Rot0";
    case Membership::Rot1: return "Rot1";
    case Membership::Boundary: return "Boundary";
    case Membership::Outside: return "Outside";
  }
  return "Outside";
}

Membership classify_membership(const SpectralData& d, double tol) {
  Membership m;
  double H = mean_curvature(d);
  m.H = H;
  if (H < -tol) return m;
  H = std::max(H, 0.0);
  auto b_matches = [&](const Poly& ref) {
    return std::min(max_coeff_diff(d.b, ref), max_coeff_diff(d.b, -ref)) < tol;
  };
  bool boundary_H = H <= tol;
  if (d.g == 0) {
    SpectralData ref = genus0(H);
    if (max_coeff_diff(d.a, ref.a) < tol && b_matches(ref.b) &&
        std::abs(d.lambda1 - ref.lambda1) < tol)
      m.kind = boundary_H ? Membership::Boundary : Membership::Rot0;
    return m;
  }
  if (d.g == 1) {
    double alpha = (-16.0 * d.a[1]).real();
    m.alpha = alpha;
    if (alpha < 2.0 - tol) return m;
    SpectralData ref = genus1(H, std::max(alpha, 2.0));
    if (max_coeff_diff(d.a, ref.a) < tol && b_matches(ref.b) &&
        std::abs(d.lambda1 - ref.lambda1) < tol)
      m.kind = boundary_H || std::abs(alpha - 2.0) <= tol ? Membership::Boundary : Membership::Rot1;
  }
  return m;
}

}  // namespace scmc::rot

namespace scmc::rot {

std::vector<SweepEntry> sweep(const std::vector<double>& Hs, const std::vector<double>& alphas, double tol,
                              bool parallel) {
  std::vector<SweepEntry> out;
  for (double H : Hs) out.push_back({0, H, 0.0, {}});
  for (double H : Hs)
    for (double a : alphas) out.push_back({1, H, a, {}});
  const int n = static_cast<int>(out.size());
  auto run = [&](int k) {
    SweepEntry& e = out[k];
    e.report = check_conditions(e.genus == 0 ? genus0(e.H) : genus1(e.H, e.alpha), tol);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) run(k);
  } else {
    for (int k = 0; k < n; ++k) run(k);
  }
  return out;
}

}  // namespace scmc::rot
