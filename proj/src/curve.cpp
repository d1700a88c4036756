#include "scmc/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace scmc {

namespace {

constexpr int kGL = 10;

struct GaussLegendre {
  std::array<double, kGL> x{}, w{};
  GaussLegendre() {
    for (int i = 0; i < kGL; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (kGL + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= kGL; ++k) {
          double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kGL * (z * p1 - p0) / (z * z - 1.0);
        double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre& gl() {
  static const GaussLegendre g;
  return g;
}

template <class F>
cplx gl_rule(const F& f, double s0, double s1) {
  const auto& q = gl();
  double c = 0.5 * (s0 + s1), r = 0.5 * (s1 - s0);
  cplx sum{};
  for (int i = 0; i < kGL; ++i) sum += q.w[i] * f(c + r * q.x[i]);
  return sum * r;
}

template <class F>
cplx adaptive(const F& f, double s0, double s1, cplx whole, double tol, int depth, double& err) {
  double m = 0.5 * (s0 + s1);
  cplx l = gl_rule(f, s0, m), r = gl_rule(f, m, s1);
  double diff = std::abs(l + r - whole);
  if (diff <= tol * (s1 - s0) || diff <= 1e-14 * std::abs(l + r) || depth >= 48) {
    err += diff;
    return l + r;
  }
  return adaptive(f, s0, m, l, tol, depth + 1, err) + adaptive(f, m, s1, r, tol, depth + 1, err);
}

// Distance from s to the segment [p, q] and the parameter of the projection.
std::pair<double, double> segment_distance(cplx p, cplx q, cplx s) {
  cplx d = q - p;
  double len2 = std::norm(d);
  double t = len2 > 0 ? std::clamp(((s - p) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
  return {std::abs(p + t * d - s), t};
}

}  // namespace

CurvePoint sigma(const CurvePoint& p) { return {p.lambda, -p.nu}; }

CurvePoint rho(const CurvePoint& p, int g) {
  cplx lb = std::conj(p.lambda);
  return {1.0 / lb, std::pow(lb, 1 - g) * std::conj(p.nu)};
}

CurvePoint eta(const CurvePoint& p, int g) { return sigma(rho(p, g)); }

Curve::Curve(SpectralData d, double branch_guard) : d_(std::move(d)), guard_(branch_guard) {
  if (d_.a.is_zero()) throw DegenerateError("a vanishes identically");
  if (d_.a.degree() >= 1) roots_ = roots(d_.a);
  if (!roots_.empty()) {
    const Root* pick_root = &roots_.front();
    for (const Root& r : roots_)
      if (r.multiplicity % 2 == 1) {
        pick_root = &r;
        break;
      }
    base_ = {pick_root->value, 0.0};
  } else {
    cplx b0 = d_.b[0], b1 = d_.b[1];
    cplx l0 = std::abs(b1) > 0 ? b0 / b1 : cplx(-1.0, 0.0);
    base_ = {l0, std::sqrt(nu_squared(l0))};
  }
}

cplx Curve::nu_squared(cplx l) const {
  if (roots_.empty()) return d_.a(l) / l;
  cplx v = d_.a.coeffs().back() / l;
  for (const Root& r : roots_) v *= std::pow(l - r.value, r.multiplicity);
  return v;
}

bool Curve::is_singular(cplx l) const {
  if (std::abs(l) <= guard_) return true;
  for (const Root& r : roots_)
    if (std::abs(l - r.value) <= guard_ * std::max(1.0, std::abs(r.value))) return true;
  return false;
}

cplx Curve::pick(cplx l, cplx ref) const {
  cplx c = std::sqrt(nu_squared(l));
  return std::abs(c - ref) <= std::abs(c + ref) ? c : -c;
}

SheetPath Curve::nu_continue(const std::vector<cplx>& samples, const CurvePoint& seed) const {
  if (samples.empty()) return {};
  if (std::abs(samples.front() - seed.lambda) > 1e-12 * std::max(1.0, std::abs(seed.lambda)))
    throw PreconditionError("first sample differs from the seed");
  SheetPath out;
  out.reserve(samples.size());
  CurvePoint first = seed;
  if (std::abs(seed.lambda) == 0.0) throw PoleError("seed at lambda = 0");
  if (is_singular(seed.lambda)) first.nu = 0.0;
  out.push_back(first);
  for (size_t k = 1; k < samples.size(); ++k) {
    cplx l = samples[k];
    if (std::abs(l) <= guard_) throw PoleError("sample at lambda = 0");
    bool last = k + 1 == samples.size();
    if (is_singular(l)) {
      if (!last) throw BranchProximity("interior sample within branch_guard of a root of a");
      out.push_back({l, 0.0});
      continue;
    }
    cplx prev = out.back().nu;
    cplx c = std::sqrt(nu_squared(l));
    if (prev == cplx{}) {
      out.push_back({l, c});
      continue;
    }
    double dp = std::abs(c - prev), dm = std::abs(c + prev);
    if (std::abs(dp - dm) <= 1e-3 * (dp + dm))
      throw BranchAmbiguity("continuation step too large: both roots equidistant");
    out.push_back({l, dp < dm ? c : -c});
  }
  return out;
}

std::vector<cplx> Curve::segment_samples(cplx from, cplx to) const {
  std::vector<cplx> sing{0.0};
  for (const Root& r : roots_) sing.push_back(r.value);
  auto is_end = [&](cplx s) {
    double tol = guard_ * std::max(1.0, std::abs(s));
    return std::abs(s - from) <= tol || std::abs(s - to) <= tol;
  };

  // detour points around singular points lying close to the segment
  std::vector<std::pair<double, cplx>> detours;
  cplx dir = to - from;
  double len = std::abs(dir);
  if (len == 0.0) return {from};
  dir /= len;
  // pass the pole of dh on the left of the segment, at a distance comparable to the endpoints
  {
    auto [dist, t] = segment_distance(from, to, 0.0);
    double r = 0.5 * std::min(std::abs(from), std::abs(to));
    if (t > 0.0 && t < 1.0 && dist < 0.5 * r) {
      cplx via = from + t * (to - from) + cplx(0.0, 1.0) * dir * r;
      std::vector<cplx> out = segment_samples(from, via), rest = segment_samples(via, to);
      out.insert(out.end(), rest.begin() + 1, rest.end());
      return out;
    }
  }
  for (cplx s : sing) {
    if (is_end(s)) continue;
    auto [dist, t] = segment_distance(from, to, s);
    if (dist < guard_ && t > 0.0 && t < 1.0) detours.emplace_back(t, s);
  }
  std::sort(detours.begin(), detours.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<cplx> way{from};
  for (const auto& [t, s] : detours) {
    double R = 2.0 * guard_ * std::max(1.0, std::abs(s));
    for (int j = 0; j <= 8; ++j) way.push_back(s - R * dir * std::polar(1.0, -M_PI * j / 8.0));
  }
  way.push_back(to);

  std::vector<cplx> out{from};
  for (size_t w = 0; w + 1 < way.size(); ++w) {
    cplx x = way[w], y = way[w + 1];
    int guard_count = 0;
    while (std::abs(y - x) > 0.0) {
      double d = INFINITY;
      for (cplx s : sing)
        if (!is_end(s)) d = std::min(d, std::abs(x - s));
      double rem = std::abs(y - x);
      double step = std::min({0.5 * d, rem, 0.25});
      if (step >= rem) {
        x = y;
      } else {
        if (step < 0.25 * guard_) throw BranchProximity("path passes within branch_guard of a branch point");
        x += step * (y - x) / rem;
      }
      out.push_back(x);
      if (++guard_count > 1000000) throw BranchProximity("path sampling did not terminate");
    }
  }
  return out;
}

Quadrature Curve::chord(const CurvePoint& p, const CurvePoint& q) const {
  const Poly& b = d_.b;
  cplx dl = q.lambda - p.lambda;
  double err = 0.0;
  cplx val;
  const double tol = 0.1 * kQuadTol;
  if (p.nu == cplx{} && q.nu == cplx{}) {
    cplx m = 0.5 * (p.lambda + q.lambda);
    CurvePoint mid{m, std::sqrt(nu_squared(m))};
    Quadrature l = chord(p, mid), r = chord(mid, q);
    return {l.value + r.value, l.error + r.error};
  }
  if (p.nu == cplx{} || q.nu == cplx{}) {
    bool start = p.nu == cplx{};
    const CurvePoint& s0 = start ? p : q;  // singular end
    const CurvePoint& s1 = start ? q : p;
    cplx d = s1.lambda - s0.lambda;
    auto f = [&](double s) {
      cplx l = s0.lambda + d * (s * s);
      cplx nu = pick(l, s * s1.nu);
      return b(l) / (nu * l * l) * (2.0 * s) * d;
    };
    val = adaptive(f, 0.0, 1.0, gl_rule(f, 0.0, 1.0), tol, 0, err);
    if (!start) val = -val;
    return {val, err};
  }
  auto f = [&](double s) {
    cplx l = p.lambda + dl * s;
    cplx nu = pick(l, (1.0 - s) * p.nu + s * q.nu);
    return b(l) / (nu * l * l) * dl;
  };
  val = adaptive(f, 0.0, 1.0, gl_rule(f, 0.0, 1.0), tol, 0, err);
  return {val, err};
}

Quadrature Curve::integrate_dh(const SheetPath& path) const {
  Quadrature out{0.0, 0.0};
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    const CurvePoint& p = path[k];
    const CurvePoint& q = path[k + 1];
    if (std::abs(p.lambda) <= guard_ || std::abs(q.lambda) <= guard_) throw PoleError("path meets lambda = 0");
    for (const Root& r : roots_) {
      double tol = guard_ * std::max(1.0, std::abs(r.value));
      bool endp = std::abs(p.lambda - r.value) <= tol || std::abs(q.lambda - r.value) <= tol;
      if (!endp && segment_distance(p.lambda, q.lambda, r.value).first < tol)
        throw BranchProximity("chord passes within branch_guard of a root of a");
    }
    Quadrature c = chord(p, q);
    out.value += c.value;
    out.error += c.error;
  }
  return out;
}

Curve::Evaluation Curve::evaluate(cplx target) const {
  auto samples = segment_samples(base_.lambda, target);
  SheetPath path = nu_continue(samples, base_);
  Quadrature q = integrate_dh(path);
  return {path.back(), q.value, q.error};
}

std::vector<Curve::Evaluation> Curve::circle_scan(int n, double theta0) const {
  std::vector<Evaluation> out;
  out.reserve(n);
  out.push_back(evaluate(std::polar(1.0, theta0)));
  for (int k = 1; k < n; ++k) {
    cplx l = std::polar(1.0, theta0 + 2.0 * M_PI * k / n);
    const Evaluation& prev = out.back();
    CurvePoint next{l, pick(l, prev.point.nu)};
    if (is_singular(l)) next.nu = 0.0;
    Quadrature q = chord(prev.point, next);
    out.push_back({next, prev.h + q.value, prev.error + q.error});
  }
  return out;
}

SheetPath nu_continue(const SpectralData& d, const std::vector<cplx>& samples, const CurvePoint& seed) {
  return Curve(d).nu_continue(samples, seed);
}

Quadrature integrate_dh(const SpectralData& d, const SheetPath& path) {
  return Curve(d).integrate_dh(path);
}

cplx delta_eval(const SpectralData& d, cplx lambda, const CurvePoint& base, cplx h_base) {
  Curve c(d);
  SheetPath p = c.nu_continue(c.segment_samples(base.lambda, lambda), base);
  return 2.0 * std::cosh(h_base + c.integrate_dh(p).value);
}

double distance_to_pi_i_z(cplx h) {
  double m = std::round(h.imag() / M_PI);
  return std::abs(h - cplx(0.0, M_PI * m));
}

double short_arc_length(const SpectralData& d) {
  double t = std::arg(d.lambda2() / d.lambda1);
  if (t <= 0.0) t += 2.0 * M_PI;
  return t;
}

double mean_curvature(const SpectralData& d) {
  cplx l1 = d.lambda1, l2 = d.lambda2();
  return (cplx(0.0, 1.0) * (l1 + l2) / (l2 - l1)).real();
}

double ConditionReport::max_residual() const {
  return std::max({reality.residual, segments.residual, branch_values.residual, sym_values.residual,
                   normalization.residual});
}

ConditionReport check_conditions(const SpectralData& d, double tol) {
  ConditionReport rep;
  RealityCheck ra = check_reality(d.a, RealityClass::a(d.g), tol);
  RealityCheck rb = check_reality(d.b, RealityClass::b(d.g), tol);
  rep.residual_a = ra.residual;
  rep.residual_b = rb.residual;
  rep.sign_min = ra.sign_min;
  bool degree_ok = d.a.degree() == 2 * d.g && !d.b.is_zero();
  rep.reality = {ra.pass && rb.pass && degree_ok, std::max(ra.residual, rb.residual)};

  Curve curve(d);
  for (const Root& r : curve.branch_roots()) rep.roots_of_a.push_back(r.value);

  // (ii) real parts of the integrals between reflected roots
  rep.segments = {true, 0.0};
  try {
    ReflectPairing pr = reflect_pairing(d.a, d.g);
    for (const auto& [p, q] : pr.pairs) {
      auto s = curve.segment_samples(p, q);
      Quadrature v = curve.integrate_dh(curve.nu_continue(s, {p, 0.0}));
      double res = std::abs(v.value.real());
      rep.segment_residuals.push_back(res);
      rep.segments.residual = std::max(rep.segments.residual, res);
    }
    rep.segments.pass = rep.segments.residual < tol;
  } catch (const RealityViolation&) {
    rep.segments = {false, INFINITY};
  }

  // (iii) h at the roots of a, anchored at a root
  rep.branch_values = {true, 0.0};
  for (const Root& r : curve.branch_roots()) {
    cplx h = curve.h_at(r.value);
    rep.h_roots.push_back(h);
    rep.branch_values.residual = std::max(rep.branch_values.residual, distance_to_pi_i_z(h));
  }
  rep.branch_values.pass = rep.branch_values.residual < tol;

  // (iv) closing at the Sym points
  Curve::Evaluation e1 = curve.evaluate(d.lambda1), e2 = curve.evaluate(d.lambda2());
  rep.h1 = e1.h;
  rep.h2 = e2.h;
  rep.m1 = std::lround(e1.h.imag() / M_PI);
  rep.m2 = std::lround(e2.h.imag() / M_PI);
  rep.f1 = std::sinh(e1.h) / e1.point.nu;
  rep.f2 = std::sinh(e2.h) / e2.point.nu;
  rep.g1 = std::cosh(e1.h);
  rep.g2 = std::cosh(e2.h);
  double r4 = std::max(distance_to_pi_i_z(e1.h), distance_to_pi_i_z(e2.h));
  rep.sym_values = {r4 < tol, r4};

  // (v) normalizations
  rep.abs_a0_defect = std::abs(std::abs(d.a[0]) - 1.0 / 16.0);
  rep.sym_defect = std::max(std::abs(std::abs(d.lambda1) - 1.0), std::abs(d.lambda1 * d.lambda2() - 1.0));
  double r5 = std::max(rep.abs_a0_defect, rep.sym_defect);
  bool sym_ok = d.lambda1.imag() < 0.0 && std::abs(d.lambda1 - d.lambda2()) > tol;
  rep.normalization = {r5 < tol && sym_ok, r5};
  return rep;
}

}  // namespace scmc
