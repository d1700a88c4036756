#include "scmc/whitham.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace scmc::whitham {

namespace {

constexpr cplx I{0.0, 1.0};

SpectralData as_data(const Point& p) { return {p.g, p.a, p.b, p.l1}; }

Point axpy(const Point& p, double h, const Tangent& k) {
  return {p.g, p.a + k.a_dot * cplx(h), p.b + k.b_dot * cplx(h), p.l1 + h * k.l1_dot, p.l2 + h * k.l2_dot};
}

// real basis of class A(g) then class B(g)
std::vector<Poly> class_basis(int n, double sign) {
  std::vector<Poly> out;
  for (int k = 0; 2 * k < n; ++k) {
    std::vector<cplx> re(n + 1), im(n + 1);
    re[k] = 1.0;
    re[n - k] = sign;
    im[k] = I;
    im[n - k] = -sign * I;
    out.emplace_back(re);
    out.emplace_back(im);
  }
  if (n % 2 == 0) {
    std::vector<cplx> mid(n + 1);
    mid[n / 2] = sign > 0 ? cplx(1.0) : I;
    out.emplace_back(mid);
  }
  return out;
}

bool has_common_root(const Poly& a, const Poly& b, cplx* where) {
  double scale = std::max(b.max_abs_coeff(), 1e-300);
  for (const Root& r : roots(a)) {
    double denom = 0.0, pw = 1.0;
    for (int k = 0; k <= b.degree(); ++k) {
      denom += std::abs(b[k]) * pw;
      pw *= std::abs(r.value);
    }
    if (std::abs(b(r.value)) <= kCommonRootTol * std::max(denom, scale)) {
      if (where) *where = r.value;
      return true;
    }
  }
  return false;
}

double wrap_angle(double x) {
  x = std::fmod(x, 2.0 * M_PI);
  return x < 0.0 ? x + 2.0 * M_PI : x;
}

// +1 when the anticlockwise arc from l1 to l2 is the short one
int short_orientation(cplx l1, cplx l2) {
  return wrap_angle(std::arg(l2) - std::arg(l1)) <= M_PI ? 1 : -1;
}

bool in_short_arc(cplx l1, cplx l2, cplx beta) {
  int o = short_orientation(l1, l2);
  cplx from = o > 0 ? l1 : l2;
  cplx to = o > 0 ? l2 : l1;
  return wrap_angle(std::arg(beta) - std::arg(from)) < wrap_angle(std::arg(to) - std::arg(from));
}

std::vector<cplx> circle_roots(const Poly& b, double tol = 1e-6) {
  std::vector<cplx> out;
  for (cplx r : roots_flat(b))
    if (std::abs(std::abs(r) - 1.0) < tol) out.push_back(r);
  return out;
}

cplx nearest(const std::vector<cplx>& pts, cplx z) {
  if (pts.empty()) throw StrategyError("no candidate root of b");
  return *std::min_element(pts.begin(), pts.end(),
                           [&](cplx x, cplx y) { return std::abs(x - z) < std::abs(y - z); });
}

}  // namespace

Point to_point(const SpectralData& d) { return {d.g, d.a, d.b, d.lambda1, d.lambda2()}; }
SpectralData to_data(const Point& p) { return {p.g, p.a, p.b, p.l1}; }

cplx normalization_defect(const Point& p, const Poly& c) {
  cplx b1 = p.b(p.l1), b2 = p.b(p.l2);
  double scale = std::max(p.b.max_abs_coeff(), 1e-300);
  if (std::abs(b1) < 1e-12 * scale || std::abs(b2) < 1e-12 * scale)
    throw SymSingularity("b vanishes at a Sym point");
  return c(p.l1) / b1 + c(p.l2) / b2;
}

Poly normalize_c(const Point& p, const Poly& c) {
  cplx q = normalization_defect(p, c);
  double r = (I * q / 2.0).real();
  return c + p.b * cplx(0.0, r);
}

Tangent derivative(const Point& p, const Poly& c, bool require_normalization) {
  const int g = p.g;
  RealityCheck rc = check_reality(c, RealityClass::c(g), 1e-8 * std::max(1.0, c.max_abs_coeff()));
  if (!rc.pass) throw RealityViolation("c is not in class C");
  cplx where;
  if (has_common_root(p.a, p.b, &where)) throw SingularVectorField("a and b share a root");
  if (require_normalization) {
    cplx q = normalization_defect(p, c);
    double scale = std::abs(c(p.l1) / p.b(p.l1)) + 1.0;
    if (std::abs(q) > kNormalizationTol * scale) throw PreconditionError("c violates the Sym normalization");
  }

  Poly lam = Poly::monomial(1);
  Poly rhs = 2.0 * (lam * p.a * c.derivative()) - p.a * c - lam * p.a.derivative() * c;

  std::vector<Poly> ba = class_basis(2 * g, 1.0), bb = class_basis(g + 1, -1.0);
  const int n_a = static_cast<int>(ba.size()), n_b = static_cast<int>(bb.size());
  const int ncoef = 3 * g + 2;
  const int rows = 2 * ncoef + 1, cols = n_a + n_b;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(rows);
  cplx a0 = p.a[0];
  double a0n = std::max(std::abs(a0), 1e-300);
  auto put = [&](int col, const Poly& v) {
    for (int k = 0; k < ncoef; ++k) {
      M(2 * k, col) = v[k].real();
      M(2 * k + 1, col) = v[k].imag();
    }
  };
  for (int j = 0; j < n_a; ++j) {
    put(j, -(p.b * ba[j]));
    M(rows - 1, j) = (std::conj(a0) * ba[j][0]).real() / a0n;
  }
  for (int j = 0; j < n_b; ++j) put(n_a + j, 2.0 * (bb[j] * p.a));
  for (int k = 0; k < ncoef; ++k) {
    y(2 * k) = rhs[k].real();
    y(2 * k + 1) = rhs[k].imag();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= 1e-12 * sv(0))
    throw SingularVectorField("tangent system is rank deficient");
  Eigen::VectorXd x = svd.solve(y);

  Tangent t;
  for (int j = 0; j < n_a; ++j) t.a_dot += ba[j] * cplx(x(j));
  for (int j = 0; j < n_b; ++j) t.b_dot += bb[j] * cplx(x(n_a + j));
  double ynorm = std::max(1.0, y.lpNorm<Eigen::Infinity>());
  t.residual = (M * x - y).lpNorm<Eigen::Infinity>() / ynorm;
  if (t.residual > 1e-6) throw PreconditionError("no tangent solves the deformation equation");

  cplx b1 = p.b(p.l1), b2 = p.b(p.l2);
  if (b1 == cplx{} || b2 == cplx{}) throw SymSingularity("b vanishes at a Sym point");
  t.l1_dot = -p.l1 * c(p.l1) / b1;
  t.l2_dot = -p.l2 * c(p.l2) / b2;
  return t;
}

Tangent derivative(const SpectralData& d, const Poly& c, bool require_normalization) {
  return derivative(to_point(d), c, require_normalization);
}

Poly circle_root_kernel(const Poly& b, cplx beta) {
  auto [q, r] = divmod(b, Poly{-beta, 1.0});
  return Poly{beta, 1.0} * q;
}

Poly pair_root_kernel(const Poly& b, cplx beta, cplx C) {
  auto [q1, r1] = divmod(b, Poly{-beta, 1.0});
  cplx star = 1.0 / std::conj(beta);
  auto [q2, r2] = divmod(b, Poly{-star, 1.0});
  return C * q1 + (std::conj(C) / std::conj(beta)) * (Poly::monomial(1) * q2);
}

Poly solve_c_for_targets(const Point& p, const std::vector<Target>& targets) {
  const int g = p.g;
  std::vector<Root> rb = roots(p.b);
  int count = 0;
  for (const Root& r : rb) {
    if (r.multiplicity != 1) throw NotSimple("b has a multiple root");
    ++count;
  }
  if (count != g + 1) throw DegreeError("b must have g + 1 roots");
  std::vector<cplx> beta;
  for (const Root& r : rb) beta.push_back(r.value);

  std::vector<cplx> rate(beta.size(), 0.0);
  for (const Target& t : targets) {
    size_t j = 0;
    double best = INFINITY;
    for (size_t i = 0; i < beta.size(); ++i)
      if (std::abs(beta[i] - t.root) < best) best = std::abs(beta[i] - t.root), j = i;
    if (best > 1e-6 * (1.0 + std::abs(t.root))) throw PreconditionError("target is not at a root of b");
    rate[j] = t.rate;
  }

  Curve curve(as_data(p));
  std::vector<cplx> want(beta.size());
  for (size_t i = 0; i < beta.size(); ++i) {
    cplx nu = curve.evaluate(beta[i]).point.nu;
    want[i] = rate[i] * nu * beta[i];
  }
  Poly db = p.b.derivative();
  Poly c;
  std::vector<bool> done(beta.size(), false);
  for (size_t i = 0; i < beta.size(); ++i) {
    if (done[i]) continue;
    cplx be = beta[i];
    if (std::abs(std::abs(be) - 1.0) < 1e-8) {
      cplx s = want[i] / (2.0 * be * db(be));
      if (std::abs(s.imag()) > 1e-8 * (1.0 + std::abs(s)))
        throw RealityViolation("target at a circle root of b is not compatible with the reality condition");
      c += circle_root_kernel(p.b, be) * cplx(s.real());
      done[i] = true;
      continue;
    }
    cplx star = 1.0 / std::conj(be);
    size_t k = i;
    double best = INFINITY;
    for (size_t j = 0; j < beta.size(); ++j)
      if (j != i && std::abs(beta[j] - star) < best) best = std::abs(beta[j] - star), k = j;
    if (k == i || best > 1e-6 * (1.0 + std::abs(star))) throw RealityViolation("root of b without reflected partner");
    cplx C = want[i] / db(be);
    Poly K = pair_root_kernel(p.b, be, C);
    cplx got = K(beta[k]);
    if (std::abs(got - want[k]) > 1e-8 * (1.0 + std::abs(want[k]) + std::abs(want[i])))
      throw RealityViolation("targets at a reflected pair of roots are not compatible");
    c += K;
    done[i] = done[k] = true;
  }
  return normalize_c(p, project_c(c, g));
}

Poly solve_c_for_targets(const SpectralData& d, const std::vector<Target>& targets) {
  return solve_c_for_targets(to_point(d), targets);
}

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::RootsOfACollideOnCircle: return "roots_of_a_collide_on_circle";
    case EventKind::RootsOfACollideOffCircle: return "roots_of_a_collide_off_circle";
    case EventKind::DeltaAtRootOfBNearPm2: return "delta_at_root_of_b_near_pm2";
    case EventKind::SymPointMeetsRootOfB: return "sym_point_meets_root_of_b";
    case EventKind::ShortArcDegenerate: return "short_arc_degenerate";
    case EventKind::CommonRootOfAandB: return "common_root_of_a_and_b";
  }
  return "unknown";
}

Diagnostics monitors(const FlowState& s) {
  Diagnostics out;
  const SpectralData& d = s.data;
  std::vector<Root> ra = roots(d.a);
  for (const Root& r : ra)
    for (int m = 0; m < r.multiplicity; ++m) out.roots_a.push_back(r.value);
  out.roots_b = roots_flat(d.b);

  auto add = [&](EventKind k, cplx at) { out.active.push_back({k, at, s.t}); };

  for (const Root& r : ra) {
    if (r.multiplicity >= 2) {
      out.min_root_a_distance = 0.0;
      add(std::abs(std::abs(r.value) - 1.0) < kCollisionDistance ? EventKind::RootsOfACollideOnCircle
                                                                  : EventKind::RootsOfACollideOffCircle,
          r.value);
    }
  }
  for (size_t i = 0; i < ra.size(); ++i)
    for (size_t j = i + 1; j < ra.size(); ++j) {
      double dist = std::abs(ra[i].value - ra[j].value);
      out.min_root_a_distance = std::min(out.min_root_a_distance, dist);
      if (dist < kCollisionDistance) {
        cplx mid = 0.5 * (ra[i].value + ra[j].value);
        add(std::abs(std::abs(mid) - 1.0) < kCollisionDistance ? EventKind::RootsOfACollideOnCircle
                                                              : EventKind::RootsOfACollideOffCircle,
            mid);
      }
    }

  std::unique_ptr<Curve> curve;
  try {
    curve = std::make_unique<Curve>(d);
  } catch (const Error&) {
  }
  for (cplx be : out.roots_b) {
    double da = INFINITY;
    for (cplx r : out.roots_a) da = std::min(da, std::abs(be - r));
    out.min_b_to_a = std::min(out.min_b_to_a, da);
    if (da < kCollisionDistance) add(EventKind::CommonRootOfAandB, be);
    double ds = std::min(std::abs(be - d.lambda1), std::abs(be - d.lambda2()));
    out.min_b_to_sym = std::min(out.min_b_to_sym, ds);
    if (ds < kCollisionDistance) add(EventKind::SymPointMeetsRootOfB, be);

    cplx delta(NAN, NAN);
    if (curve && da >= kCollisionDistance) {
      try {
        delta = 2.0 * std::cosh(curve->evaluate(be).h);
      } catch (const Error&) {
      }
    }
    out.delta_b.push_back(delta);
    if (std::isfinite(delta.real()) &&
        std::min(std::abs(delta - 2.0), std::abs(delta + 2.0)) < kDeltaThreshold)
      add(EventKind::DeltaAtRootOfBNearPm2, be);
  }
  out.short_arc = short_arc_length(d);
  if (out.short_arc < kCollisionDistance) add(EventKind::ShortArcDegenerate, d.lambda1);
  return out;
}

namespace {

class ShrinkShortArcStrategy : public Strategy {
 public:
  explicit ShrinkShortArcStrategy(const SpectralData& d) {
    std::vector<cplx> cr = circle_roots(d.b);
    if (cr.empty()) throw StrategyError("b has no root on the unit circle");
    beta_ = cr.front();
    for (cplx r : cr)
      if (in_short_arc(d.lambda1, d.lambda2(), r)) {
        beta_ = r;
        break;
      }
  }
  std::string name() const override { return "shrink_short_arc"; }
  Poly c(const Point& p, double) override {
    beta_ = nearest(circle_roots(p.b), beta_);
    Poly c = normalize_c(p, project_c(circle_root_kernel(p.b, beta_), p.g));
    double rate = 2.0 * (c(p.l1) / p.b(p.l1)).imag() * short_orientation(p.l1, p.l2);
    if (std::abs(rate) < 1e-14) throw StrategyError("circle root of b does not move the Sym points");
    return rate > 0.0 ? -c : c;
  }

 private:
  cplx beta_;
};

class SeparateDoubleRootStrategy : public Strategy {
 public:
  SeparateDoubleRootStrategy(const SpectralData& d, int sign) {
    const Root* dbl = nullptr;
    std::vector<Root> rb = roots(d.b, 1e-5);
    for (const Root& r : rb)
      if (r.multiplicity >= 2) dbl = &r;
    if (!dbl) throw StrategyError("b has no double root");
    cplx beta = dbl->value;
    if (std::abs(std::abs(beta) - 1.0) > 1e-6) throw StrategyError("double root of b is not on the unit circle");
    beta /= std::abs(beta);
    Poly K = project_c(circle_root_kernel(d.b, beta), d.g);

    double th = std::arg(beta), h = 1e-4;
    cplx nu0 = std::sqrt(d.a(beta) / beta);
    auto nu_at = [&](cplx l) {
      cplx n = std::sqrt(d.a(l) / l);
      return std::abs(n - nu0) <= std::abs(-n - nu0) ? n : -n;
    };
    auto ratio = [&](const Poly& q, double t) {
      cplx l = std::polar(1.0, t);
      return q(l) / (nu_at(l) * l);
    };
    cplx r2 = (ratio(d.b, th + h) + ratio(d.b, th - h)) / (2.0 * h * h);
    cplx dC = -I * (ratio(K, th + h) - ratio(K, th - h)) / (2.0 * h);
    double s = (dC / r2).real();
    if (std::abs(s) < 1e-14) throw StrategyError("separation direction is degenerate");
    // along the circle when s_K dC / r2 < 0
    double along = s < 0.0 ? 1.0 : -1.0;
    K_ = K * cplx(sign > 0 ? along : -along);
  }
  std::string name() const override { return "separate_double_root_of_b"; }
  Poly c(const Point& p, double) override { return normalize_c(p, K_); }

 private:
  Poly K_;
};

class MoveCircleRootStrategy : public Strategy {
 public:
  MoveCircleRootStrategy(const SpectralData& d, cplx beta, double dir) : dir_(dir) {
    beta_ = nearest(circle_roots(d.b), beta);
  }
  std::string name() const override { return "move_circle_root"; }
  Poly c(const Point& p, double) override {
    beta_ = nearest(circle_roots(p.b), beta_);
    return normalize_c(p, project_c(circle_root_kernel(p.b, beta_), p.g) * cplx(dir_));
  }

 private:
  cplx beta_;
  double dir_;
};

class TrackTargetsStrategy : public Strategy {
 public:
  TrackTargetsStrategy(const SpectralData& d, StrategySpec::Kind, decltype(StrategySpec::curves) f)
      : f_(std::move(f)), tracked_(roots_flat(d.b)) {
    if (!f_) throw StrategyError("no target curves given");
  }
  std::string name() const override { return "track_targets"; }
  Poly c(const Point& p, double t) override {
    std::vector<cplx> now = roots_flat(p.b);
    if (now.size() != tracked_.size()) throw StrategyError("number of roots of b changed");
    std::vector<cplx> matched;
    for (cplx r : tracked_) matched.push_back(nearest(now, r));
    tracked_ = matched;
    std::vector<cplx> rates = f_(t, tracked_);
    if (rates.size() != tracked_.size()) throw StrategyError("target curves must give one rate per root of b");
    std::vector<Target> tg;
    for (size_t i = 0; i < tracked_.size(); ++i) tg.push_back({tracked_[i], rates[i]});
    return solve_c_for_targets(p, tg);
  }

 private:
  decltype(StrategySpec::curves) f_;
  std::vector<cplx> tracked_;
};

class RotationStrategy : public Strategy {
 public:
  std::string name() const override { return "rotation"; }
  Poly c(const Point& p, double) override { return p.b * I; }
  bool normalized() const override { return false; }
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const SpectralData& initial) {
  switch (spec.kind) {
    case StrategySpec::ShrinkShortArc: return std::make_unique<ShrinkShortArcStrategy>(initial);
    case StrategySpec::SeparateDoubleRootOfB:
      return std::make_unique<SeparateDoubleRootStrategy>(initial, spec.sign);
    case StrategySpec::MoveCircleRoot:
      return std::make_unique<MoveCircleRootStrategy>(initial, spec.beta, spec.direction);
    case StrategySpec::TrackTargets:
      return std::make_unique<TrackTargetsStrategy>(initial, spec.kind, spec.curves);
    case StrategySpec::Rotation: return std::make_unique<RotationStrategy>();
  }
  throw StrategyError("unknown strategy");
}

Point rk4(const Point& p, Strategy& s, double t, double dt, bool require_normalization) {
  // stage points leave the circle at O(dt^2), where the normalization is only approximate
  Tangent k1 = derivative(p, s.c(p, t), require_normalization);
  auto f = [&](const Point& q, double tq) { return derivative(q, s.c(q, tq), false); };
  Tangent k2 = f(axpy(p, dt / 2, k1), t + dt / 2);
  Tangent k3 = f(axpy(p, dt / 2, k2), t + dt / 2);
  Tangent k4 = f(axpy(p, dt, k3), t + dt);
  Tangent sum;
  sum.a_dot = k1.a_dot + 2.0 * k2.a_dot + 2.0 * k3.a_dot + k4.a_dot;
  sum.b_dot = k1.b_dot + 2.0 * k2.b_dot + 2.0 * k3.b_dot + k4.b_dot;
  sum.l1_dot = k1.l1_dot + 2.0 * k2.l1_dot + 2.0 * k3.l1_dot + k4.l1_dot;
  sum.l2_dot = k1.l2_dot + 2.0 * k2.l2_dot + 2.0 * k3.l2_dot + k4.l2_dot;
  return axpy(p, dt / 6, sum);
}

FlowState step(const FlowState& s, Strategy& strat, double dt, StepStats* stats) {
  if (dt == 0.0) return s;
  if (!strat.normalized()) throw PreconditionError("strategy does not preserve the Sym normalization");
  const int g = s.data.g;
  Point raw = rk4(to_point(s.data), strat, s.t, dt);

  Poly a = project_a(raw.a, g);
  double a0 = std::abs(a[0]);
  if (a0 == 0.0) throw DegenerateError("a(0) vanished");
  a *= cplx(1.0 / (16.0 * a0));
  Poly b = project_b(raw.b, g);
  cplx l1 = raw.l1 / std::abs(raw.l1);
  double proj = std::max({max_coeff_diff(a, raw.a), max_coeff_diff(b, raw.b), std::abs(l1 - raw.l1),
                          std::abs(1.0 / l1 - raw.l2)});
  double bound = std::max(10.0 * std::pow(dt, 4), 1e-13);
  if (stats) *stats = {proj, bound};
  if (proj > bound) throw StepRejected("projection exceeded the step bound");

  FlowState out;
  out.data = {g, a, b, l1};
  out.t = s.t + dt;
  out.events = s.events;
  Diagnostics dg = monitors(out);
  for (const FlowEvent& e : dg.active) {
    bool seen = false;
    for (const FlowEvent& p : s.active)
      if (p.kind == e.kind && std::abs(p.location - e.location) < 1e-2) seen = true;
    if (!seen) out.events.push_back(e);
  }
  out.active = dg.active;
  return out;
}

FlowState advance(const FlowState& s, Strategy& strat, double dt, int max_halvings) {
  try {
    return step(s, strat, dt);
  } catch (const StepRejected&) {
    if (max_halvings <= 0) throw;
    FlowState mid = advance(s, strat, dt / 2, max_halvings - 1);
    return advance(mid, strat, dt / 2, max_halvings - 1);
  }
}

SpectralData genus_jump_up(const SpectralData& d, const Poly& p) {
  if (p.degree() < 1) throw PreconditionError("jump polynomial must have positive degree");
  if (!check_reality(p, RealityClass::p(p.degree()), 1e-10).pass)
    throw RealityViolation("jump polynomial is not in class P");
  Curve curve(d);
  for (const Root& r : roots(p)) {
    cplx h = curve.evaluate(r.value).h;
    if (std::abs(std::sinh(h)) >= 1e-8) throw JumpObstruction("sinh h does not vanish at a root of p");
    Poly q = d.b;
    for (int k = 1; k < r.multiplicity; ++k) {
      if (std::abs(q(r.value)) > 1e-8 * std::max(1.0, d.b.max_abs_coeff()))
        throw JumpObstruction("b does not vanish to the order required at a multiple root of p");
      q = q.derivative();
    }
  }
  return {d.g + p.degree(), p * p * d.a, p * d.b, d.lambda1};
}

JumpDown genus_jump_down(const SpectralData& d, std::optional<Poly> p) {
  if (!p) {
    std::vector<cplx> rs;
    for (const Root& r : roots(d.a, 1e-5)) {
      cplx z = r.value;
      if (r.multiplicity >= 2) {
        Poly da = d.a.derivative(), dda = da.derivative();
        for (int k = 0; k < 4 && dda(z) != cplx{}; ++k) z -= da(z) / dda(z);
      }
      for (int k = 0; k < r.multiplicity / 2; ++k) rs.push_back(z);
    }
    if (rs.empty()) throw PreconditionError("a has no multiple roots");
    p = class_p_from_roots(rs);
  }
  auto [A, ra] = divmod(d.a, *p * *p);
  auto [B, rb] = divmod(d.b, *p);
  double res = std::max(ra.max_abs_coeff(), rb.max_abs_coeff());
  if (res > 1e-8) throw DivisionResidual("division leaves a remainder");
  int g = d.g - p->degree();
  return {{g, project_a(A, g), project_b(B, g), d.lambda1}, *p, res};
}

std::pair<cplx, cplx> sym_h(const SpectralData& d) {
  Curve c(d);
  return {c.h_at(d.lambda1), c.h_at(d.lambda2())};
}

double closing_drift(cplx h, cplx h0) {
  double best = INFINITY;
  for (double s : {1.0, -1.0})
    for (int k = -1; k <= 1; ++k) best = std::min(best, std::abs(h - s * h0 - cplx(0.0, 2.0 * M_PI * k)));
  return best;
}

}  // namespace scmc::whitham
