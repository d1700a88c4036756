#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scmc/curve.hpp"

namespace scmc::whitham {

// Flow variables with both Sym points kept independent, so that flows which
// do not fix lambda1 lambda2 = 1 (the rotation c = i b) can be integrated.
struct Point {
  int g = 0;
  Poly a;
  Poly b;
  cplx l1;
  cplx l2;
};

Point to_point(const SpectralData& d);
SpectralData to_data(const Point& p);

struct Tangent {
  Poly a_dot;
  Poly b_dot;
  cplx l1_dot;
  cplx l2_dot;
  double residual = 0.0;  // coefficient residual of 2 b' a - b a' = 2 lambda a c' - a c - lambda a' c
};

inline constexpr double kCommonRootTol = 1e-7;
inline constexpr double kNormalizationTol = 1e-10;

// Sum of c/b over the Sym points.
cplx normalization_defect(const Point& p, const Poly& c);
// c + r i b, r real, with zero normalization defect
Poly normalize_c(const Point& p, const Poly& c);

Tangent derivative(const Point& p, const Poly& c, bool require_normalization = true);
Tangent derivative(const SpectralData& d, const Poly& c, bool require_normalization = true);

// Target rates d/dt h(beta) at roots of b; roots absent from the list get 0.
// Rates refer to the sheet reached from Curve::base() along a straight segment.
struct Target {
  cplx root;
  cplx rate;
};
Poly solve_c_for_targets(const Point& p, const std::vector<Target>& targets);
Poly solve_c_for_targets(const SpectralData& d, const std::vector<Target>& targets);

// ((lambda + beta)/(lambda - beta)) b for a simple root beta of b on the circle
Poly circle_root_kernel(const Poly& b, cplx beta);
// (C/(lambda - beta) - conj(C) lambda/(1 - conj(beta) lambda)) b for a root off the circle
Poly pair_root_kernel(const Poly& b, cplx beta, cplx C);

enum class EventKind {
  RootsOfACollideOnCircle,
  RootsOfACollideOffCircle,
  DeltaAtRootOfBNearPm2,
  SymPointMeetsRootOfB,
  ShortArcDegenerate,
  CommonRootOfAandB,
};
const char* to_string(EventKind k);

struct FlowEvent {
  EventKind kind;
  cplx location;
  double time = 0.0;
};

inline constexpr double kDeltaThreshold = 1e-3;
inline constexpr double kCollisionDistance = 1e-4;

struct Diagnostics {
  std::vector<cplx> roots_a;
  std::vector<cplx> roots_b;
  std::vector<cplx> delta_b;         // Delta at each root of b (NaN where undefined)
  double min_root_a_distance = INFINITY;
  double min_b_to_a = INFINITY;
  double min_b_to_sym = INFINITY;
  double short_arc = 0.0;
  std::vector<FlowEvent> active;     // conditions holding at this state
};

struct FlowState {
  SpectralData data;
  double t = 0.0;
  std::vector<FlowEvent> events;
  std::vector<FlowEvent> active;
};

Diagnostics monitors(const FlowState& s);

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Poly c(const Point& p, double t) = 0;
  // false for flows that leave lambda1 lambda2 = 1 (only usable with rk4)
  virtual bool normalized() const { return true; }
};

struct StrategySpec {
  enum Kind { ShrinkShortArc, SeparateDoubleRootOfB, MoveCircleRoot, TrackTargets, Rotation } kind;
  // SeparateDoubleRootOfB: +1 separates along the circle, -1 off the circle
  int sign = 1;
  // MoveCircleRoot: the root to move (nearest circle root of b) and direction
  cplx beta{1.0, 0.0};
  double direction = 1.0;
  // TrackTargets: rates at the roots of b, ordered as tracked from the initial state
  std::function<std::vector<cplx>(double t, const std::vector<cplx>& roots_b)> curves;
};

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const SpectralData& initial);

// classical RK4 on Point, no projection
Point rk4(const Point& p, Strategy& s, double t, double dt, bool require_normalization = true);

struct StepStats {
  double projection = 0.0;
  double bound = 0.0;
};

// RK4 step followed by projection onto the reality classes, renormalization of
// |a(0)| and lambda2 = 1/lambda1, and the monitors.
FlowState step(const FlowState& s, Strategy& strat, double dt, StepStats* stats = nullptr);
// step with dt halving on StepRejected
FlowState advance(const FlowState& s, Strategy& strat, double dt, int max_halvings = 8);

SpectralData genus_jump_up(const SpectralData& d, const Poly& p);
struct JumpDown {
  SpectralData data;
  Poly p;
  double residual = 0.0;
};
JumpDown genus_jump_down(const SpectralData& d, std::optional<Poly> p = std::nullopt);

// h at the Sym points, anchored at Curve::base()
std::pair<cplx, cplx> sym_h(const SpectralData& d);
// min over sign and periods 2 pi i k (|k| <= 1) of |h - s h0 - 2 pi i k|
double closing_drift(cplx h, cplx h0);

}  // namespace scmc::whitham
