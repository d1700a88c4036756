#include "scmc/poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace scmc {

namespace {

void trim_exact(std::vector<cplx>& c) {
  while (!c.empty() && c.back() == cplx{}) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim_exact(c_); }

Poly Poly::monomial(int k, cplx c) {
  std::vector<cplx> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<cplx>& rs, cplx lead) {
  std::vector<cplx> c{lead};
  for (cplx r : rs) {
    std::vector<cplx> n(c.size() + 1);
    for (size_t k = 0; k < c.size(); ++k) {
      n[k + 1] += c[k];
      n[k] -= r * c[k];
    }
    c = std::move(n);
  }
  return Poly(std::move(c));
}

cplx Poly::eval(cplx z) const {
  cplx s{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * z + *it;
  return s;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cplx> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Poly(std::move(d));
}

Poly Poly::trimmed(double tol) const {
  double m = max_abs_coeff();
  std::vector<cplx> c = c_;
  while (!c.empty() && std::abs(c.back()) <= tol * m) c.pop_back();
  return Poly(std::move(c));
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (cplx x : c_) m = std::max(m, std::abs(x));
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (cplx& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim_exact(c_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim_exact(c_);
  return *this;
}

Poly& Poly::operator*=(cplx s) {
  for (cplx& x : c_) x *= s;
  trim_exact(c_);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DegenerateError("division by the zero polynomial");
  std::vector<cplx> r = num.coeffs();
  int n = num.degree(), d = den.degree();
  if (num.is_zero() || n < d) return {Poly{}, num};
  std::vector<cplx> q(n - d + 1);
  cplx lead = den[d];
  for (int k = n - d; k >= 0; --k) {
    cplx t = r[k + d] / lead;
    q[k] = t;
    for (int j = 0; j <= d; ++j) r[k + j] -= t * den[j];
    r[k + d] = 0.0;
  }
  r.resize(d);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

double max_coeff_diff(const Poly& p, const Poly& q) {
  int n = std::max(p.coeffs().size(), q.coeffs().size());
  double m = 0.0;
  for (int k = 0; k < n; ++k) m = std::max(m, std::abs(p[k] - q[k]));
  return m;
}

Poly conjugate_reflect(const Poly& p, int n) {
  if (!p.is_zero() && p.degree() > n)
    throw DegreeError("reflection order " + std::to_string(n) + " below degree " +
                      std::to_string(p.degree()));
  std::vector<cplx> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = std::conj(p[n - k]);
  return Poly(std::move(c));
}

Poly scale_argument(const Poly& p, cplx s) {
  std::vector<cplx> c = p.coeffs();
  cplx f = 1.0;
  for (cplx& x : c) {
    x *= f;
    f *= s;
  }
  return Poly(std::move(c));
}

RealityCheck check_reality(const Poly& p, RealityClass cls, double tol) {
  RealityCheck out;
  int n = 0;
  double sign = 1.0;
  switch (cls.kind) {
    case RealityClass::A: n = 2 * cls.n; break;
    case RealityClass::B: n = cls.n + 1; sign = -1.0; break;
    case RealityClass::C: n = cls.n + 1; break;
    case RealityClass::P: n = cls.n; break;
  }
  if (!p.is_zero() && p.degree() > n) {
    out.residual = p.max_abs_coeff();
    return out;
  }
  out.residual = max_coeff_diff(conjugate_reflect(p, n), sign * p);
  bool ok = out.residual < tol;
  if (cls.kind == RealityClass::A) {
    double mn = INFINITY;
    for (int j = 0; j < kCircleGrid; ++j) {
      cplx l = std::polar(1.0, 2.0 * M_PI * j / kCircleGrid);
      mn = std::min(mn, -(std::pow(l, -cls.n) * p(l)).real());
    }
    out.sign_min = mn;
    ok = ok && mn >= -tol;
  }
  if (cls.kind == RealityClass::P) {
    out.unit_defect = std::abs(std::abs(p[0]) - 1.0);
    ok = ok && out.unit_defect < tol;
  }
  out.pass = ok;
  return out;
}

namespace {

Poly project(const Poly& p, int n, double sign) {
  return 0.5 * (p + sign * conjugate_reflect(p, n));
}

}  // namespace

Poly project_a(const Poly& a, int g) { return project(a, 2 * g, 1.0); }
Poly project_b(const Poly& b, int g) { return project(b, g + 1, -1.0); }
Poly project_c(const Poly& c, int g) { return project(c, g + 1, 1.0); }

namespace {

// Newton on q, accepting only steps that reduce |q|.
cplx polish(const Poly& q, const Poly& dq, cplx r, int steps) {
  for (int s = 0; s < steps; ++s) {
    cplx d = dq(r);
    if (d == cplx{}) break;
    cplx n = r - q(r) / d;
    if (!(std::abs(q(n)) < std::abs(q(r)))) break;
    r = n;
  }
  return r;
}

}  // namespace

std::vector<Root> roots(const Poly& p, double cluster_tol) {
  if (p.is_zero()) throw DegenerateError("roots of the zero polynomial");
  int n = p.degree();
  if (n == 0) return {};
  cplx lead = p[n];
  std::vector<cplx> raw;
  int zeros = 0;
  while (zeros < n && p[zeros] == cplx{}) ++zeros;
  int m = n - zeros;
  if (m > 0) {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) comp(i, m - 1) = -p[zeros + i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (int i = 0; i < m; ++i) raw.push_back(es.eigenvalues()(i));
  }
  Poly dp = p.derivative();
  for (cplx& r : raw) r = polish(p, dp, r, 2);
  for (int i = 0; i < zeros; ++i) raw.push_back(0.0);

  // cluster by single linkage
  int k = raw.size();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (std::abs(raw[i] - raw[j]) <= cluster_tol * std::max(1.0, std::abs(raw[i])))
        parent[find(i)] = find(j);
  std::vector<Root> out;
  std::vector<int> seen(k, -1);
  for (int i = 0; i < k; ++i) {
    int r = find(i);
    if (seen[r] < 0) {
      seen[r] = out.size();
      out.push_back({raw[i], 1});
    } else {
      Root& o = out[seen[r]];
      o.value = (o.value * static_cast<double>(o.multiplicity) + raw[i]) / static_cast<double>(o.multiplicity + 1);
      ++o.multiplicity;
    }
  }
  for (Root& r : out) {
    if (r.multiplicity < 2) continue;
    Poly q = p;
    for (int j = 1; j < r.multiplicity; ++j) q = q.derivative();
    r.value = polish(q, q.derivative(), r.value, 4);
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

std::vector<cplx> roots_flat(const Poly& p, double cluster_tol) {
  std::vector<cplx> out;
  for (const Root& r : roots(p, cluster_tol))
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.value);
  return out;
}

ReflectPairing reflect_pairing(const Poly& a, int g, double tol) {
  (void)g;
  ReflectPairing out;
  std::vector<Root> rs = roots(a);
  std::vector<int> left;
  for (const Root& r : rs) {
    if (std::abs(std::abs(r.value) - 1.0) <= tol) {
      out.unimodular.push_back(r);
    } else {
      for (int i = 0; i < r.multiplicity; ++i) left.push_back(&r - rs.data());
    }
  }
  std::vector<bool> used(left.size(), false);
  for (size_t i = 0; i < left.size(); ++i) {
    if (used[i]) continue;
    cplx r = rs[left[i]].value;
    cplx target = 1.0 / std::conj(r);
    size_t best = left.size();
    double bd = INFINITY;
    for (size_t j = 0; j < left.size(); ++j) {
      if (j == i || used[j]) continue;
      double d = std::abs(rs[left[j]].value - target);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    if (best == left.size() || bd > tol * std::max(1.0, std::abs(target)) * 10.0)
      throw RealityViolation("root without reflected partner");
    used[i] = used[best] = true;
    cplx p = rs[left[best]].value;
    if (std::abs(r) < 1.0) out.pairs.emplace_back(r, p);
    else out.pairs.emplace_back(p, r);
  }
  return out;
}

Poly class_p_from_roots(const std::vector<cplx>& rs) {
  cplx prod = 1.0;
  for (cplx r : rs) prod *= -std::conj(r);
  cplx kappa = std::polar(1.0, 0.5 * std::arg(prod));
  return Poly::from_roots(rs, kappa);
}

}  // namespace scmc
