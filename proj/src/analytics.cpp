#include "chiro/analytics.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

#include "chiro/error.hpp"

namespace chiro {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real kernel(const Real& x, const Real& u) {
  const Real w = u - 1;
  return w * w * (1 - x * u * u) - x * u * u * u;
}

namespace {

Real dkernel_du(const Real& x, const Real& u) {
  const Real w = u - 1;
  return 2 * w * (1 - x * u * u) - 2 * x * u * w * w - 3 * x * u * u;
}

// Root of K(x, .) in (lo, hi), K(lo) and K(hi) of opposite signs.
Real bracketed_root(const Real& x, Real lo, Real hi) {
  const bool lo_positive = kernel(x, lo) > 0;
  const Real tol = pow(Real(10), -static_cast<int>(Real::default_precision()) / 2 - 5);
  while (hi - lo > tol) {
    const Real mid = (lo + hi) / 2;
    if ((kernel(x, mid) > 0) == lo_positive)
      lo = mid;
    else
      hi = mid;
  }
  Real r = (lo + hi) / 2;
  for (int i = 0; i < 4; ++i) {
    const Real d = dkernel_du(x, r);
    if (d == 0) break;
    const Real next = r - kernel(x, r) / d;
    if (next <= lo - tol || next >= hi + tol) break;
    r = next;
  }
  return r;
}

}  // namespace

KernelPoint small_roots(const Real& x) {
  if (!(x > 0) || !(x < Real(1) / 12)) fail(Errc::OutOfRange, "small_roots needs 0 < x < 1/12");
  return {x, bracketed_root(x, Real(1), Real(2)), bracketed_root(x, Real(0), Real(1))};
}

FValues f_closed(const Real& x) {
  const KernelPoint kp = small_roots(x);
  const Real& u1 = kp.u1;
  const Real& u2 = kp.u2;
  const Real den = u1 + u2 - u1 * u2;
  const Real guard = pow(Real(10), -static_cast<int>(Real::default_precision()) / 2);
  if (abs(den) < guard) fail(Errc::NumericalInstability, "denominator u1 + u2 - u1 u2 vanishes");
  FValues out;
  out.F = (u1 - 1) * (1 - u2) * (u1 + u2 - 1) / den;
  out.dF = (u1 * u2 * (u1 * u2 - u1 - u2 + 2) + u1 * u1 + u2 * u2 - 2 * u1 - 2 * u2 + 1) / den;
  return out;
}

namespace {
Real to_real(const mpz_class& z) { return Real(z.get_str()); }
}  // namespace

FValues f_series(const QkTable& table, const Real& x, int terms) {
  if (terms < 1 || terms > table.kmax()) fail(Errc::OutOfRange, "series terms outside the Q_k table");
  FValues out{0, 0};
  Real xk = 1;
  for (int k = 1; k <= terms; ++k) {
    xk *= x;
    out.F += to_real(table.at_one(k)) * xk;
    out.dF += to_real(table.derivative_at_one(k)) * xk;
  }
  return out;
}

Real f_series_at(const QkTable& table, const Real& x, const Real& u, int terms) {
  if (terms < 1 || terms > table.kmax()) fail(Errc::OutOfRange, "series terms outside the Q_k table");
  Real sum = 0, xk = 1;
  for (int k = 1; k <= terms; ++k) {
    xk *= x;
    const DenseQ& q = table.q(k);
    Real val = 0;
    for (std::size_t e = q.size(); e-- > 0;) val = val * u + to_real(q[e]);
    sum += val * xk;
  }
  return sum;
}

Real functional_residual(const QkTable& table, const Real& x, const Real& u, int terms) {
  const Real F = f_series_at(table, x, u, terms);
  const FValues at1 = f_series(table, x, terms);
  const Real w = u - 1;
  const Real rhs = u * u * u * w * w * x - (u * u * u * u - u * u * u + u * u) * x * at1.F - x * u * u * w * at1.dF;
  return F * kernel(x, u) - rhs;
}

AsymptoticConstants constants() {
  const Real s = sqrt(Real(21));
  const Real pi = boost::math::constants::pi<Real>();
  AsymptoticConstants c;
  c.c1 = (-13 + 3 * s) / (7 - s);
  c.c2 = Real(12) / 7 * s * (5 - s) / ((7 - s) * (7 - s));
  c.d1 = (53 - 11 * s) / (7 - s);
  c.d2 = 4 * c.c2;
  c.theorem_constant = 9 * c.c2 / (2 * sqrt(pi));
  return c;
}

Real dc_estimate(int k) {
  const Real kk = k;
  return constants().theorem_constant * pow(Real(12), k - 2) / (kk * sqrt(kk));
}

std::vector<AsymptoticRow> asymptotic_report(const QkTable& table, const std::vector<int>& ks) {
  std::vector<AsymptoticRow> rows;
  for (int k : ks) {
    AsymptoticRow r{k, dc_count(table, k), dc_estimate(k), 0};
    r.ratio = to_real(r.exact) / r.estimate;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string to_decimal(const Real& r, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << r;
  return out.str();
}

}  // namespace chiro
