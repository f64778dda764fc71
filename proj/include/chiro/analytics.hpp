#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "chiro/double_circle.hpp"

namespace chiro {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;

/// Sets the working precision (significant decimal digits) for the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// K(x, u) = (u-1)^2 (1 - x u^2) - x u^3.
Real kernel(const Real& x, const Real& u);

struct KernelPoint {
  Real x;
  Real u1;  // root in (1, 2)
  Real u2;  // root in (0, 1)
};

/// OutOfRange unless 0 < x < 1/12.
KernelPoint small_roots(const Real& x);

struct FValues {
  Real F;
  Real dF;
};

/// F(x,1) and dF/du(x,1) from the small roots. NumericalInstability if the
/// common denominator vanishes to working precision.
FValues f_closed(const Real& x);

/// Truncated sums over k <= terms of Q_k(1) x^k and Q_k'(1) x^k.
FValues f_series(const QkTable& table, const Real& x, int terms);

/// Truncated F(x, u) = sum_{k <= terms} Q_k(u) x^k; table must keep polys.
Real f_series_at(const QkTable& table, const Real& x, const Real& u, int terms);

/// F K - [u^3 (u-1)^2 x - (u^4 - u^3 + u^2) x F(x,1) - x u^2 (u-1) dF(x,1)],
/// everything from the truncated series.
Real functional_residual(const QkTable& table, const Real& x, const Real& u, int terms);

struct AsymptoticConstants {
  Real c1, c2, d1, d2;
  Real theorem_constant;  // 9 c2 / (2 sqrt(pi))
};

AsymptoticConstants constants();

/// theorem_constant * 12^(k-2) * k^(-3/2).
Real dc_estimate(int k);

struct AsymptoticRow {
  int k;
  mpz_class exact;
  Real estimate;
  Real ratio;
};

std::vector<AsymptoticRow> asymptotic_report(const QkTable& table, const std::vector<int>& ks);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Real& r, int digits);

}  // namespace chiro
