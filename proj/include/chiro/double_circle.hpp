#pragma once

#include <gmpxx.h>

#include <vector>

#include "chiro/poly.hpp"

namespace chiro {

/// Dense polynomial: index is the u-exponent.
using DenseQ = std::vector<mpz_class>;

/// Q_{k+1} from Q_k by the N_{d,3} convolution.
DenseQ qk_step(const DenseQ& q);

/// Q_{k+1} from Q_k by the rational closed form, divided exactly by (u-1)^2.
/// InternalInvariantViolation on a nonzero remainder.
DenseQ qk_step_closedform(const DenseQ& q);

UnivarPoly to_univar(const DenseQ& q);
DenseQ to_dense(const UnivarPoly& p);

/// Q_1..Q_kmax of the chi_k family with Q_k(1), [u^2]Q_k and Q_k'(1) cached.
class QkTable {
 public:
  /// `keep_polys = false` keeps only the scalars.
  explicit QkTable(int kmax, bool keep_polys = true);

  int kmax() const noexcept { return kmax_; }
  /// Requires keep_polys; 1 <= k <= kmax.
  const DenseQ& q(int k) const;
  const mpz_class& at_one(int k) const;
  const mpz_class& u2_coeff(int k) const;
  const mpz_class& derivative_at_one(int k) const;

 private:
  void check(int k) const;

  int kmax_;
  bool keep_polys_;
  std::vector<DenseQ> polys_;
  std::vector<mpz_class> at_one_, u2_, deriv_;
};

/// Triangulations of the double circle on 2k points, k >= 3.
mpz_class dc_count(int k);
mpz_class dc_count(const QkTable& table, int k);

}  // namespace chiro
