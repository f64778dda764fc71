#include "chiro/double_circle.hpp"

#include <string>

#include "chiro/error.hpp"
#include "chiro/polycalc.hpp"

namespace chiro {

DenseQ qk_step(const DenseQ& q) {
  DenseQ next(q.size() + 2, 0);
  for (unsigned d = 2; d < q.size(); ++d) {
    if (q[d] == 0) continue;
    const auto n = n_coefficients(d, 3);
    for (std::size_t s = 0; s < n.size(); ++s)
      if (n[s] != 0) mpz_addmul(next[s].get_mpz_t(), q[d].get_mpz_t(), n[s].get_mpz_t());
  }
  for (unsigned d = 0; d < 2 && d < q.size(); ++d)
    if (q[d] != 0) fail(Errc::OutOfRange, "Q has a term of degree below 2");
  while (!next.empty() && next.back() == 0) next.pop_back();
  return next;
}

namespace {

// Divides in place by (u - 1); returns false on a nonzero remainder.
bool divide_by_u_minus_1(DenseQ& p) {
  if (p.empty()) return true;
  mpz_class carry = 0;
  DenseQ out(p.size() - 1);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry += p[i];
    out[i - 1] = carry;
  }
  carry += p[0];
  if (carry != 0) return false;
  p = std::move(out);
  return true;
}

}  // namespace

DenseQ qk_step_closedform(const DenseQ& q) {
  mpz_class q1 = 0, dq1 = 0;
  for (std::size_t e = 0; e < q.size(); ++e) {
    q1 += q[e];
    dq1 += q[e] * static_cast<unsigned long>(e);
  }
  // (Q(u) - Q(1)) (u^4 - u^3 + u^2) - Q'(1) (u^3 - u^2)
  DenseQ shifted = q;
  if (shifted.empty()) shifted.resize(1, 0);
  shifted[0] -= q1;
  DenseQ num(std::max<std::size_t>(shifted.size() + 4, 4), 0);
  for (std::size_t e = 0; e < shifted.size(); ++e) {
    num[e + 4] += shifted[e];
    num[e + 3] -= shifted[e];
    num[e + 2] += shifted[e];
  }
  num[3] -= dq1;
  num[2] += dq1;
  if (!divide_by_u_minus_1(num) || !divide_by_u_minus_1(num))
    fail(Errc::InternalInvariantViolation, "closed-form step leaves a nonzero remainder");
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

UnivarPoly to_univar(const DenseQ& q) {
  UnivarPoly p;
  for (unsigned e = 0; e < q.size(); ++e) p.add(e, q[e]);
  return p;
}

DenseQ to_dense(const UnivarPoly& p) {
  if (p.is_zero()) return {};
  DenseQ q(p.max_exp() + 1, 0);
  for (const auto& [e, c] : p.terms()) q[e] = c;
  return q;
}

QkTable::QkTable(int kmax, bool keep_polys) : kmax_(kmax), keep_polys_(keep_polys) {
  if (kmax < 1) fail(Errc::OutOfRange, "Q_k table needs kmax >= 1");
  DenseQ cur{0, 0, 0, 1};
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) cur = qk_step(cur);
    mpz_class one = 0, deriv = 0;
    for (std::size_t e = 0; e < cur.size(); ++e) {
      one += cur[e];
      deriv += cur[e] * static_cast<unsigned long>(e);
    }
    at_one_.push_back(one);
    u2_.push_back(cur.size() > 2 ? cur[2] : mpz_class(0));
    deriv_.push_back(deriv);
    if (keep_polys_) polys_.push_back(cur);
  }
}

void QkTable::check(int k) const {
  if (k < 1 || k > kmax_) fail(Errc::OutOfRange, "k=" + std::to_string(k) + " outside the table");
}

const DenseQ& QkTable::q(int k) const {
  check(k);
  if (!keep_polys_) fail(Errc::OutOfRange, "table was built without polynomials");
  return polys_[static_cast<std::size_t>(k - 1)];
}

const mpz_class& QkTable::at_one(int k) const {
  check(k);
  return at_one_[static_cast<std::size_t>(k - 1)];
}

const mpz_class& QkTable::u2_coeff(int k) const {
  check(k);
  return u2_[static_cast<std::size_t>(k - 1)];
}

const mpz_class& QkTable::derivative_at_one(int k) const {
  check(k);
  return deriv_[static_cast<std::size_t>(k - 1)];
}

mpz_class dc_count(const QkTable& table, int k) {
  if (k < 3) fail(Errc::OutOfRange, "double circle count needs k >= 3");
  return table.at_one(k - 1) - table.u2_coeff(k - 1);
}

mpz_class dc_count(int k) {
  if (k < 3) fail(Errc::OutOfRange, "double circle count needs k >= 3");
  return dc_count(QkTable(k - 1, false), k);
}

}  // namespace chiro
