#include "chiro/polycalc.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>
#include <vector>

#include "chiro/error.hpp"

namespace chiro {

namespace {

class Pascal {
 public:
  const std::vector<mpz_class>& row(unsigned m) {
    std::lock_guard lock(mu_);
    while (rows_.size() <= m) {
      const std::size_t r = rows_.size();
      std::vector<mpz_class> next(r + 1);
      next[0] = 1;
      next[r] = 1;
      for (std::size_t k = 1; k < r; ++k) next[k] = rows_[r - 1][k - 1] + rows_[r - 1][k];
      rows_.push_back(std::move(next));
    }
    return rows_[m];
  }

 private:
  std::mutex mu_;
  std::deque<std::vector<mpz_class>> rows_;  // deque: references stay valid while growing
};

Pascal& pascal() {
  static Pascal p;
  return p;
}

const mpz_class kZero = 0;

}  // namespace

std::vector<mpz_class> n_coefficients(unsigned d1, unsigned d2) {
  if (d1 < 2 || d2 < 2)
    fail(Errc::OutOfRange, "N_{d1,d2} needs d1, d2 >= 2 (got " + std::to_string(d1) + ", " + std::to_string(d2) + ")");
  std::vector<mpz_class> c(d1 + d2, 0);
  c[d1 + d2 - 1] = 1;
  for (unsigned i1 = 1; i1 < d1; ++i1) {
    for (unsigned i2 = 1; i2 < d2; ++i2) {
      const auto& row = pascal().row(d1 - i1 + d2 - i2 - 2);
      c[i1 + i2] += row[d1 - i1 - 1];
    }
  }
  return c;
}

namespace {

void require_u_floor(const BivarPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (k.first < 2) fail(Errc::OutOfRange, "operand has a u-exponent below 2");
}

// d -> dense v-coefficients of [u^d]P.
std::vector<std::pair<unsigned, std::vector<mpz_class>>> u_rows(const BivarPoly& p) {
  std::vector<std::pair<unsigned, std::vector<mpz_class>>> rows;
  for (const auto& [k, c] : p.terms()) {
    if (rows.empty() || rows.back().first != k.first) rows.push_back({k.first, {}});
    auto& v = rows.back().second;
    if (v.size() <= k.second) v.resize(k.second + 1, 0);
    v[k.second] = c;
  }
  return rows;
}

}  // namespace

const mpz_class& binomial(unsigned m, unsigned k) {
  if (k > m) return kZero;
  return pascal().row(m)[k];
}

UnivarPoly n_poly(unsigned d1, unsigned d2) {
  const auto c = n_coefficients(d1, d2);
  UnivarPoly p;
  for (unsigned s = 0; s < c.size(); ++s) p.add(s, c[s]);
  return p;
}

mpz_class n_at_one(unsigned d1, unsigned d2) {
  if (d1 < 2 || d2 < 2) fail(Errc::OutOfRange, "N_{d1,d2} needs d1, d2 >= 2");
  return binomial(d1 + d2 - 2, d1 - 1);
}

BivarPoly swap_vars(const BivarPoly& p) {
  BivarPoly r;
  for (const auto& [k, c] : p.terms()) r.add(k.second, k.first, c);
  return r;
}

BivarPoly join_P(const BivarPoly& p1, const BivarPoly& p2) {
  if (p1.is_zero() || p2.is_zero()) fail(Errc::EmptyInput, "join of a zero polynomial");
  require_u_floor(p1);
  require_u_floor(p2);
  const auto rows1 = u_rows(p1);
  const auto rows2 = u_rows(p2);

  std::size_t vmax = 0;
  for (const auto& r1 : rows1)
    for (const auto& r2 : rows2) vmax = std::max(vmax, r1.second.size() + r2.second.size());
  const unsigned umax = rows1.back().first + rows2.back().first;
  std::vector<std::vector<mpz_class>> acc(umax, std::vector<mpz_class>(vmax, 0));

  std::vector<mpz_class> ab;
  for (const auto& [d1, a] : rows1) {
    for (const auto& [d2, b] : rows2) {
      ab.assign(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
          if (b[j] != 0) mpz_addmul(ab[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      }
      if (ab[0] != 0) fail(Errc::InternalInvariantViolation, "v-division is inexact: both operands have v^0 terms");
      const auto n = n_coefficients(d1, d2);
      for (std::size_t s = 0; s < n.size(); ++s) {
        if (n[s] == 0) continue;
        auto& row = acc[s];
        for (std::size_t t = 1; t < ab.size(); ++t)
          if (ab[t] != 0) mpz_addmul(row[t - 1].get_mpz_t(), n[s].get_mpz_t(), ab[t].get_mpz_t());
      }
    }
  }

  BivarPoly r;
  for (unsigned s = 0; s < acc.size(); ++s)
    for (unsigned t = 0; t < acc[s].size(); ++t) r.add(s, t, acc[s][t]);
  return r;
}

BivarPoly meet_P(const BivarPoly& p1, const BivarPoly& p2) {
  return swap_vars(join_P(swap_vars(p1), swap_vars(p2)));
}

UnivarPoly q_from_p(const BivarPoly& p) {
  if (p.is_zero()) fail(Errc::EmptyInput, "Q of the zero polynomial");
  return p.v_slice(p.min_v_exp());
}

UnivarPoly join_Q(const UnivarPoly& q1, const UnivarPoly& q2) {
  if (q1.is_zero() || q2.is_zero()) fail(Errc::EmptyInput, "join of a zero polynomial");
  if (q1.min_exp() < 2 || q2.min_exp() < 2) fail(Errc::OutOfRange, "operand has an exponent below 2");
  std::vector<mpz_class> acc(q1.max_exp() + q2.max_exp(), 0);
  for (const auto& [d1, c1] : q1.terms())
    for (const auto& [d2, c2] : q2.terms()) {
      const mpz_class w = c1 * c2;
      const auto n = n_coefficients(d1, d2);
      for (std::size_t s = 0; s < n.size(); ++s)
        if (n[s] != 0) mpz_addmul(acc[s].get_mpz_t(), w.get_mpz_t(), n[s].get_mpz_t());
    }
  UnivarPoly r;
  for (unsigned s = 0; s < acc.size(); ++s) r.add(s, acc[s]);
  return r;
}

mpz_class count_weak_join(const BivarPoly& p1, const BivarPoly& p2, CompositionKind kind) {
  if (p1.is_zero() || p2.is_zero()) fail(Errc::EmptyInput, "join of a zero polynomial");
  const BivarPoly& a = p1;
  const BivarPoly& b = p2;
  const bool join = kind == CompositionKind::Join;
  // For a meet the roles of u and v are exchanged.
  const UnivarPoly ma = join ? a.u_marginal() : a.v_marginal();
  const UnivarPoly mb = join ? b.u_marginal() : b.v_marginal();
  const UnivarPoly oa = join ? a.v_marginal() : a.u_marginal();
  const UnivarPoly ob = join ? b.v_marginal() : b.u_marginal();
  if (oa.min_exp() == 0 && ob.min_exp() == 0)
    fail(Errc::InternalInvariantViolation, "division by the opposite variable is inexact");
  if (ma.min_exp() < 2 || mb.min_exp() < 2) fail(Errc::OutOfRange, "operand has a root degree below 2");

  mpz_class total = 0;
  for (const auto& [d1, c1] : ma.terms())
    for (const auto& [d2, c2] : mb.terms()) total += c1 * c2 * n_at_one(d1, d2);
  return total;
}

std::optional<std::pair<UnivarPoly, UnivarPoly>> try_split(const BivarPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const unsigned a0 = p.terms().begin()->first.first;
  const UnivarPoly first = p.u_slice(a0);

  mpz_class g = 0;
  for (const auto& [e, c] : first.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (first.terms().rbegin()->second < 0) g = -g;
  UnivarPoly v;
  for (const auto& [e, c] : first.terms()) v.add(e, c / g);

  const unsigned b0 = v.terms().begin()->first;
  const mpz_class& v0 = v.terms().begin()->second;
  UnivarPoly u;
  std::vector<unsigned> us;
  for (const auto& [k, c] : p.terms())
    if (us.empty() || us.back() != k.first) us.push_back(k.first);
  for (unsigned a : us) {
    const UnivarPoly row = p.u_slice(a);
    const mpz_class c0 = row.coeff(b0);
    if (c0 == 0 || c0 % v0 != 0) return std::nullopt;
    const mpz_class lambda = c0 / v0;
    UnivarPoly scaled;
    for (const auto& [e, c] : v.terms()) scaled.add(e, c * lambda);
    if (!(scaled == row)) return std::nullopt;
    u.add(a, lambda);
  }
  return std::make_pair(std::move(u), std::move(v));
}

BivarPoly koch_P(int level) {
  if (level < 0) fail(Errc::OutOfRange, "koch level must be >= 0");
  BivarPoly p = BivarPoly::monomial(2, 2);
  for (int i = 1; i <= level; ++i) p = (i % 2 == 1) ? join_P(p, p) : meet_P(p, p);
  return p;
}

}  // namespace chiro
