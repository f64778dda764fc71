#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace chiro {

/// Sparse polynomial in u with arbitrary-precision coefficients. Zero
/// coefficients are never stored.
class UnivarPoly {
 public:
  using Terms = std::map<unsigned, mpz_class>;

  UnivarPoly() = default;
  static UnivarPoly monomial(unsigned e, const mpz_class& c = 1);

  void add(unsigned e, const mpz_class& c);
  mpz_class coeff(unsigned e) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Throw EmptyInput on the zero polynomial.
  unsigned min_exp() const;
  unsigned max_exp() const;

  mpz_class at_one() const;
  mpz_class derivative_at_one() const;

  UnivarPoly& operator+=(const UnivarPoly& o);
  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

  /// Human-readable form in the given variable, highest degree first.
  std::string to_string(char var = 'u') const;

 private:
  Terms terms_;
};

/// Sparse polynomial in u, v; keys are (u-exponent, v-exponent).
class BivarPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;
  using Terms = std::map<Key, mpz_class>;

  BivarPoly() = default;
  static BivarPoly monomial(unsigned eu, unsigned ev, const mpz_class& c = 1);
  /// U(u) * V(v).
  static BivarPoly product(const UnivarPoly& u_part, const UnivarPoly& v_part);

  void add(unsigned eu, unsigned ev, const mpz_class& c);
  mpz_class coeff(unsigned eu, unsigned ev) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  mpz_class at_one() const;

  /// [v^e]P as a polynomial in u.
  UnivarPoly v_slice(unsigned ev) const;
  /// [u^e]P as a polynomial in v.
  UnivarPoly u_slice(unsigned eu) const;
  /// d -> ([u^d]P)(v=1), as a polynomial in u.
  UnivarPoly u_marginal() const;
  /// d -> ([v^d]P)(u=1), as a polynomial in v.
  UnivarPoly v_marginal() const;

  unsigned min_v_exp() const;

  BivarPoly& operator+=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

// {"terms":[[e,"c"],...]} and {"terms":[[eu,ev,"c"],...]}, ascending.
std::string to_json(const UnivarPoly& p);
std::string to_json(const BivarPoly& p);
UnivarPoly univar_from_json(std::string_view text);
BivarPoly bivar_from_json(std::string_view text);

}  // namespace chiro
