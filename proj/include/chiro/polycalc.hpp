#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "chiro/poly.hpp"

namespace chiro {

/// Binomial coefficient from a shared, lazily grown Pascal triangle.
/// Thread-safe. Returns 0 for k > m.
const mpz_class& binomial(unsigned m, unsigned k);

/// Dense coefficients of N_{d1,d2}, indexed by u-exponent.
std::vector<mpz_class> n_coefficients(unsigned d1, unsigned d2);

/// N_{d1,d2}(u); OutOfRange unless d1, d2 >= 2.
UnivarPoly n_poly(unsigned d1, unsigned d2);

/// N_{d1,d2}(1) = C(d1+d2-2, d1-1).
mpz_class n_at_one(unsigned d1, unsigned d2);

BivarPoly swap_vars(const BivarPoly& p);

/// P of a join from the operands' P. InternalInvariantViolation if the
/// division by v is inexact; OutOfRange on a u-exponent below 2.
BivarPoly join_P(const BivarPoly& p1, const BivarPoly& p2);
BivarPoly meet_P(const BivarPoly& p1, const BivarPoly& p2);

/// Minimal-v slice; EmptyInput on the zero polynomial.
UnivarPoly q_from_p(const BivarPoly& p);

/// Q of a join from the operands' Q; OutOfRange on an exponent below 2.
UnivarPoly join_Q(const UnivarPoly& q1, const UnivarPoly& q2);

enum class CompositionKind { Join, Meet };

/// Weak-triangulation count of the composition, from marginals only; equals
/// join_P / meet_P evaluated at (1, 1).
mpz_class count_weak_join(const BivarPoly& p1, const BivarPoly& p2, CompositionKind kind);

/// (U, V) with P = U(u) V(v) when the coefficient matrix has rank one. V is
/// primitive with positive leading coefficient.
std::optional<std::pair<UnivarPoly, UnivarPoly>> try_split(const BivarPoly& p);

/// P of the Koch chain at the given level, all levels through the recursion.
BivarPoly koch_P(int level);

}  // namespace chiro
