#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chiro/chirotope.hpp"
#include "chiro/enumerate.hpp"
#include "chiro/poly.hpp"

namespace chiro {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Grammar:
//   expr    := primary { ('v' | '^') primary }     v = join, ^ = meet
//   primary := '(' expr ')' | IDENT | IDENT '(' args ')'
// Infix operators are left-associative with equal precedence; mixing v and ^
// in one chain needs parentheses.
struct Expr {
  enum class Kind { Join, Meet, Twist, Flip, Generator, Load };

  Kind kind;
  std::string name;            // generator name
  std::vector<long> ints;      // generator arguments
  std::string path;            // load
  std::optional<long> root;    // load
  std::vector<ExprPtr> children;

  friend bool operator==(const Expr& a, const Expr& b);
};

/// ParseError, UnknownIdentifier or BadArity, with line and column.
ExprPtr parse_expr(std::string_view src);

/// Canonical function-call form; reparses to an equal tree.
std::string print_expr(const Expr& e);

struct EvalOptions {
  EnumOptions enumeration;  // oracle cap doubles as the materialization cap
};

/// Builds the rooted chirotope. TooLarge once any intermediate result exceeds
/// the oracle cap.
RootedChirotope eval_materialize(const Expr& e, const EvalOptions& opt = {});

/// P of the expression without materializing compositions. Koch and chi_k
/// generators expand through the recursion; other leaves are enumerated.
BivarPoly eval_polynomial(const Expr& e, const EvalOptions& opt = {});

/// Weak-triangulation count of the expression; a top-level join or meet is
/// scored from the operands' marginals without building its P.
mpz_class eval_weak_count(const Expr& e, const EvalOptions& opt = {});

}  // namespace chiro
