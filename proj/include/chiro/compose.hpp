#pragma once

#include <vector>

#include "chiro/chirotope.hpp"
#include "chiro/geometry.hpp"

namespace chiro {

/// Where the operand labels land in a join or meet.
///
/// Result labels are laid out as: left-operand labels (minus its root and
/// the merged hull neighbour) in increasing order, then right-operand labels
/// likewise, then the merged element x0, then the root last.
struct LabelMap {
  std::vector<Label> from_left;
  std::vector<Label> from_right;
  Label x0 = -1;
  Label new_root = -1;
};

struct Composition {
  RootedChirotope result;
  LabelMap map;
};

/// Join: roots merged, u1- merged with u2+, the right operand's interior on
/// the root side of every line of the left operand and vice versa.
Composition join(const RootedChirotope& left, const RootedChirotope& right);

/// Twist: replaces the root u by the opposite element v, negating every
/// triple through the root. Labels are unchanged. An involution.
RootedChirotope twist(const RootedChirotope& rc);

/// Meet as twist(join(twist(left), twist(right))).
Composition meet(const RootedChirotope& left, const RootedChirotope& right);

/// Meet filled directly triple by triple (negated mixed cases). Agrees with
/// `meet` on every triple.
Composition meet_direct(const RootedChirotope& left, const RootedChirotope& right);

RootedChirotope triangle();

/// Convex n-gon labeled counterclockwise 0..n-1, rooted at 0.
RootedChirotope convex(int n);

/// chi_1 = meet(triangle, triangle); chi_{k+1} = join(chi_k, chi_1).
RootedChirotope chi_k(int k);

inline constexpr int kKochMaterializeCap = 5;

/// K_0 = triangle; odd levels join two copies of the previous level, even
/// levels meet them. Size 2^i + 2. Levels above kKochMaterializeCap throw
/// TooLarge; count those through the polynomial pipeline instead.
RootedChirotope koch(int level);

/// Double circle on 2k exact rational points. Outer points are labeled
/// 0..k-1 counterclockwise on the unit circle, inner point k+j sits just
/// inside the hull edge (j, j+1 mod k).
PointSet double_circle_points(int k);

/// Chirotope of double_circle_points(k), rooted at outer label 0.
RootedChirotope double_circle(int k);

}  // namespace chiro
