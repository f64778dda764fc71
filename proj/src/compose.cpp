#include "chiro/compose.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace chiro {

namespace {

enum class Part : std::uint8_t { Left, Right, Merged, Root };

struct Origin {
  Part part;
  Label left;   // label in the left operand, or -1
  Label right;  // label in the right operand, or -1
};

// Shared filler for join and the direct meet. `mixed` multiplies the two
// mixed cases and the root triple with one element on each side.
Composition compose(const RootedChirotope& a, Label a_merge, const RootedChirotope& b, Label b_merge,
                    Sign mixed) {
  if (a.size() < 3 || b.size() < 3) fail(Errc::TooSmall, "operands need at least 3 elements each");
  const int n = a.size() + b.size() - 2;

  LabelMap map;
  map.from_left.assign(static_cast<std::size_t>(a.size()), -1);
  map.from_right.assign(static_cast<std::size_t>(b.size()), -1);
  map.x0 = n - 2;
  map.new_root = n - 1;

  std::vector<Origin> origin;
  origin.reserve(static_cast<std::size_t>(n));
  for (Label l = 0; l < a.size(); ++l) {
    if (l == a.root() || l == a_merge) continue;
    map.from_left[static_cast<std::size_t>(l)] = static_cast<Label>(origin.size());
    origin.push_back({Part::Left, l, -1});
  }
  for (Label l = 0; l < b.size(); ++l) {
    if (l == b.root() || l == b_merge) continue;
    map.from_right[static_cast<std::size_t>(l)] = static_cast<Label>(origin.size());
    origin.push_back({Part::Right, -1, l});
  }
  origin.push_back({Part::Merged, a_merge, b_merge});
  origin.push_back({Part::Root, a.root(), b.root()});
  map.from_left[static_cast<std::size_t>(a_merge)] = map.x0;
  map.from_right[static_cast<std::size_t>(b_merge)] = map.x0;
  map.from_left[static_cast<std::size_t>(a.root())] = map.new_root;
  map.from_right[static_cast<std::size_t>(b.root())] = map.new_root;

  const Chirotope& c1 = a.chi();
  const Chirotope& c2 = b.chi();
  const Label u1 = a.root(), u2 = b.root();

  Chirotope chi = Chirotope::build(n, [&](Label p, Label q, Label r) -> Sign {
    const Origin* o[3] = {&origin[static_cast<std::size_t>(p)], &origin[static_cast<std::size_t>(q)],
                          &origin[static_cast<std::size_t>(r)]};
    int lefts = 0, rights = 0;
    for (const Origin* e : o) {
      lefts += e->part == Part::Left;
      rights += e->part == Part::Right;
    }
    if (rights == 0) return c1.at(o[0]->left, o[1]->left, o[2]->left);
    if (lefts == 0) return c2.at(o[0]->right, o[1]->right, o[2]->right);
    if (o[2]->part == Part::Root) {
      // Root sorts last and left-only labels sort before right-only ones, so
      // the triple reads (x in X1 - x0, y in X2 - x0, root).
      return mixed;
    }
    if (rights == 1) {
      // x, y in X1 and z in X2 - x0: the X2 element stands in for u1.
      Label l[3];
      for (int i = 0; i < 3; ++i) l[i] = o[i]->part == Part::Right ? u1 : o[i]->left;
      return mixed * c1.at(l[0], l[1], l[2]);
    }
    // x in X1 - x0 and y, z in X2: the X1 element stands in for u2.
    Label l[3];
    for (int i = 0; i < 3; ++i) l[i] = o[i]->part == Part::Left ? u2 : o[i]->right;
    return mixed * c2.at(l[0], l[1], l[2]);
  });

  return {RootedChirotope(std::move(chi), n - 1), std::move(map)};
}

}  // namespace

Composition join(const RootedChirotope& left, const RootedChirotope& right) {
  if (left.size() < 3 || right.size() < 3) fail(Errc::TooSmall, "join operands need at least 3 elements each");
  return compose(left, hull_neighbors(left).minus, right, hull_neighbors(right).plus, Sign::Pos);
}

RootedChirotope twist(const RootedChirotope& rc) {
  const Chirotope& c = rc.chi();
  const Label u = rc.root();
  Chirotope t = Chirotope::build(c.size(), [&](Label i, Label j, Label k) {
    const Sign s = c.sorted_sign(i, j, k);
    return (i == u || j == u || k == u) ? -s : s;
  });
  return RootedChirotope(std::move(t), u);
}

Composition meet(const RootedChirotope& left, const RootedChirotope& right) {
  Composition inner = join(twist(left), twist(right));
  return {twist(inner.result), std::move(inner.map)};
}

Composition meet_direct(const RootedChirotope& left, const RootedChirotope& right) {
  if (left.size() < 3 || right.size() < 3) fail(Errc::TooSmall, "meet operands need at least 3 elements each");
  // The twist swaps hull neighbours, so the merged pair is u1+ and u2-.
  return compose(left, hull_neighbors(left).plus, right, hull_neighbors(right).minus, Sign::Neg);
}

RootedChirotope triangle() {
  return RootedChirotope(Chirotope::build(3, [](Label, Label, Label) { return Sign::Pos; }), 2);
}

RootedChirotope convex(int n) {
  if (n < 3) fail(Errc::TooSmall, "convex(n) needs n >= 3");
  return RootedChirotope(Chirotope::build(n, [](Label, Label, Label) { return Sign::Pos; }), 0);
}

RootedChirotope chi_k(int k) {
  if (k < 1) fail(Errc::OutOfRange, "chi_k needs k >= 1");
  const RootedChirotope chi1 = meet(triangle(), triangle()).result;
  RootedChirotope cur = chi1;
  for (int i = 1; i < k; ++i) cur = join(cur, chi1).result;
  return cur;
}

RootedChirotope koch(int level) {
  if (level < 0) fail(Errc::OutOfRange, "koch level must be >= 0");
  if (level > kKochMaterializeCap)
    fail(Errc::TooLarge, "koch(" + std::to_string(level) + ") has " + std::to_string((1 << level) + 2) +
                             " elements; use the polynomial pipeline");
  RootedChirotope cur = triangle();
  for (int i = 1; i <= level; ++i) cur = (i % 2 == 1) ? join(cur, cur).result : meet(cur, cur).result;
  return cur;
}

namespace {

Point circle_point(const Rational& t) {
  const Rational d = 1 + t * t;
  return {(1 - t * t) / d, (2 * t) / d};
}

bool valid_double_circle(const PointSet& ps, int k, const std::vector<Point>& mids) {
  const int n = 2 * k;
  for (Label i = 0; i < n; ++i)
    for (Label j = i + 1; j < n; ++j)
      for (Label l = j + 1; l < n; ++l)
        if (orient_raw(ps[i], ps[j], ps[l]) == 0) return false;

  const Chirotope chi = chirotope_from_points(ps);
  std::vector<Label> outer(static_cast<std::size_t>(k));
  for (Label i = 0; i < k; ++i) outer[static_cast<std::size_t>(i)] = i;
  if (extreme_elements(chi) != outer) return false;

  // Each inner point must sit on the same side as its edge midpoint of every
  // line through two other points (the edge's own line excepted).
  for (int j = 0; j < k; ++j) {
    const Label q = k + j;
    const Label e0 = j, e1 = (j + 1) % k;
    const Point& m = mids[static_cast<std::size_t>(j)];
    for (Label a = 0; a < n; ++a)
      for (Label b = a + 1; b < n; ++b) {
        if (a == q || b == q) continue;
        if ((a == e0 && b == e1) || (a == e1 && b == e0)) continue;
        const int ref = orient_raw(ps[a], ps[b], m);
        if (ref != 0 && orient_raw(ps[a], ps[b], ps[q]) != ref) return false;
      }
  }
  return true;
}

}  // namespace

PointSet double_circle_points(int k) {
  if (k < 3 || k > 64) fail(Errc::OutOfRange, "double circle needs 3 <= k <= 64");
  std::vector<Point> outer;
  for (int j = 0; j < k; ++j) {
    const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * (j + 0.5) / k;
    const double t = std::tan(theta / 2.0);
    // Rational parameter on a 2^-16 grid; distinct t give distinct points on
    // the circle, so the outer points are in strictly convex position.
    const Rational tq(mpz_class(static_cast<long>(std::lround(t * 65536.0))), mpz_class(65536));
    outer.push_back(circle_point(tq));
  }
  std::vector<Point> mids;
  for (int j = 0; j < k; ++j) {
    const Point& a = outer[static_cast<std::size_t>(j)];
    const Point& b = outer[static_cast<std::size_t>((j + 1) % k)];
    mids.push_back({(a.x + b.x) / 2, (a.y + b.y) / 2});
  }

  Rational eps(1, 1 << 20);
  for (int attempt = 0; attempt < 60; ++attempt, eps /= 2) {
    std::vector<Point> pts = outer;
    for (const Point& m : mids) pts.push_back({m.x * (1 - eps), m.y * (1 - eps)});
    PointSet ps(std::move(pts));
    if (valid_double_circle(ps, k, mids)) return ps;
  }
  fail(Errc::ConstructionFailed, "could not place double circle inner points for k=" + std::to_string(k));
}

RootedChirotope double_circle(int k) { return RootedChirotope(chirotope_from_points(double_circle_points(k)), 0); }

}  // namespace chiro
