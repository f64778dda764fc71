#include <doctest.h>

#include <random>

#include "chiro/chirotope.hpp"
#include "chiro/compose.hpp"
#include "chiro/enumerate.hpp"
#include "chiro/formats.hpp"
#include "chiro/geometry.hpp"
#include "support.hpp"

using namespace chiro;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

PointSet chi1_points() { return PointSet({P(0, 0), P(4, 0), P(2, 3), P(2, 1)}); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::IoError;
}

}  // namespace

TEST_CASE("orient") {
  CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == Sign::Pos);
  CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) == Sign::Neg);
  CHECK(code_of([] { orient(P(0, 0), P(1, 0), P(2, 0)); }) == Errc::GeneralPositionViolation);
  CHECK(orient({Rational(1, 3), Rational(0)}, {Rational(2, 3), Rational(1, 7)}, {Rational(0), Rational(1, 2)}) ==
        Sign::Pos);
}

TEST_CASE("chirotope from points") {
  const Chirotope tri = chirotope_from_points(PointSet({P(0, 0), P(4, 0), P(0, 4)}));
  CHECK(tri.table().size() == 1);
  CHECK(tri.table()[0] == Sign::Pos);

  const Chirotope sq = chirotope_from_points(PointSet({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}));
  for (Sign s : sq.table()) CHECK(s == Sign::Pos);
  CHECK(sq.sign(0, 1, 2) == Sign::Pos);
  CHECK(sq.sign(0, 2, 3) == Sign::Pos);

  const Chirotope c1 = chirotope_from_points(chi1_points());
  CHECK(check_axioms(c1).ok());
  CHECK_FALSE(is_extreme(c1, 3));
  CHECK(extreme_elements(c1) == std::vector<Label>{0, 1, 2});

  CHECK(code_of([] { chirotope_from_points(PointSet({P(0, 0), P(1, 1)})); }) == Errc::TooSmall);
  CHECK(code_of([] { chirotope_from_points(PointSet({P(0, 0), P(1, 1), P(2, 2), P(0, 5)})); }) ==
        Errc::GeneralPositionViolation);
}

TEST_CASE("sign lookup and parity") {
  const Chirotope tri = convex(3).chi();
  CHECK(tri.sign(0, 1, 2) == Sign::Pos);
  CHECK(tri.sign(0, 2, 1) == Sign::Neg);
  CHECK(tri.sign(2, 0, 1) == Sign::Pos);
  CHECK(code_of([&] { tri.sign(0, 0, 1); }) == Errc::InvalidTriple);
  CHECK(code_of([&] { tri.sign(0, 1, 3); }) == Errc::InvalidTriple);
  CHECK(code_of([&] { tri.sign(-1, 1, 2); }) == Errc::InvalidTriple);

  std::mt19937_64 rng(11);
  const Chirotope c = chirotope_from_points(testsupport::random_point_set(rng, 9));
  std::uniform_int_distribution<Label> lab(0, 8);
  for (int t = 0; t < 100; ++t) {
    Label x = lab(rng), y = lab(rng), z = lab(rng);
    if (x == y || y == z || x == z) {
      --t;
      continue;
    }
    CHECK(c.sign(x, y, z) == -c.sign(y, x, z));
    CHECK(c.sign(x, y, z) == -c.sign(x, z, y));
    CHECK(c.sign(x, y, z) == c.sign(y, z, x));
  }
}

TEST_CASE("axiom scan") {
  CHECK(check_axioms(convex(6).chi()).ok());

  // Negating a triple of consecutive hull vertices is again realizable; any
  // other single negation breaks the axioms.
  const Chirotope c5 = convex(5).chi();
  const std::vector<std::array<Label, 3>> consecutive = {{0, 1, 2}, {0, 1, 4}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4}};
  for (Label i = 0; i < 5; ++i)
    for (Label j = i + 1; j < 5; ++j)
      for (Label k = j + 1; k < 5; ++k) {
        std::vector<Sign> t(c5.table().begin(), c5.table().end());
        t[c5.triple_index(i, j, k)] = Sign::Neg;
        const AxiomReport r = check_axioms(Chirotope::from_table(5, t));
        const bool consec = std::find(consecutive.begin(), consecutive.end(), std::array<Label, 3>{i, j, k}) !=
                            consecutive.end();
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(k);
        CHECK(r.ok() == consec);
        if (!consec) CHECK(r.interiority.size() + r.transitivity.size() == 3);
      }

  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const int n = 4 + t % 6;
    CHECK(check_axioms(chirotope_from_points(testsupport::random_point_set(rng, n))).ok());
  }
}

TEST_CASE("extreme elements match the geometric hull") {
  CHECK(extreme_elements(convex(5).chi()) == std::vector<Label>{0, 1, 2, 3, 4});
  CHECK(extreme_elements(chirotope_from_points(double_circle_points(4))) == std::vector<Label>{0, 1, 2, 3});

  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const PointSet ps = testsupport::random_point_set(rng, 4 + t % 6, 60);
    const Chirotope c = chirotope_from_points(ps);
    auto hull = ps.convex_hull();
    const std::size_t h = hull.size();
    std::vector<Label> sorted = hull;
    std::sort(sorted.begin(), sorted.end());
    CHECK(extreme_elements(c) == sorted);
    for (std::size_t i = 0; i < h; ++i) {
      const HullNeighbors nb = hull_neighbors(c, hull[i]);
      CHECK(nb.plus == hull[(i + 1) % h]);
      CHECK(nb.minus == hull[(i + h - 1) % h]);
    }
  }
}

TEST_CASE("hull neighbours") {
  CHECK(hull_neighbors(convex(5)) == HullNeighbors{1, 4});
  CHECK(hull_neighbors(triangle()) == HullNeighbors{0, 1});

  // Apex of the chi_1 fixture: the interior point is neither neighbour.
  const RootedChirotope c1(chirotope_from_points(chi1_points()), 2);
  CHECK(hull_neighbors(c1) == HullNeighbors{0, 1});
  CHECK(code_of([&] { RootedChirotope(c1.chi(), 3); }) == Errc::NotARootedChirotope);
  CHECK(code_of([&] { hull_neighbors(c1.chi(), 3); }) == Errc::NotARootedChirotope);
}

TEST_CASE("segment crossing") {
  const Chirotope c4 = convex(4).chi();
  CHECK(segments_cross(c4, {0, 2}, {1, 3}));
  CHECK_FALSE(segments_cross(c4, {0, 1}, {2, 3}));
  CHECK(code_of([&] { segments_cross(c4, {0, 1}, {1, 2}); }) == Errc::SharedEndpoint);

  std::mt19937_64 rng(3);
  const Chirotope c = chirotope_from_points(testsupport::random_point_set(rng, 8));
  for (Label a = 0; a < 8; ++a)
    for (Label b = a + 1; b < 8; ++b)
      for (Label x = 0; x < 8; ++x)
        for (Label y = x + 1; y < 8; ++y) {
          if (x == a || x == b || y == a || y == b) continue;
          const bool k = segments_cross(c, {a, b}, {x, y});
          CHECK(k == segments_cross(c, {x, y}, {a, b}));
          CHECK(k == segments_cross(c, {b, a}, {y, x}));
        }
}

TEST_CASE("restriction") {
  const Restriction r = restrict_to(convex(6).chi(), std::vector<Label>{0, 1, 2});
  CHECK(r.chi == convex(3).chi());
  CHECK(r.label_map == std::vector<Label>{0, 1, 2, -1, -1, -1});

  const Chirotope c = convex(6).chi();
  CHECK(restrict_to(c, std::vector<Label>{0, 1, 2, 3, 4, 5}).chi == c);
  CHECK(code_of([&] { restrict_to(c, std::vector<Label>{0, 1}); }) == Errc::TooSmall);

  const Restriction k3 = drop_root(koch(3));
  CHECK(k3.chi.size() == 9);
  CHECK(count_triangulations(k3.chi) == 424);
}

TEST_CASE("flip") {
  const Chirotope c1 = chi_k(1).chi();
  CHECK(flip(flip(c1)) == c1);
  CHECK(flip(convex(3).chi()).sign(0, 1, 2) == Sign::Neg);
  CHECK(count_triangulations(flip(c1)) == count_triangulations(c1));

  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const Chirotope c = chirotope_from_points(testsupport::random_point_set(rng, 7));
    std::vector<EdgeSet> a, b;
    enumerate_triangulations(c, [&](const EdgeSet& e) { a.push_back(e); });
    enumerate_triangulations(flip(c), [&](const EdgeSet& e) { b.push_back(e); });
    CHECK(a == b);
  }
}

TEST_CASE("relabeling invariance") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 15; ++t) {
    const PointSet ps = testsupport::random_point_set(rng, 7);
    std::vector<Label> perm{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> moved(7);
    for (Label i = 0; i < 7; ++i) moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = ps[i];
    const Chirotope a = chirotope_from_points(ps);
    const Chirotope b = chirotope_from_points(PointSet(moved));
    CHECK(permute(a, perm) == b);
    CHECK(check_axioms(b).ok());
    CHECK(count_triangulations(a) == count_triangulations(b));
    std::vector<Label> ea;
    for (Label l : extreme_elements(a)) ea.push_back(perm[static_cast<std::size_t>(l)]);
    std::sort(ea.begin(), ea.end());
    CHECK(ea == extreme_elements(b));
  }
}

TEST_CASE("chi file format") {
  const RootedChirotope k = koch(2);
  const std::string text = write_chi(k.chi(), k.root());
  const ChiFile back = parse_chi(text);
  CHECK(back.chi == k.chi());
  CHECK(back.root == k.root());

  const ChiFile m = parse_chi("# comment\nchirotope v1\nn 4\ntriples\n+ + \xE2\x88\x92 +  # trailing\n");
  CHECK(m.chi.sign(0, 2, 3) == Sign::Neg);
  CHECK_FALSE(m.root.has_value());

  CHECK(code_of([] { parse_chi("chirotope v2\nn 3\ntriples\n+\n"); }) == Errc::MalformedFile);
  CHECK(code_of([] { parse_chi("chirotope v1\nn 4\ntriples\n+++\n"); }) == Errc::MalformedFile);
  CHECK(code_of([] { parse_chi("chirotope v1\nn 3\ntriples\n+x\n"); }) == Errc::MalformedFile);
  CHECK(code_of([] { parse_chi("chirotope v1\nn 3\nroot 5\ntriples\n+\n"); }) == Errc::MalformedFile);
}

TEST_CASE("pts format") {
  const PointSet ps = parse_pts("# square\n0 0\n1 0\n\n1/2 3/2\n0 1\n");
  CHECK(ps.size() == 4);
  CHECK(ps[2].x == Rational(1, 2));
  CHECK(ps[2].y == Rational(3, 2));
  CHECK(parse_pts(write_pts(ps)).points().size() == 4);
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(code_of([] { parse_pts("0 0 0\n"); }) == Errc::MalformedFile);
  CHECK(code_of([] { parse_pts("0 a\n"); }) == Errc::MalformedFile);
}
