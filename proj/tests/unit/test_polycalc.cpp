#include <doctest.h>

#include <random>

#include "chiro/compose.hpp"
#include "chiro/enumerate.hpp"
#include "chiro/polycalc.hpp"
#include "support.hpp"

using namespace chiro;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::IoError;
}

UnivarPoly U(std::initializer_list<std::pair<unsigned, long>> terms) {
  UnivarPoly p;
  for (auto [e, c] : terms) p.add(e, c);
  return p;
}

BivarPoly B(std::initializer_list<std::tuple<unsigned, unsigned, long>> terms) {
  BivarPoly p;
  for (auto [a, b, c] : terms) p.add(a, b, c);
  return p;
}

}  // namespace

TEST_CASE("N polynomials") {
  CHECK(n_poly(2, 2) == U({{3, 1}, {2, 1}}));
  CHECK(n_poly(3, 3) == U({{5, 1}, {4, 1}, {3, 2}, {2, 2}}));
  for (unsigned d = 2; d <= 8; ++d) {
    UnivarPoly alt = UnivarPoly::monomial(d + 2);
    for (unsigned i = 1; i < d; ++i) {
      alt.add(i + 1, d - i);
      alt.add(i + 2, 1);
    }
    CHECK(n_poly(d, 3) == alt);
  }
  for (unsigned a = 2; a <= 10; ++a)
    for (unsigned b = 2; b <= 10; ++b) CHECK(n_poly(a, b) == n_poly(b, a));
  for (unsigned a = 2; a <= 8; ++a)
    for (unsigned b = 2; b <= 8; ++b) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), a + b - 2, a - 1);
      CHECK(n_poly(a, b).at_one() == c);
      CHECK(n_at_one(a, b) == c);
    }
  CHECK(code_of([] { n_poly(1, 3); }) == Errc::OutOfRange);
}

TEST_CASE("join_P and meet_P") {
  const BivarPoly tri = B({{2, 2, 1}});
  CHECK(join_P(tri, tri) == B({{3, 3, 1}, {2, 3, 1}}));
  const BivarPoly chi1 = B({{3, 2, 1}, {3, 3, 1}});
  const BivarPoly expect =
      BivarPoly::product(U({{5, 1}, {4, 1}, {3, 2}, {2, 2}}), U({{3, 1}, {4, 2}, {5, 1}}));
  CHECK(join_P(chi1, chi1) == expect);
  CHECK(join_P(chi1, chi1) == brute_P(chi_k(2)));
  CHECK(meet_P(tri, tri) == B({{3, 3, 1}, {3, 2, 1}}));
  CHECK(q_from_p(meet_P(tri, tri)) == UnivarPoly::monomial(3));
  CHECK(join_P(tri, chi1).at_one() == count_weak(join(triangle(), chi_k(1)).result));
  CHECK(meet_P(tri, brute_P(convex(4))) == brute_P(meet(triangle(), convex(4)).result));

  CHECK(code_of([] { join_P(B({{2, 0, 1}}), B({{2, 0, 1}})); }) == Errc::InternalInvariantViolation);
  CHECK(code_of([] { join_P(B({{1, 2, 1}}), B({{2, 2, 1}})); }) == Errc::OutOfRange);
}

TEST_CASE("swap_vars") {
  CHECK(swap_vars(B({{3, 2, 1}})) == B({{2, 3, 1}}));
  const BivarPoly p = brute_P(chi_k(2));
  CHECK(swap_vars(swap_vars(p)) == p);
  CHECK(swap_vars(brute_P(chi_k(1))) == brute_P(twist(chi_k(1))));
}

TEST_CASE("q_from_p and join_Q") {
  CHECK(q_from_p(B({{3, 2, 1}, {3, 3, 1}})) == UnivarPoly::monomial(3));
  CHECK(q_from_p(B({{2, 2, 1}})) == UnivarPoly::monomial(2));
  CHECK(code_of([] { q_from_p(BivarPoly{}); }) == Errc::EmptyInput);

  CHECK(join_Q(UnivarPoly::monomial(2), UnivarPoly::monomial(2)) == n_poly(2, 2));
  CHECK(join_Q(UnivarPoly::monomial(3), UnivarPoly::monomial(3)) == n_poly(3, 3));
  CHECK(code_of([] { join_Q(UnivarPoly::monomial(1), UnivarPoly::monomial(2)); }) == Errc::OutOfRange);
}

TEST_CASE("recursion matches the oracle on random operands") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 20; ++t) {
    const RootedChirotope a = testsupport::random_rooted(rng, 4 + t % 3);
    const RootedChirotope b = testsupport::random_rooted(rng, 4 + (t / 3) % 3);
    const BivarPoly pa = brute_P(a), pb = brute_P(b);
    const BivarPoly pj = join_P(pa, pb);
    CHECK(pj == brute_P(join(a, b).result));
    CHECK(meet_P(pa, pb) == brute_P(meet(a, b).result));
    CHECK(q_from_p(pj) == join_Q(q_from_p(pa), q_from_p(pb)));
    CHECK(join_Q(brute_Q(a), brute_Q(b)) == brute_Q(join(a, b).result));
    CHECK(count_weak_join(pa, pb, CompositionKind::Join) == pj.at_one());
    CHECK(count_weak_join(pa, pb, CompositionKind::Meet) == meet_P(pa, pb).at_one());
    for (const auto& [k, c] : pj.terms()) CHECK(c > 0);
  }
}

TEST_CASE("count_weak_join") {
  const BivarPoly tri = B({{2, 2, 1}});
  CHECK(count_weak_join(tri, tri, CompositionKind::Join) == 2);
  BivarPoly p = tri;
  for (int level = 1; level <= 4; ++level) {
    const CompositionKind kind = level % 2 ? CompositionKind::Join : CompositionKind::Meet;
    const BivarPoly next = kind == CompositionKind::Join ? join_P(p, p) : meet_P(p, p);
    CHECK(count_weak_join(p, p, kind) == next.at_one());
    p = next;
  }
  CHECK(koch_P(4) == p);
}

TEST_CASE("rank-one split") {
  const auto s = try_split(B({{3, 2, 1}, {3, 3, 1}}));
  REQUIRE(s.has_value());
  CHECK(s->first == UnivarPoly::monomial(3));
  CHECK(s->second == U({{2, 1}, {3, 1}}));
  CHECK_FALSE(try_split(B({{2, 2, 1}, {3, 3, 1}})).has_value());
  for (int level = 0; level <= 4; ++level) {
    const BivarPoly p = koch_P(level);
    const auto f = try_split(p);
    REQUIRE(f.has_value());
    CHECK(BivarPoly::product(f->first, f->second) == p);
  }
  CHECK(koch_P(3) == brute_P(koch(3)));
}

TEST_CASE("polynomial JSON") {
  const BivarPoly p = brute_P(chi_k(2));
  CHECK(bivar_from_json(to_json(p)) == p);
  CHECK(to_json(B({{3, 2, 1}, {2, 3, 5}})) == R"({"terms":[[2,3,"5"],[3,2,"1"]]})");
  CHECK(to_json(U({{5, 1}, {2, 2}})) == R"({"terms":[[2,"2"],[5,"1"]]})");
  const UnivarPoly q = q_from_p(p);
  CHECK(univar_from_json(to_json(q)) == q);
  CHECK(code_of([] { univar_from_json("{\"terms\":[[1,2]]}"); }) == Errc::ParseError);
  CHECK(code_of([] { bivar_from_json("nope"); }) == Errc::ParseError);
}
