#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "chiro/compose.hpp"
#include "chiro/expr.hpp"
#include "chiro/formats.hpp"
#include "chiro/order_types.hpp"
#include "chiro/polycalc.hpp"
#include "chiro/search.hpp"
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

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("chiro_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("parser") {
  const ExprPtr a = parse_expr("join(triangle, triangle)");
  CHECK(a->kind == Expr::Kind::Join);
  CHECK(a->children[0]->name == "triangle");

  const ExprPtr b = parse_expr("(koch(2) v koch(2)) ^ (koch(2) v koch(2))");
  CHECK(b->kind == Expr::Kind::Meet);
  CHECK(b->children[0]->kind == Expr::Kind::Join);
  CHECK(b->children[1]->kind == Expr::Kind::Join);
  CHECK(b->children[0]->children[1]->ints == std::vector<long>{2});

  const ExprPtr c = parse_expr("triangle v chi1 v convex(5)");
  CHECK(c->kind == Expr::Kind::Join);
  CHECK(c->children[0]->kind == Expr::Kind::Join);
  CHECK(c->children[1]->name == "convex");

  const ExprPtr d = parse_expr("twist(flip(load(\"a b.chi\", 3)))");
  CHECK(d->children[0]->children[0]->path == "a b.chi");
  CHECK(d->children[0]->children[0]->root == 3);

  CHECK(code_of([] { parse_expr("meet(triangle)"); }) == Errc::BadArity);
  CHECK(code_of([] { parse_expr("twist(triangle, triangle)"); }) == Errc::BadArity);
  CHECK(code_of([] { parse_expr("convex()"); }) == Errc::BadArity);
  CHECK(code_of([] { parse_expr("chik"); }) == Errc::BadArity);
  CHECK(code_of([] { parse_expr("hexagon"); }) == Errc::UnknownIdentifier);
  CHECK(code_of([] { parse_expr("triangle v triangle ^ triangle"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_expr("join(triangle, triangle"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_expr("triangle $"); }) == Errc::ParseError);
  CHECK(message_of([] { parse_expr("join(triangle,\n  hexagon)"); }).find("line 2, column 3") != std::string::npos);
}

TEST_CASE("print round trip") {
  for (const char* src : {"join(triangle, triangle)", "(koch(2) v koch(2)) ^ (koch(2) v koch(2))",
                          "twist(flip(chik(3)))", "load(\"x\\\"y.chi\", 2) v dc(4)", "meet(chi1, convex(6))",
                          "triangle ^ triangle ^ triangle"}) {
    const ExprPtr e = parse_expr(src);
    const std::string printed = print_expr(*e);
    CHECK(*parse_expr(printed) == *e);
    CHECK(print_expr(*parse_expr(printed)) == printed);
  }
}

TEST_CASE("materialize evaluation") {
  const RootedChirotope c1 = eval_materialize(*parse_expr("meet(triangle,triangle)"));
  CHECK(c1 == chi_k(1));
  CHECK(brute_Q(c1) == UnivarPoly::monomial(3));
  CHECK(eval_materialize(*parse_expr("koch(3)")) == koch(3));
  CHECK(count_triangulations(drop_root(eval_materialize(*parse_expr("koch(3)"))).chi) == 424);
  CHECK(eval_materialize(*parse_expr("twist(twist(chik(2)))")) == chi_k(2));
  CHECK(code_of([] { eval_materialize(*parse_expr("koch(4)")); }) == Errc::TooLarge);
  CHECK(code_of([] { eval_materialize(*parse_expr("chik(3) v chik(3)")); }) == Errc::TooLarge);
  CHECK(message_of([] { eval_materialize(*parse_expr("convex(20)")); }).find("poly") != std::string::npos);
}

TEST_CASE("polynomial evaluation agrees with materialize") {
  for (const char* src : {"triangle", "chi1", "chik(3)", "koch(3)", "meet(triangle, convex(4))", "twist(chik(2))",
                          "flip(chik(2) v triangle)", "(chi1 ^ convex(4)) v triangle", "dc(4)", "koch(2) ^ chi1"}) {
    CAPTURE(src);
    const ExprPtr e = parse_expr(src);
    const RootedChirotope rc = eval_materialize(*e);
    const BivarPoly p = eval_polynomial(*e);
    CHECK(p == brute_P(rc));
    CHECK(q_from_p(p) == brute_Q(rc));
    CHECK(eval_weak_count(*e) == count_weak(rc));
  }
}

TEST_CASE("polynomial mode reaches large Koch levels") {
  const ExprPtr k8 = parse_expr("koch(8)");
  const mpz_class weak8 = eval_weak_count(*k8);
  CHECK(weak8 > 0);
  CHECK(weak8 == count_weak_join(koch_P(7), koch_P(7), CompositionKind::Meet));
  for (int i = 1; i <= 5; ++i) {
    const ExprPtr e = parse_expr("koch(" + std::to_string(i) + ")");
    CHECK(eval_weak_count(*e) == eval_polynomial(*e).at_one());
  }
  const ExprPtr nested = parse_expr("(koch(2) v koch(2)) ^ (koch(2) v koch(2))");
  CHECK(eval_polynomial(*nested) == koch_P(4));
}

TEST_CASE("load leaves") {
  const auto path = temp_file("k2.chi");
  {
    std::ofstream out(path);
    out << write_chi(koch(2).chi(), koch(2).root());
  }
  const ExprPtr e = parse_expr("load(\"" + path.string() + "\") v triangle");
  CHECK(eval_materialize(*e) == join(koch(2), triangle()).result);
  CHECK(eval_polynomial(*e) == brute_P(join(koch(2), triangle()).result));
  CHECK(code_of([] { eval_materialize(*parse_expr("load(\"/nonexistent/file.chi\", 0)")); }) == Errc::IoError);
  std::filesystem::remove(path);
}

TEST_CASE("order type records") {
  std::vector<std::uint8_t> bytes;
  for (int r = 0; r < 3; ++r)
    for (std::uint8_t b : {0, 0, 255, 0, 0, 255, 90, 90}) bytes.push_back(static_cast<std::uint8_t>(b + (b == 90 ? r : 0)));
  const auto recs = parse_order_types(bytes, 4, 8);
  REQUIRE(recs.size() == 3);
  CHECK(recs[2].index == 2);
  CHECK(recs[2].coords[3] == std::array<std::uint32_t, 2>{92, 92});
  for (const auto& r : recs) CHECK(to_point_set(r).size() == 4);
  CHECK(write_order_types(recs, 8) == bytes);

  const std::vector<std::uint8_t> wide = {1, 0, 0, 1, 0x34, 0x12, 0, 0, 0, 0, 0xFF, 0xFF};
  const auto w = parse_order_types(wide, 3, 16);
  CHECK(w[0].coords[0] == std::array<std::uint32_t, 2>{1, 256});
  CHECK(w[0].coords[1] == std::array<std::uint32_t, 2>{0x1234, 0});
  CHECK(write_order_types(w, 16) == wide);

  bytes.pop_back();
  CHECK(code_of([&] { parse_order_types(bytes, 4, 8); }) == Errc::MalformedFile);
  CHECK(code_of([] { record_bytes(4, 12); }) == Errc::OutOfRange);

  const OrderTypeRecord collinear{7, {{0, 0}, {1, 1}, {2, 2}, {0, 5}}};
  CHECK(code_of([&] { to_point_set(collinear); }) == Errc::GeneralPositionViolation);
  CHECK(message_of([&] { to_point_set(collinear); }).find("record 7") != std::string::npos);
}

TEST_CASE("order type files") {
  const auto path = temp_file("db.bin");
  const std::vector<OrderTypeRecord> recs = {{0, {{0, 0}, {255, 0}, {0, 255}, {90, 90}}},
                                             {1, {{0, 0}, {1, 1}, {2, 2}, {0, 5}}},
                                             {2, {{10, 0}, {0, 10}, {50, 50}, {3, 4}}}};
  {
    const auto bytes = write_order_types(recs, 8);
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
  OrderTypeReader reader(path, 4, 8);
  CHECK(reader.record_count() == 3);
  std::vector<OrderTypeRecord> back;
  while (auto r = reader.next()) back.push_back(*r);
  CHECK(back == recs);

  const LoadedPointSets lenient = load_order_types(path, 4, 8, true);
  CHECK(lenient.valid.size() == 2);
  REQUIRE(lenient.rejected.size() == 1);
  CHECK(lenient.rejected[0].first == 1);
  CHECK(code_of([&] { load_order_types(path, 4, 8, false); }) == Errc::GeneralPositionViolation);
  CHECK(code_of([&] { OrderTypeReader(path, 5, 8); }) == Errc::MalformedFile);
  std::filesystem::remove(path);
}

TEST_CASE("koch variant search") {
  const std::vector<Chirotope> pool = {koch(3).chi(), convex(10).chi(), double_circle(5).chi()};
  SearchOptions opt;
  opt.levels = 6;
  const auto rows = koch_variant_search(pool, opt);
  REQUIRE(!rows.empty());
  const mpz_class koch_score = count_weak_join(koch_P(5), koch_P(5), CompositionKind::Meet);
  CHECK(rows[0].record == 0);
  CHECK(rows[0].root == koch(3).root());
  CHECK(rows[0].score == koch_score);
  CHECK(koch_variant_score(koch(3), opt) == koch_score);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].score >= rows[i].score);
  std::size_t expected_rows = 0;
  for (const auto& c : pool) expected_rows += extreme_elements(c).size();
  CHECK(rows.size() == expected_rows);

  opt.threads = 3;
  CHECK(koch_variant_search(pool, opt) == rows);

  const std::string csv = search_csv(rows, 2);
  CHECK(csv.rfind("record,root,score\n0,9,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("search count metric agrees with enumeration") {
  std::mt19937_64 rng(31);
  SearchOptions opt;
  opt.metric = SearchMetric::Count;
  for (int t = 0; t < 4; ++t) {
    const RootedChirotope seed = testsupport::random_rooted(rng, 5 + t % 2);
    opt.levels = 3;
    CHECK(koch_variant_score(seed, opt) == count_triangulations(seed.chi()));
    opt.levels = 4;
    CHECK(koch_variant_score(seed, opt) == count_triangulations(meet(seed, seed).result.chi()));
  }
  opt.metric = SearchMetric::Weak;
  opt.levels = 4;
  const RootedChirotope seed = testsupport::random_rooted(rng, 5);
  CHECK(koch_variant_score(seed, opt) == count_weak(meet(seed, seed).result));
  opt.levels = 9;
  CHECK(code_of([&] { koch_variant_score(seed, opt); }) == Errc::OutOfRange);
}
