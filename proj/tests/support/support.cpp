#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace testsupport {

using namespace chiro;

PointSet random_point_set(std::mt19937_64& rng, int n, int range) {
  std::uniform_int_distribution<int> coord(0, range - 1);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point p{Rational(coord(rng)), Rational(coord(rng))};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == p) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
        if (orient_raw(pts[i], pts[j], p) == 0) ok = false;
    }
    if (ok) pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

RootedChirotope random_rooted(std::mt19937_64& rng, int n) {
  const PointSet ps = random_point_set(rng, n);
  const auto hull = ps.convex_hull();
  std::uniform_int_distribution<std::size_t> pick(0, hull.size() - 1);
  return RootedChirotope(chirotope_from_points(ps), hull[pick(rng)]);
}

bool rooted_isomorphic(const RootedChirotope& a, const RootedChirotope& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<Label> others_a, others_b;
  for (Label l = 0; l < n; ++l) {
    if (l != a.root()) others_a.push_back(l);
    if (l != b.root()) others_b.push_back(l);
  }
  std::vector<Label> perm(static_cast<std::size_t>(n));
  do {
    perm[static_cast<std::size_t>(a.root())] = b.root();
    for (std::size_t i = 0; i < others_a.size(); ++i) perm[static_cast<std::size_t>(others_a[i])] = others_b[i];
    if (permute(a.chi(), perm) == b.chi()) return true;
  } while (std::next_permutation(others_b.begin(), others_b.end()));
  return false;
}

namespace {

bool cross(const Chirotope& c, Segment s, Segment t) {
  if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) return false;
  return segments_cross(c, s, t);
}

void recurse(const Chirotope& c, const std::vector<Segment>& segs, std::size_t i, std::vector<Segment>& chosen,
             long& count) {
  if (i == segs.size()) {
    for (const Segment& s : segs) {
      if (std::find(chosen.begin(), chosen.end(), s) != chosen.end()) continue;
      if (std::none_of(chosen.begin(), chosen.end(), [&](Segment t) { return cross(c, s, t); })) return;
    }
    ++count;
    return;
  }
  if (std::none_of(chosen.begin(), chosen.end(), [&](Segment t) { return cross(c, segs[i], t); })) {
    chosen.push_back(segs[i]);
    recurse(c, segs, i + 1, chosen, count);
    chosen.pop_back();
  }
  recurse(c, segs, i + 1, chosen, count);
}

}  // namespace

long naive_triangulation_count(const Chirotope& chi) {
  std::vector<Segment> segs;
  for (Label a = 0; a < chi.size(); ++a)
    for (Label b = a + 1; b < chi.size(); ++b) segs.push_back({a, b});
  std::vector<Segment> chosen;
  long count = 0;
  recurse(chi, segs, 0, chosen, count);
  return count;
}

}  // namespace testsupport
