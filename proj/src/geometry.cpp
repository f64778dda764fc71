#include "chiro/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace chiro {

int orient_raw(const Point& p, const Point& q, const Point& r) {
  const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(det);
}

Sign orient(const Point& p, const Point& q, const Point& r) {
  const int s = orient_raw(p, q, r);
  if (s == 0) fail(Errc::GeneralPositionViolation, "collinear triple");
  return s > 0 ? Sign::Pos : Sign::Neg;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {}

std::vector<Label> PointSet::convex_hull() const {
  const int n = size();
  std::vector<Label> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](Label a, Label b) {
    const Point& p = (*this)[a];
    const Point& q = (*this)[b];
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  if (n < 3) return idx;
  // Andrew's monotone chain; strict turns only (general position assumed).
  std::vector<Label> hull(2 * idx.size());
  std::size_t k = 0;
  for (Label i : idx) {
    while (k >= 2 && orient_raw((*this)[hull[k - 2]], (*this)[hull[k - 1]], (*this)[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    const Label i = idx[t];
    while (k >= lower && orient_raw((*this)[hull[k - 2]], (*this)[hull[k - 1]], (*this)[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

void require_general_position(const PointSet& ps) {
  const int n = ps.size();
  for (Label i = 0; i < n; ++i)
    for (Label j = i + 1; j < n; ++j)
      for (Label k = j + 1; k < n; ++k)
        if (orient_raw(ps[i], ps[j], ps[k]) == 0)
          fail(Errc::GeneralPositionViolation, "points " + std::to_string(i) + ", " + std::to_string(j) +
                                                   ", " + std::to_string(k) + " are collinear");
}

Chirotope chirotope_from_points(const PointSet& ps) {
  if (ps.size() < 3) fail(Errc::TooSmall, "need at least 3 points");
  return Chirotope::build(ps.size(), [&](Label i, Label j, Label k) {
    const int s = orient_raw(ps[i], ps[j], ps[k]);
    if (s == 0)
      fail(Errc::GeneralPositionViolation, "points " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                               std::to_string(k) + " are collinear");
    return s > 0 ? Sign::Pos : Sign::Neg;
  });
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const auto bad = [&]() -> Rational { fail(Errc::ParseError, "not a rational number: '" + text + "'"); };
  if (s.empty()) return bad();

  const auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') return bad();
    mpz_class d(den);
    if (d == 0) return bad();
    Rational r(mpz_class(strip_plus(num)), d);
    r.canonicalize();
    return r;
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.empty() || !std::all_of(frac.begin(), frac.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return bad();
    const bool neg = !whole.empty() && whole[0] == '-';
    std::string w = (whole.empty() || whole == "-" || whole == "+") ? "0" : whole;
    if (!is_int(w)) return bad();
    w = strip_plus(w);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class mag = abs(mpz_class(w)) * scale + mpz_class(frac);
    Rational r(neg ? mpz_class(-mag) : mag, scale);
    r.canonicalize();
    return r;
  }
  if (!is_int(s)) return bad();
  return Rational(mpz_class(strip_plus(s)));
}

}  // namespace chiro
