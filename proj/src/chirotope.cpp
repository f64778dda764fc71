#include "chiro/chirotope.hpp"

#include <algorithm>
#include <string>

namespace chiro {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::GeneralPositionViolation: return "GeneralPositionViolation";
    case Errc::TooSmall: return "TooSmall";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::NotARootedChirotope: return "NotARootedChirotope";
    case Errc::SharedEndpoint: return "SharedEndpoint";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::NumericalInstability: return "NumericalInstability";
    case Errc::MalformedFile: return "MalformedFile";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownIdentifier: return "UnknownIdentifier";
    case Errc::BadArity: return "BadArity";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

std::size_t triple_count(int n) noexcept {
  if (n < 3) return 0;
  const auto m = static_cast<std::size_t>(n);
  return m * (m - 1) * (m - 2) / 6;
}

Chirotope::Chirotope(int n) : n_(n) {
  if (n < 3) fail(Errc::TooSmall, "a chirotope needs at least 3 elements, got " + std::to_string(n));
  const auto m = static_cast<std::size_t>(n);
  table_.assign(triple_count(n), Sign::Pos);
  first_offset_.assign(m, 0);
  second_offset_.assign(m + 1, 0);
  for (std::size_t a = 1; a < m; ++a) {
    const std::size_t rest = m - a;  // n - 1 - (a - 1)
    first_offset_[a] = first_offset_[a - 1] + (rest * (rest - 1)) / 2;
  }
  for (std::size_t b = 1; b <= m; ++b) second_offset_[b] = second_offset_[b - 1] + (m - b);
}

Chirotope Chirotope::from_table(int n, std::vector<Sign> table) {
  Chirotope c(n);
  if (table.size() != c.table_.size())
    fail(Errc::MalformedFile, "expected " + std::to_string(c.table_.size()) + " triple signs for n=" +
                                  std::to_string(n) + ", got " + std::to_string(table.size()));
  c.table_ = std::move(table);
  return c;
}

Sign Chirotope::sign(Label x, Label y, Label z) const {
  const auto in_range = [this](Label l) { return l >= 0 && l < n_; };
  if (!in_range(x) || !in_range(y) || !in_range(z) || x == y || y == z || x == z)
    fail(Errc::InvalidTriple, "invalid triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                  std::to_string(z) + ") for n=" + std::to_string(n_));
  return at(x, y, z);
}

AxiomReport check_axioms(const Chirotope& chi) {
  AxiomReport report;
  const int n = chi.size();

  // interiority: chi(t,y,z) = chi(x,t,z) = chi(x,y,t) = 1  =>  chi(x,y,z) = 1
  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y) {
      if (y == x) continue;
      for (Label z = 0; z < n; ++z) {
        if (z == x || z == y || chi.at(x, y, z) == Sign::Pos) continue;
        for (Label t = 0; t < n; ++t) {
          if (t == x || t == y || t == z) continue;
          if (chi.at(t, y, z) == Sign::Pos && chi.at(x, t, z) == Sign::Pos && chi.at(x, y, t) == Sign::Pos)
            report.interiority.push_back({t, x, y, z});
        }
      }
    }

  // transitivity: chi(t,s,x) = chi(t,s,y) = chi(t,s,z) = chi(x,y,t) = chi(y,z,t) = 1
  //               =>  chi(x,z,t) = 1
  std::vector<Label> left;
  for (Label t = 0; t < n; ++t)
    for (Label s = 0; s < n; ++s) {
      if (s == t) continue;
      left.clear();
      for (Label w = 0; w < n; ++w)
        if (w != s && w != t && chi.at(t, s, w) == Sign::Pos) left.push_back(w);
      for (Label x : left)
        for (Label y : left) {
          if (y == x || chi.at(x, y, t) != Sign::Pos) continue;
          for (Label z : left) {
            if (z == x || z == y) continue;
            if (chi.at(y, z, t) == Sign::Pos && chi.at(x, z, t) != Sign::Pos)
              report.transitivity.push_back({s, t, x, y, z});
          }
        }
    }
  return report;
}

bool is_extreme(const Chirotope& chi, Label x) {
  const int n = chi.size();
  for (Label y = 0; y < n; ++y) {
    if (y == x) continue;
    bool constant = true;
    bool first = true;
    Sign seen = Sign::Pos;
    for (Label z = 0; z < n && constant; ++z) {
      if (z == x || z == y) continue;
      const Sign s = chi.at(x, y, z);
      if (first) {
        seen = s;
        first = false;
      } else if (s != seen) {
        constant = false;
      }
    }
    if (constant) return true;
  }
  return false;
}

std::vector<Label> extreme_elements(const Chirotope& chi) {
  std::vector<Label> out;
  for (Label x = 0; x < chi.size(); ++x)
    if (is_extreme(chi, x)) out.push_back(x);
  return out;
}

namespace {

// The unique y whose triples (root, y, z) all carry `want`, or -1.
Label witness(const Chirotope& chi, Label root, Sign want) {
  Label found = -1;
  for (Label y = 0; y < chi.size(); ++y) {
    if (y == root) continue;
    bool all = true;
    for (Label z = 0; z < chi.size() && all; ++z)
      if (z != root && z != y && chi.at(root, y, z) != want) all = false;
    if (all) {
      if (found != -1) return -2;
      found = y;
    }
  }
  return found;
}

}  // namespace

HullNeighbors hull_neighbors(const Chirotope& chi, Label root) {
  if (root < 0 || root >= chi.size())
    fail(Errc::NotARootedChirotope, "root " + std::to_string(root) + " out of range");
  const Label plus = witness(chi, root, Sign::Pos);
  const Label minus = witness(chi, root, Sign::Neg);
  if (plus < 0 || minus < 0 || plus == minus)
    fail(Errc::NotARootedChirotope,
         "label " + std::to_string(root) + " has no unique hull successor/predecessor");
  return {plus, minus};
}

RootedChirotope::RootedChirotope(Chirotope chi, Label root) : chi_(std::move(chi)), root_(root) {
  if (root < 0 || root >= chi_.size())
    fail(Errc::NotARootedChirotope, "root " + std::to_string(root) + " out of range");
  if (!is_extreme(chi_, root))
    fail(Errc::NotARootedChirotope, "root " + std::to_string(root) + " is not an extreme element");
}

bool segments_cross(const Chirotope& chi, Segment a, Segment b) {
  const Label x = a.a, y = a.b, z = b.a, t = b.b;
  if (x == y || z == t) fail(Errc::InvalidTriple, "degenerate segment");
  if (x == z || x == t || y == z || y == t)
    fail(Errc::SharedEndpoint, "segments share an endpoint");
  chi.sign(x, y, z);  // range check
  chi.sign(z, t, x);
  return chi.at(x, y, z) == -chi.at(x, y, t) && chi.at(z, t, x) == -chi.at(z, t, y);
}

Restriction restrict_to(const Chirotope& chi, std::span<const Label> keep) {
  std::vector<Label> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 3) fail(Errc::TooSmall, "restriction needs at least 3 labels");
  for (Label l : sorted)
    if (l < 0 || l >= chi.size()) fail(Errc::OutOfRange, "label " + std::to_string(l) + " out of range");

  Restriction r;
  r.label_map.assign(static_cast<std::size_t>(chi.size()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) r.label_map[static_cast<std::size_t>(sorted[i])] = static_cast<Label>(i);
  r.chi = Chirotope::build(static_cast<int>(sorted.size()), [&](Label i, Label j, Label k) {
    return chi.sorted_sign(sorted[static_cast<std::size_t>(i)], sorted[static_cast<std::size_t>(j)],
                           sorted[static_cast<std::size_t>(k)]);
  });
  return r;
}

Restriction drop_root(const RootedChirotope& rc) {
  std::vector<Label> keep;
  for (Label l = 0; l < rc.size(); ++l)
    if (l != rc.root()) keep.push_back(l);
  return restrict_to(rc.chi(), keep);
}

Chirotope flip(const Chirotope& chi) {
  std::vector<Sign> table(chi.table().begin(), chi.table().end());
  for (Sign& s : table) s = -s;
  return Chirotope::from_table(chi.size(), std::move(table));
}

RootedChirotope flip(const RootedChirotope& rc) { return RootedChirotope(flip(rc.chi()), rc.root()); }

Chirotope permute(const Chirotope& chi, std::span<const Label> perm) {
  const int n = chi.size();
  if (static_cast<int>(perm.size()) != n) fail(Errc::OutOfRange, "permutation size mismatch");
  std::vector<Label> inverse(static_cast<std::size_t>(n), -1);
  for (Label old = 0; old < n; ++old) {
    const Label img = perm[static_cast<std::size_t>(old)];
    if (img < 0 || img >= n || inverse[static_cast<std::size_t>(img)] != -1)
      fail(Errc::OutOfRange, "not a permutation");
    inverse[static_cast<std::size_t>(img)] = old;
  }
  return Chirotope::build(n, [&](Label i, Label j, Label k) {
    return chi.at(inverse[static_cast<std::size_t>(i)], inverse[static_cast<std::size_t>(j)],
                  inverse[static_cast<std::size_t>(k)]);
  });
}

}  // namespace chiro
