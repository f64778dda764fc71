#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chiro/error.hpp"

namespace chiro {

/// Element of a chirotope's ground set. Labels are dense in 0..n-1.
using Label = int;

enum class Sign : std::int8_t { Neg = -1, Pos = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Pos ? Sign::Neg : Sign::Pos;
}
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Pos : Sign::Neg;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

struct Segment {
  Label a;
  Label b;

  /// Endpoints ordered so that a < b.
  static Segment make(Label x, Label y) { return x < y ? Segment{x, y} : Segment{y, x}; }
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Simple sign function on triples of 0..n-1, stored once per sorted triple
/// in lexicographic order. Queries on any ordering apply the permutation
/// parity, so the alternation law holds by construction. Immutable.
class Chirotope {
 public:
  Chirotope() = default;

  /// `fn(i, j, k)` is called once per sorted triple i < j < k.
  template <class F>
  static Chirotope build(int n, F&& fn) {
    Chirotope c(n);
    std::size_t idx = 0;
    for (Label i = 0; i < n; ++i)
      for (Label j = i + 1; j < n; ++j)
        for (Label k = j + 1; k < n; ++k) c.table_[idx++] = fn(i, j, k);
    return c;
  }

  /// Table in lexicographic sorted-triple order; size must be C(n,3).
  static Chirotope from_table(int n, std::vector<Sign> table);

  int size() const noexcept { return n_; }
  std::span<const Sign> table() const noexcept { return table_; }

  /// Lexicographic rank of the sorted triple i < j < k.
  std::size_t triple_index(Label i, Label j, Label k) const noexcept {
    return first_offset_[static_cast<std::size_t>(i)] + second_offset_[static_cast<std::size_t>(j)] -
           second_offset_[static_cast<std::size_t>(i) + 1] + static_cast<std::size_t>(k - j - 1);
  }

  Sign sorted_sign(Label i, Label j, Label k) const noexcept { return table_[triple_index(i, j, k)]; }

  /// Unchecked lookup on distinct in-range labels, any order.
  Sign at(Label x, Label y, Label z) const noexcept {
    bool odd = false;
    if (x > y) { std::swap(x, y); odd = !odd; }
    if (y > z) { std::swap(y, z); odd = !odd; }
    if (x > y) { std::swap(x, y); odd = !odd; }
    const Sign s = sorted_sign(x, y, z);
    return odd ? -s : s;
  }

  /// Checked lookup; throws InvalidTriple on repeated or out-of-range labels.
  Sign sign(Label x, Label y, Label z) const;

  friend bool operator==(const Chirotope& a, const Chirotope& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  explicit Chirotope(int n);

  int n_ = 0;
  std::vector<Sign> table_;
  std::vector<std::size_t> first_offset_;
  std::vector<std::size_t> second_offset_;
};

std::size_t triple_count(int n) noexcept;

/// Violations found by the exhaustive axiom scan. Tuples are ordered as in
/// the axiom statements: (t, x, y, z) and (s, t, x, y, z).
struct AxiomReport {
  std::vector<std::array<Label, 4>> interiority;
  std::vector<std::array<Label, 5>> transitivity;

  bool ok() const noexcept { return interiority.empty() && transitivity.empty(); }
};

AxiomReport check_axioms(const Chirotope& chi);
inline bool is_chirotope(const Chirotope& chi) { return check_axioms(chi).ok(); }

bool is_extreme(const Chirotope& chi, Label x);
/// Sorted list of extreme labels.
std::vector<Label> extreme_elements(const Chirotope& chi);

struct HullNeighbors {
  Label plus;   // successor of the root in counterclockwise hull order
  Label minus;  // predecessor
  friend bool operator==(const HullNeighbors&, const HullNeighbors&) = default;
};

/// u+ is the unique y with sign(u, y, z) = +1 for every other z, u- the
/// unique y with sign(u, y, z) = -1 for every other z.
HullNeighbors hull_neighbors(const Chirotope& chi, Label root);

/// A chirotope together with an extreme element used as root.
class RootedChirotope {
 public:
  /// Throws NotARootedChirotope when `root` is out of range or not extreme.
  RootedChirotope(Chirotope chi, Label root);

  const Chirotope& chi() const noexcept { return chi_; }
  Label root() const noexcept { return root_; }
  int size() const noexcept { return chi_.size(); }

  friend bool operator==(const RootedChirotope&, const RootedChirotope&) = default;

 private:
  Chirotope chi_;
  Label root_;
};

inline HullNeighbors hull_neighbors(const RootedChirotope& rc) {
  return hull_neighbors(rc.chi(), rc.root());
}

/// True iff the segments cross; SharedEndpoint if they share a label.
bool segments_cross(const Chirotope& chi, Segment a, Segment b);

struct Restriction {
  Chirotope chi;
  std::vector<Label> label_map;  // old label -> new label, -1 if dropped
};

/// Keeps the given labels, relabeled densely in increasing order.
Restriction restrict_to(const Chirotope& chi, std::span<const Label> keep);

/// Drops the root of a rooted chirotope.
Restriction drop_root(const RootedChirotope& rc);

Chirotope flip(const Chirotope& chi);
RootedChirotope flip(const RootedChirotope& rc);

/// Relabels by `perm[old] = new`; `perm` must be a permutation of 0..n-1.
Chirotope permute(const Chirotope& chi, std::span<const Label> perm);

}  // namespace chiro
