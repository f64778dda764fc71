#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "chiro/chirotope.hpp"
#include "chiro/poly.hpp"

namespace chiro {

using EdgeSet = std::vector<Segment>;
using EdgeVisitor = std::function<void(const EdgeSet&)>;

inline constexpr int kDefaultOracleCap = 12;
// Bitmask width bounds the ground set: C(23, 2) = 253 segments.
inline constexpr int kOracleHardLimit = 22;

struct EnumOptions {
  int oracle_cap = kDefaultOracleCap;
};

/// Every triangulation (maximal non-crossing segment family) exactly once, in
/// a fixed order. Segments are sorted within each set.
void enumerate_triangulations(const Chirotope& chi, const EdgeVisitor& visit, EnumOptions opt = {});

/// Weak triangulations of (chi, root). The phantom opposite element gets
/// label n; the segment (root, n) never appears.
void enumerate_weak(const RootedChirotope& rc, const EdgeVisitor& visit, EnumOptions opt = {});

mpz_class count_triangulations(const Chirotope& chi, EnumOptions opt = {});
mpz_class count_weak(const RootedChirotope& rc, EnumOptions opt = {});

/// Sum of u^deg(root) over triangulations.
UnivarPoly brute_Q(const RootedChirotope& rc, EnumOptions opt = {});

/// Sum of u^deg(root) v^deg(phantom) over weak triangulations.
BivarPoly brute_P(const RootedChirotope& rc, EnumOptions opt = {});

}  // namespace chiro
