#pragma once

#include <random>
#include <vector>

#include "chiro/chirotope.hpp"
#include "chiro/geometry.hpp"

namespace testsupport {

/// n random integer points in [0, range)^2, no three collinear.
chiro::PointSet random_point_set(std::mt19937_64& rng, int n, int range = 1000);

/// Rooted chirotope of a random point set, root a random hull vertex.
chiro::RootedChirotope random_rooted(std::mt19937_64& rng, int n);

/// True if some relabeling mapping a's root to b's root carries a onto b.
/// Brute force over permutations of the other labels.
bool rooted_isomorphic(const chiro::RootedChirotope& a, const chiro::RootedChirotope& b);

/// Reference count straight from the definition: every maximal
/// pairwise non-crossing set, by recursion over segments without pruning.
long naive_triangulation_count(const chiro::Chirotope& chi);

}  // namespace testsupport
