#pragma once

#include <functional>
#include <vector>

#include "sgames/vector_game.hpp"

namespace sgames {

// Coordinates of the staircase form of a two-class matrix with r >= 2 rows:
// x drives the gaps in the first column (bottom up), y the gaps in the second
// column (top down), z1/z2 the slack between the extreme entries and the
// class sizes. For a game on n players the coordinates sum to n+2-2r.
struct XyzDecomposition {
  int r = 0;
  std::vector<int> x;
  std::vector<int> y;
  int z1 = 0;
  int z2 = 0;

  bool operator==(const XyzDecomposition&) const = default;
};

// Rebuilds the (sizes, matrix) pair from its coordinates. The output always
// has positive class sizes summing to n, rows within bounds, pairwise
// incomparable and strictly decreasing. Throws if the sum constraint fails.
VectorGame xyz_to_pair(int n, const XyzDecomposition& d);

// Inverse of xyz_to_pair for two-class pairs with r >= 2. Throws when a
// recovered coordinate is negative, which signals a malformed pair.
XyzDecomposition pair_to_xyz(const VectorGame& vg);

// True iff no class pair can be separated, stated on the coordinates alone:
// all of x[1..], y[1..] vanish, y[0] or z1 vanishes, and x[0] or z2 vanishes.
bool separation_violated_xyz(const XyzDecomposition& d);

// Every decomposition for n players (r = 2..n/2+1), coordinates enumerated
// in colexicographic order of the (x, y, z1, z2) tuple.
void for_each_xyz(int n, const std::function<void(const XyzDecomposition&)>& fn);

// Every two-class pair with positive class sizes summing to n (both
// orderings of the sizes) whose rows are within bounds, pairwise
// incomparable, strictly decreasing, and whose classes are separated.
// Deterministic order: class sizes ascending lexicographically, then matrix
// column-major flattening descending.
void for_each_pair(int n, const std::function<void(const VectorGame&)>& fn);

// Exactly one representative per isomorphism class of simple games with two
// player classes: restricts for_each_pair to sizes[0] >= sizes[1] and, on
// ties, to matrices at least as large as their class-swapped image. Every
// yielded pair passes check_conditions completely.
void for_each_bipartite_canonical(int n, const std::function<void(const VectorGame&)>& fn);

std::vector<VectorGame> enumerate_pairs(int n);
std::vector<VectorGame> enumerate_bipartite_canonical(int n);

// The tie rule for equal class sizes: first column read top down is
// lexicographically at least the second column read bottom up.
bool matrix_at_least_swapped(const VectorGame& vg);

}  // namespace sgames
