#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "sgames/simple_game.hpp"

namespace sgames {

// Class sizes, one positive entry per class.
using CountVector = std::vector<int>;

// One row per distinct minimal winning profile, strictly decreasing.
using MinimalWinningMatrix = std::vector<ProfileVector>;

enum class Cmp { less, equal, greater, incomparable };

// Componentwise partial order on equal-length vectors.
Cmp partial_compare(const ProfileVector& x, const ProfileVector& y);

// Lexicographic order, entrywise left to right. Never returns incomparable.
Cmp lex_compare(const ProfileVector& x, const ProfileVector& y);

// Lexicographic order of the column-major flattenings; shapes must match.
Cmp lex_compare(const MinimalWinningMatrix& x, const MinimalWinningMatrix& y);

// A simple game presented by class sizes and the matrix of minimal winning
// vectors. Plain data: instances may violate the representation requirements,
// check_conditions() reports which ones hold.
struct VectorGame {
  CountVector class_sizes;
  MinimalWinningMatrix rows;

  int num_classes() const { return static_cast<int>(class_sizes.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int total_players() const {
    return std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
  }

  bool operator==(const VectorGame&) const = default;
};

struct ConditionViolation {
  std::string condition;  // bounds | incomparable-rows | row-order | separation |
                          // class-size-order | matrix-maximality
  std::string detail;
};

struct ConditionReport {
  bool structural_ok = true;  // bounds, pairwise incomparability, strict row order
  bool bounds_ok = true;      // every entry within 0..class size
  bool separation_ok = true;  // every class pair separated by a losing one-swap
  bool canonical_ok = true;   // sizes weakly decreasing, matrix maximal over relabelings
  std::vector<ConditionViolation> failures;

  bool all_ok() const { return failures.empty(); }
};

// Checks every representation requirement and collects labeled violations.
// Throws only on malformed shapes (no rows, no classes, ragged rows).
ConditionReport check_conditions(const VectorGame& vg);

// Entry k of the result takes class pi[k] of the input (pi is a 1-indexed
// permutation of the classes); rows are re-sorted into decreasing order.
VectorGame apply_class_permutation(const VectorGame& vg, const std::vector<int>& pi);

// Builds the coalition-level game on consecutive player blocks: players
// 1..sizes[0] form class 1, the next sizes[1] form class 2, and so on. A
// coalition wins iff its profile dominates some row. Requires bounds and
// structure to hold; the minimal winning antichain is materialized, so the
// player total is capped at kMaxExhaustivePlayers.
SimpleGame expand(const VectorGame& vg);

// Distinct profiles of the minimal winning coalitions under p, sorted
// strictly decreasing. p is normally the equivalence partition of g.
MinimalWinningMatrix minimal_winning_vectors(const SimpleGame& g, const Partition& p);

// The distinguished representative of the isomorphism class of g under
// player relabeling: classes ordered so the sizes weakly decrease, and among
// all class relabelings that preserve the sizes, the lexicographically
// largest matrix. The result passes check_conditions completely.
VectorGame canonical_form(const SimpleGame& g);

bool is_isomorphic(const SimpleGame& a, const SimpleGame& b);

}  // namespace sgames
