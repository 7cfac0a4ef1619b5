#pragma once

#include <vector>

#include "sgames/coalition.hpp"

namespace sgames {

// Per-class membership counts of a coalition, one entry per class.
using ProfileVector = std::vector<int>;

// Pairwise disjoint, nonempty classes covering the player set. When produced
// by SimpleGame::equivalence_partition the classes are ordered by size
// descending, ties by smallest member.
struct Partition {
  std::vector<Coalition> classes;

  int size() const { return static_cast<int>(classes.size()); }
  bool operator==(const Partition&) const = default;
};

struct WeightedSpec {
  std::vector<long long> weights;  // one non-negative weight per player
  long long quota = 0;             // positive; a coalition wins iff its weight reaches it
};

// A monotone yes/no voting rule on n players, stored as the antichain of its
// minimal winning coalitions. The antichain is kept sorted by
// coalition_before, which is also the serialization order.
class SimpleGame {
 public:
  // Validates and normalizes the family: rejects an empty family, empty
  // members, players outside 1..n, and comparable pairs. Duplicates collapse.
  static SimpleGame from_minimal_winning(int n, std::vector<Coalition> sets);

  // Threshold rule: a coalition wins iff its total weight reaches the quota.
  // The derived minimal winning antichain is materialized by an exhaustive
  // scan, so the player count is capped at kMaxExhaustivePlayers.
  static SimpleGame from_weighted(const WeightedSpec& spec);

  int player_count() const { return n_; }
  const std::vector<Coalition>& min_winning() const { return min_winning_; }

  // 1 iff some stored minimal winning coalition is contained in s.
  int value(Coalition s) const;

  // Losing coalitions all of whose one-player extensions win. Exhaustive over
  // the whole power set; capped at kMaxExhaustivePlayers.
  std::vector<Coalition> maximal_losing() const;

  // Direct definition: v(S+i) == v(S+j) for every S avoiding both players.
  // Costs 2^(n-2) value evaluations. Players are 1-indexed.
  bool are_equivalent(int i, int j) const;

  // Equivalence classes of players, size descending, ties by smallest member.
  Partition equivalence_partition() const;

  // sigma maps player p to sigma[p-1] (a permutation of 1..n).
  SimpleGame relabel(const std::vector<int>& sigma) const;

  bool operator==(const SimpleGame&) const = default;

 private:
  SimpleGame(int n, std::vector<Coalition> sorted_antichain)
      : n_(n), min_winning_(std::move(sorted_antichain)) {}

  int n_ = 0;
  std::vector<Coalition> min_winning_;
};

// Entry k counts the members of s inside class k. s must lie within the
// partitioned player set.
ProfileVector profile(Coalition s, const Partition& p);

}  // namespace sgames
