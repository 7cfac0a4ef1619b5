#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sgames/formulas.hpp"
#include "sgames/vector_game.hpp"

namespace sgames {

// Brute-force ground truth: every labeled simple game on n players is a
// nonempty antichain of nonempty coalitions. 7,828,352 games at n = 6 is the
// supported limit.
inline constexpr int kOracleMaxPlayers = 6;

struct CheckResult {
  std::string name;
  bool pass = false;
};

struct ClassificationReport {
  int n = 0;
  BigInt labeled_total;              // number of labeled games streamed
  std::map<int, long long> by_t;     // class count -> isomorphism classes
  std::vector<CheckResult> checks;   // filled by cross_validate

  bool all_pass() const;
};

// Streams every labeled simple game exactly once, in depth-first order over
// coalitions sorted by (size, members). 1 <= n <= kOracleMaxPlayers.
void for_each_labeled_game(int n, const std::function<void(const SimpleGame&)>& fn);

std::vector<SimpleGame> enumerate_labeled_games(int n);

// Deduplicates the labeled stream by canonical form and tallies isomorphism
// classes by their number of player classes.
ClassificationReport classify_by_t(int n);

// classify_by_t plus the triangulation checks: the two-class tally against
// the closed formula and against the generator, the one-class tally against
// n, and the exact set of two-class canonical forms against the generator
// output. 2 <= n <= kOracleMaxPlayers.
ClassificationReport cross_validate(int n);

}  // namespace sgames
