#include "sgames/simple_game.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sgames {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

SimpleGame SimpleGame::from_minimal_winning(int n, std::vector<Coalition> sets) {
  require(n >= 1 && n <= kMaxPlayers, "player count must be in 1..64");
  require(!sets.empty(), "minimal winning family must be nonempty");
  const Coalition all = full_coalition(n);
  for (Coalition s : sets) {
    require(s != 0, "minimal winning coalition must be nonempty");
    require(subset_of(s, all), "coalition contains a player outside 1..n");
  }
  std::sort(sets.begin(), sets.end(), coalition_before);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      require(!subset_of(sets[i], sets[j]) && !subset_of(sets[j], sets[i]),
              "minimal winning coalitions must form an antichain");
    }
  }
  return SimpleGame(n, std::move(sets));
}

SimpleGame SimpleGame::from_weighted(const WeightedSpec& spec) {
  const int n = static_cast<int>(spec.weights.size());
  require(n >= 1, "weighted game needs at least one player");
  require(n <= kMaxExhaustivePlayers, "too many players for weighted expansion");
  require(spec.quota >= 1, "quota must be positive");
  long long total = 0;
  for (long long w : spec.weights) {
    require(w >= 0, "weights must be non-negative");
    total += w;
  }
  require(total >= spec.quota, "quota exceeds the total weight");

  const Coalition all = full_coalition(n);
  std::vector<Coalition> mins;
  for (Coalition s = 1; s <= all; ++s) {
    long long weight = 0;
    long long lightest = std::numeric_limits<long long>::max();
    for (Coalition rest = s; rest != 0; rest &= rest - 1) {
      long long w = spec.weights[static_cast<std::size_t>(std::countr_zero(rest))];
      weight += w;
      lightest = std::min(lightest, w);
    }
    // Minimal iff winning and dropping even the lightest member loses.
    if (weight >= spec.quota && weight - lightest < spec.quota) mins.push_back(s);
  }
  return from_minimal_winning(n, std::move(mins));
}

int SimpleGame::value(Coalition s) const {
  if (!subset_of(s, full_coalition(n_)))
    throw std::invalid_argument("coalition contains a player outside 1..n");
  for (Coalition mw : min_winning_) {
    if (subset_of(mw, s)) return 1;
  }
  return 0;
}

std::vector<Coalition> SimpleGame::maximal_losing() const {
  if (n_ > kMaxExhaustivePlayers)
    throw std::invalid_argument("too many players for an exhaustive coalition scan");
  const Coalition all = full_coalition(n_);
  std::vector<Coalition> out;
  for (Coalition s = 0; s <= all; ++s) {
    if (value(s) == 1) continue;
    bool extensions_win = true;
    for (Coalition rest = all & ~s; rest != 0; rest &= rest - 1) {
      Coalition bit = rest & (~rest + 1);
      if (value(s | bit) == 0) {
        extensions_win = false;
        break;
      }
    }
    if (extensions_win) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), coalition_before);
  return out;
}

bool SimpleGame::are_equivalent(int i, int j) const {
  require(i >= 1 && i <= n_ && j >= 1 && j <= n_, "player index out of range");
  require(i != j, "players must be distinct");
  const Coalition bi = player_bit(i);
  const Coalition bj = player_bit(j);
  const Coalition free = full_coalition(n_) & ~bi & ~bj;
  Coalition s = free;
  for (;;) {
    if (value(s | bi) != value(s | bj)) return false;
    if (s == 0) break;
    s = (s - 1) & free;
  }
  return true;
}

Partition SimpleGame::equivalence_partition() const {
  std::vector<Coalition> classes;
  std::vector<int> reps;
  for (int p = 1; p <= n_; ++p) {
    bool placed = false;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (are_equivalent(p, reps[c])) {
        classes[c] |= player_bit(p);
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.push_back(player_bit(p));
      reps.push_back(p);
    }
  }
  std::sort(classes.begin(), classes.end(), [](Coalition a, Coalition b) {
    int sa = coalition_size(a);
    int sb = coalition_size(b);
    if (sa != sb) return sa > sb;
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return Partition{std::move(classes)};
}

SimpleGame SimpleGame::relabel(const std::vector<int>& sigma) const {
  require(static_cast<int>(sigma.size()) == n_, "relabeling must cover all players");
  Coalition seen = 0;
  for (int image : sigma) {
    require(image >= 1 && image <= n_, "relabeling image out of range");
    seen |= player_bit(image);
  }
  require(seen == full_coalition(n_), "relabeling must be a bijection");

  std::vector<Coalition> mapped;
  mapped.reserve(min_winning_.size());
  for (Coalition mw : min_winning_) {
    Coalition image = 0;
    for (Coalition rest = mw; rest != 0; rest &= rest - 1) {
      image |= player_bit(sigma[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    mapped.push_back(image);
  }
  return from_minimal_winning(n_, std::move(mapped));
}

ProfileVector profile(Coalition s, const Partition& p) {
  Coalition covered = 0;
  for (Coalition c : p.classes) covered |= c;
  if (!subset_of(s, covered))
    throw std::invalid_argument("coalition outside the partitioned player set");
  ProfileVector out(p.classes.size());
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    out[k] = coalition_size(s & p.classes[k]);
  }
  return out;
}

}  // namespace sgames
