#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sgames {

// A coalition is a bitmask over the player set: bit k (0-based) stands for
// player k+1. Every external interface reports players 1-indexed.
using Coalition = std::uint64_t;

inline constexpr int kMaxPlayers = 64;

// Operations that scan or materialize the full power set refuse larger games.
inline constexpr int kMaxExhaustivePlayers = 26;

constexpr Coalition full_coalition(int n) {
  return n >= kMaxPlayers ? ~Coalition{0} : (Coalition{1} << n) - 1;
}

constexpr Coalition player_bit(int player) {  // player is 1-indexed
  return Coalition{1} << (player - 1);
}

constexpr bool subset_of(Coalition a, Coalition b) { return (a & ~b) == 0; }

inline int coalition_size(Coalition s) { return std::popcount(s); }

// Ascending list of 1-indexed members.
inline std::vector<int> coalition_members(Coalition s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(coalition_size(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline Coalition coalition_from_members(const std::vector<int>& members, int n) {
  Coalition s = 0;
  for (int p : members) {
    if (p < 1 || p > n) throw std::invalid_argument("player index out of range 1..n");
    Coalition bit = player_bit(p);
    if ((s & bit) != 0) throw std::invalid_argument("duplicate player in coalition");
    s |= bit;
  }
  return s;
}

// Storage and serialization order for coalition families: by size, then by
// the member lists compared lexicographically.
inline bool coalition_before(Coalition a, Coalition b) {
  int sa = coalition_size(a);
  int sb = coalition_size(b);
  if (sa != sb) return sa < sb;
  while (a != 0 && b != 0) {
    int pa = std::countr_zero(a);
    int pb = std::countr_zero(b);
    if (pa != pb) return pa < pb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace sgames
