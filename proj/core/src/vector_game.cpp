#include "sgames/vector_game.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace sgames {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_shape(const VectorGame& vg) {
  require(vg.num_classes() >= 1, "vector game needs at least one class");
  require(vg.num_rows() >= 1, "vector game needs at least one row");
  for (const ProfileVector& row : vg.rows) {
    require(static_cast<int>(row.size()) == vg.num_classes(),
            "row width must equal the number of classes");
  }
}

bool within_bounds(const ProfileVector& v, const CountVector& sizes) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0 || v[k] > sizes[k]) return false;
  }
  return true;
}

// True iff some row lies componentwise below m, i.e. m is a winning vector.
bool dominates_some_row(const ProfileVector& m, const MinimalWinningMatrix& rows) {
  for (const ProfileVector& row : rows) {
    Cmp c = partial_compare(row, m);
    if (c == Cmp::less || c == Cmp::equal) return true;
  }
  return false;
}

// All permutations pi (1-indexed images) with sizes[pi[k]-1] == sizes[k]:
// the members of every group of equal-size classes may be rearranged freely.
void for_each_stabilizer_perm(const CountVector& sizes,
                              const std::function<void(const std::vector<int>&)>& fn) {
  const int t = static_cast<int>(sizes.size());
  std::vector<std::vector<int>> groups;  // positions (0-indexed) sharing a size
  for (int k = 0; k < t; ++k) {
    bool found = false;
    for (auto& g : groups) {
      if (sizes[g.front()] == sizes[k]) {
        g.push_back(k);
        found = true;
        break;
      }
    }
    if (!found) groups.push_back({k});
  }

  std::vector<std::vector<int>> arrangement = groups;
  std::vector<int> pi(t);
  for (;;) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t m = 0; m < groups[g].size(); ++m) {
        pi[groups[g][m]] = arrangement[g][m] + 1;
      }
    }
    fn(pi);
    std::size_t g = 0;
    while (g < arrangement.size() &&
           !std::next_permutation(arrangement[g].begin(), arrangement[g].end())) {
      ++g;  // this group wrapped around, advance the next one
    }
    if (g == arrangement.size()) break;
  }
}

bool is_identity(const std::vector<int>& pi) {
  for (std::size_t k = 0; k < pi.size(); ++k) {
    if (pi[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

// All coalitions choosing exactly `take` players from the 0-indexed
// positions [start, end).
void block_combinations(int start, int end, int take,
                        Coalition prefix, std::vector<Coalition>& out) {
  if (take == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = start; first + take <= end; ++first) {
    block_combinations(first + 1, end, take - 1,
                       prefix | (Coalition{1} << first), out);
  }
}

}  // namespace

Cmp partial_compare(const ProfileVector& x, const ProfileVector& y) {
  require(x.size() == y.size(), "vectors must have equal length");
  bool le = true;
  bool ge = true;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] > y[k]) le = false;
    if (x[k] < y[k]) ge = false;
  }
  if (le && ge) return Cmp::equal;
  if (le) return Cmp::less;
  if (ge) return Cmp::greater;
  return Cmp::incomparable;
}

Cmp lex_compare(const ProfileVector& x, const ProfileVector& y) {
  require(x.size() == y.size(), "vectors must have equal length");
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < y[k]) return Cmp::less;
    if (x[k] > y[k]) return Cmp::greater;
  }
  return Cmp::equal;
}

Cmp lex_compare(const MinimalWinningMatrix& x, const MinimalWinningMatrix& y) {
  require(x.size() == y.size(), "matrices must have equal row counts");
  const std::size_t r = x.size();
  require(r > 0, "matrices must be nonempty");
  const std::size_t t = x.front().size();
  for (const auto& m : {&x, &y}) {
    for (const ProfileVector& row : *m) {
      require(row.size() == t, "matrices must have equal row widths");
    }
  }
  // Column-major traversal.
  for (std::size_t col = 0; col < t; ++col) {
    for (std::size_t row = 0; row < r; ++row) {
      if (x[row][col] < y[row][col]) return Cmp::less;
      if (x[row][col] > y[row][col]) return Cmp::greater;
    }
  }
  return Cmp::equal;
}

ConditionReport check_conditions(const VectorGame& vg) {
  require_shape(vg);
  const int t = vg.num_classes();
  const int r = vg.num_rows();

  ConditionReport rep;
  auto fail = [&rep](bool& flag, std::string condition, std::string detail) {
    flag = false;
    rep.failures.push_back({std::move(condition), std::move(detail)});
  };

  for (int k = 0; k < t; ++k) {
    if (vg.class_sizes[k] <= 0) {
      fail(rep.canonical_ok, "class-size-order",
           "class " + std::to_string(k + 1) + " has non-positive size");
    }
  }
  for (int k = 0; k + 1 < t; ++k) {
    if (vg.class_sizes[k] < vg.class_sizes[k + 1]) {
      fail(rep.canonical_ok, "class-size-order",
           "class sizes increase from position " + std::to_string(k + 1) +
               " to " + std::to_string(k + 2));
    }
  }

  for (int i = 0; i < r; ++i) {
    if (!within_bounds(vg.rows[i], vg.class_sizes)) {
      rep.structural_ok = false;
      fail(rep.bounds_ok, "bounds",
           "row " + std::to_string(i + 1) + " leaves 0..class-size bounds");
    }
  }

  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (partial_compare(vg.rows[i], vg.rows[j]) != Cmp::incomparable) {
        fail(rep.structural_ok, "incomparable-rows",
             "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                 " are comparable");
      }
    }
  }
  for (int i = 0; i + 1 < r; ++i) {
    if (lex_compare(vg.rows[i], vg.rows[i + 1]) != Cmp::greater) {
      fail(rep.structural_ok, "row-order",
           "rows " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
               " are not strictly decreasing");
    }
  }

  // Separation: classes i and j stay distinct iff some row admits a one-swap
  // perturbation between the two coordinates that stays in bounds and is
  // losing (dominates no row).
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      bool separated = false;
      for (int h = 0; h < r && !separated; ++h) {
        for (int sign : {+1, -1}) {
          ProfileVector m = vg.rows[h];
          m[i] += sign;
          m[j] -= sign;
          if (!within_bounds(m, vg.class_sizes)) continue;
          if (!dominates_some_row(m, vg.rows)) {
            separated = true;
            break;
          }
        }
      }
      if (!separated) {
        fail(rep.separation_ok, "separation",
             "classes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                 " admit no losing one-swap witness");
      }
    }
  }

  bool maximal = true;
  for_each_stabilizer_perm(vg.class_sizes, [&](const std::vector<int>& pi) {
    if (!maximal || is_identity(pi)) return;
    VectorGame permuted = apply_class_permutation(vg, pi);
    if (lex_compare(vg.rows, permuted.rows) == Cmp::less) maximal = false;
  });
  if (!maximal) {
    fail(rep.canonical_ok, "matrix-maximality",
         "a size-preserving class relabeling yields a larger matrix");
  }

  return rep;
}

VectorGame apply_class_permutation(const VectorGame& vg, const std::vector<int>& pi) {
  require_shape(vg);
  const int t = vg.num_classes();
  require(static_cast<int>(pi.size()) == t, "permutation must cover all classes");
  std::vector<bool> seen(static_cast<std::size_t>(t), false);
  for (int image : pi) {
    require(image >= 1 && image <= t, "permutation image out of range");
    require(!seen[static_cast<std::size_t>(image - 1)], "permutation must be a bijection");
    seen[static_cast<std::size_t>(image - 1)] = true;
  }

  VectorGame out;
  out.class_sizes.resize(static_cast<std::size_t>(t));
  for (int k = 0; k < t; ++k) {
    out.class_sizes[k] = vg.class_sizes[pi[k] - 1];
  }
  out.rows.reserve(vg.rows.size());
  for (const ProfileVector& row : vg.rows) {
    ProfileVector mapped(static_cast<std::size_t>(t));
    for (int k = 0; k < t; ++k) mapped[k] = row[pi[k] - 1];
    out.rows.push_back(std::move(mapped));
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const ProfileVector& a, const ProfileVector& b) {
              return lex_compare(a, b) == Cmp::greater;
            });
  return out;
}

SimpleGame expand(const VectorGame& vg) {
  ConditionReport rep = check_conditions(vg);
  if (!rep.bounds_ok || !rep.structural_ok) {
    throw std::invalid_argument("vector game is not expandable: " +
                                rep.failures.front().condition + ", " +
                                rep.failures.front().detail);
  }
  const int n = vg.total_players();
  require(n <= kMaxExhaustivePlayers, "too many players to materialize the expansion");
  for (const ProfileVector& row : vg.rows) {
    require(std::any_of(row.begin(), row.end(), [](int e) { return e > 0; }),
            "an all-zero row would make the empty coalition winning");
  }

  std::vector<int> offsets(vg.class_sizes.size());
  int off = 0;
  for (std::size_t k = 0; k < vg.class_sizes.size(); ++k) {
    offsets[k] = off;
    off += vg.class_sizes[k];
  }

  std::vector<Coalition> coalitions;
  for (const ProfileVector& row : vg.rows) {
    std::vector<Coalition> partial{0};
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::vector<Coalition> block;
      block_combinations(offsets[k], offsets[k] + vg.class_sizes[k], row[k], 0, block);
      std::vector<Coalition> next;
      next.reserve(partial.size() * block.size());
      for (Coalition p : partial) {
        for (Coalition b : block) next.push_back(p | b);
      }
      partial = std::move(next);
    }
    coalitions.insert(coalitions.end(), partial.begin(), partial.end());
  }
  return SimpleGame::from_minimal_winning(n, std::move(coalitions));
}

MinimalWinningMatrix minimal_winning_vectors(const SimpleGame& g, const Partition& p) {
  MinimalWinningMatrix rows;
  rows.reserve(g.min_winning().size());
  for (Coalition mw : g.min_winning()) rows.push_back(profile(mw, p));
  std::sort(rows.begin(), rows.end(), [](const ProfileVector& a, const ProfileVector& b) {
    return lex_compare(a, b) == Cmp::greater;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

namespace {

// Maximizes the column-major flattening over all class relabelings that
// preserve the (weakly decreasing) sizes. Output columns are chosen left to
// right; a column's contribution at a position depends only on the columns
// already placed, so only contribution-maximal choices can extend to the
// maximum and everything else is pruned. Genuine ties branch and the leaf
// matrices are compared directly.
struct CanonicalSearch {
  const CountVector& sizes;
  const MinimalWinningMatrix& rows;
  int t;
  int r;
  std::vector<char> used;
  std::vector<int> chosen;  // output position -> source column
  VectorGame best;
  bool have_best = false;

  CanonicalSearch(const CountVector& sizes_, const MinimalWinningMatrix& rows_)
      : sizes(sizes_),
        rows(rows_),
        t(static_cast<int>(sizes_.size())),
        r(static_cast<int>(rows_.size())),
        used(static_cast<std::size_t>(t), 0),
        chosen(static_cast<std::size_t>(t), -1) {}

  // The block of the flattening a column contributes at the current stage:
  // its values sorted descending inside every run of still-tied rows. Later
  // refinements only permute rows with equal values here, so the block is
  // final as soon as the column is placed.
  std::vector<int> contribution(int col, const std::vector<std::vector<int>>& groups) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(r));
    for (const std::vector<int>& group : groups) {
      const std::size_t begin = out.size();
      for (int row : group) out.push_back(rows[row][col]);
      std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end(),
                std::greater<int>());
    }
    return out;
  }

  void dfs(int pos, const std::vector<std::vector<int>>& groups) {
    if (pos == t) {
      std::vector<int> pi(static_cast<std::size_t>(t));
      for (int k = 0; k < t; ++k) pi[k] = chosen[k] + 1;
      VectorGame cand = apply_class_permutation({sizes, rows}, pi);
      if (!have_best || lex_compare(cand.rows, best.rows) == Cmp::greater) {
        best = std::move(cand);
        have_best = true;
      }
      return;
    }

    std::vector<int> candidates;
    std::vector<int> top;
    for (int c = 0; c < t; ++c) {
      if (used[c] || sizes[c] != sizes[pos]) continue;
      std::vector<int> block = contribution(c, groups);
      if (candidates.empty() || block > top) {
        candidates.assign(1, c);
        top = std::move(block);
      } else if (block == top) {
        candidates.push_back(c);
      }
    }

    // Columns with identical values are interchangeable; keep one of each.
    std::vector<int> distinct;
    for (int c : candidates) {
      bool duplicate = false;
      for (int d : distinct) {
        bool same = true;
        for (int row = 0; row < r && same; ++row) same = rows[row][c] == rows[row][d];
        duplicate = duplicate || same;
      }
      if (!duplicate) distinct.push_back(c);
    }

    for (int c : distinct) {
      used[c] = 1;
      chosen[pos] = c;
      dfs(pos + 1, refine(groups, c));
      chosen[pos] = -1;
      used[c] = 0;
    }
  }

  std::vector<std::vector<int>> refine(const std::vector<std::vector<int>>& groups,
                                       int col) const {
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (const std::vector<int>& group : groups) {
      if (group.size() == 1) {
        out.push_back(group);
        continue;
      }
      std::vector<int> sorted = group;
      std::sort(sorted.begin(), sorted.end(),
                [&](int a, int b) { return rows[a][col] > rows[b][col]; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i == sorted.size() || rows[sorted[i]][col] != rows[sorted[start]][col]) {
          out.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(start),
                           sorted.begin() + static_cast<std::ptrdiff_t>(i));
          start = i;
        }
      }
    }
    return out;
  }
};

}  // namespace

VectorGame canonical_form(const SimpleGame& g) {
  Partition p = g.equivalence_partition();
  CountVector sizes;
  sizes.reserve(p.classes.size());
  for (Coalition c : p.classes) sizes.push_back(coalition_size(c));
  MinimalWinningMatrix rows = minimal_winning_vectors(g, p);

  // Only the identity preserves pairwise distinct sizes.
  bool all_distinct = true;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    all_distinct = all_distinct && sizes[k] != sizes[k + 1];
  }
  if (all_distinct) return {std::move(sizes), std::move(rows)};

  CanonicalSearch search(sizes, rows);
  std::vector<std::vector<int>> all_rows(1, std::vector<int>(static_cast<std::size_t>(search.r)));
  for (int i = 0; i < search.r; ++i) all_rows[0][i] = i;
  search.dfs(0, all_rows);
  return search.best;
}

bool is_isomorphic(const SimpleGame& a, const SimpleGame& b) {
  if (a.player_count() != b.player_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace sgames
