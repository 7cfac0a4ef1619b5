#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sgames/enumeration.hpp"
#include "sgames/oracle.hpp"
#include "test_support.hpp"

using namespace sgames;
using testsupport::coal;
using testsupport::game;

namespace {

// Independent count of the labeled games: all monotone 0/1 functions on the
// power set with value 0 at the empty set and 1 at the full set, checked by
// scanning every one of the 2^(2^n) candidate value tables.
long long monotone_function_count(int n) {
  const int cells = 1 << n;
  long long count = 0;
  for (unsigned long long table = 0; table < (1ull << cells); ++table) {
    if ((table & 1ull) != 0) continue;                         // value(empty) = 0
    if ((table >> (cells - 1) & 1ull) == 0) continue;          // value(full) = 1
    bool monotone = true;
    for (int s = 0; s < cells && monotone; ++s) {
      for (int p = 0; p < n; ++p) {
        const int t = s | (1 << p);
        if ((table >> s & 1ull) > (table >> t & 1ull)) {
          monotone = false;
          break;
        }
      }
    }
    if (monotone) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("labeled stream smallest cases") {
  CHECK(enumerate_labeled_games(1) == std::vector<SimpleGame>{game(1, {{1}})});

  std::vector<SimpleGame> two = enumerate_labeled_games(2);
  CHECK(two.size() == 4);
  std::set<std::vector<Coalition>> families;
  for (const SimpleGame& g : two) families.insert(g.min_winning());
  CHECK(families == std::set<std::vector<Coalition>>{
                        {coal(2, {1})},
                        {coal(2, {2})},
                        {coal(2, {1, 2})},
                        {coal(2, {1}), coal(2, {2})}});

  CHECK(enumerate_labeled_games(3).size() == 18);
  CHECK_THROWS_AS(enumerate_labeled_games(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_labeled_games(7), std::invalid_argument);
}

TEST_CASE("labeled stream is deterministic and duplicate-free") {
  std::vector<SimpleGame> first = enumerate_labeled_games(4);
  std::vector<SimpleGame> second = enumerate_labeled_games(4);
  CHECK(first == second);
  std::set<std::vector<Coalition>> families;
  for (const SimpleGame& g : first) CHECK(families.insert(g.min_winning()).second);
}

TEST_CASE("labeled totals match the independent monotone-function count") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(BigInt{monotone_function_count(n)} == classify_by_t(n).labeled_total);
  }
}

TEST_CASE("classification by the number of classes") {
  ClassificationReport one = classify_by_t(1);
  CHECK(one.by_t == std::map<int, long long>{{1, 1}});

  ClassificationReport two = classify_by_t(2);
  CHECK(two.labeled_total == 4);
  CHECK(two.by_t == std::map<int, long long>{{1, 2}, {2, 1}});

  ClassificationReport three = classify_by_t(3);
  CHECK(three.labeled_total == 18);
  CHECK(three.by_t == std::map<int, long long>{{1, 3}, {2, 5}});

  ClassificationReport four = classify_by_t(4);
  CHECK(four.labeled_total == 166);
  CHECK(four.by_t.at(1) == 4);
  CHECK(four.by_t.at(2) == 17);
}

TEST_CASE("one-class games are the quota rules") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(classify_by_t(n).by_t.at(1) == n);
  }
}

TEST_CASE("cross_validate passes everywhere in range") {
  for (int n = 2; n <= 5; ++n) {
    ClassificationReport rep = cross_validate(n);
    REQUIRE(rep.checks.size() == 4);
    for (const CheckResult& c : rep.checks) {
      INFO(c.name << " at n=" << n);
      CHECK(c.pass);
    }
  }
  CHECK(cross_validate(5).by_t.at(2) == 42);
  CHECK_THROWS_AS(cross_validate(1), std::invalid_argument);
  CHECK_THROWS_AS(cross_validate(7), std::invalid_argument);
}

TEST_CASE("class tallies sum to the number of canonical forms") {
  for (int n = 2; n <= 5; ++n) {
    ClassificationReport rep = classify_by_t(n);
    long long classes = 0;
    for (const auto& [t, count] : rep.by_t) classes += count;
    std::set<std::pair<CountVector, MinimalWinningMatrix>> canon;
    for_each_labeled_game(n, [&](const SimpleGame& g) {
      VectorGame c = canonical_form(g);
      canon.insert({c.class_sizes, c.rows});
    });
    CHECK(classes == static_cast<long long>(canon.size()));
  }
}

TEST_CASE("separation characterizes two-class expansions exactly") {
  // Multi-row pairs: a violated decomposition collapses the two blocks into
  // one class, a separated one keeps them apart.
  for (int n = 2; n <= 8; ++n) {
    for_each_xyz(n, [&](const XyzDecomposition& d) {
      SimpleGame g = expand(xyz_to_pair(n, d));
      const int t = g.equivalence_partition().size();
      CHECK(t == (separation_violated_xyz(d) ? 1 : 2));
    });
  }
  // Single-row pairs, same statement via the condition report.
  for (int n = 2; n <= 7; ++n) {
    for (int n1 = 1; n1 <= n - 1; ++n1) {
      const int n2 = n - n1;
      for (int a = 0; a <= n1; ++a) {
        for (int b = 0; b <= n2; ++b) {
          if (a == 0 && b == 0) continue;  // not a game: the empty set would win
          VectorGame vg{{n1, n2}, {{a, b}}};
          const int t = expand(vg).equivalence_partition().size();
          CHECK(t == (check_conditions(vg).separation_ok ? 2 : 1));
        }
      }
    }
  }
}
