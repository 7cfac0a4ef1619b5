#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "sgames/enumeration.hpp"
#include "sgames/formulas.hpp"

using namespace sgames;

TEST_CASE("xyz_to_pair rebuilds the pair from its coordinates") {
  CHECK(xyz_to_pair(6, {2, {2, 0}, {0, 0}, 1, 1}) ==
        VectorGame{{4, 2}, {{3, 0}, {2, 1}}});
  CHECK(xyz_to_pair(6, {2, {0, 0}, {0, 0}, 2, 2}) ==
        VectorGame{{3, 3}, {{1, 0}, {0, 1}}});
  // Sum 1 instead of n+2-2r = 2.
  CHECK_THROWS_AS(xyz_to_pair(4, {2, {0, 0}, {0, 0}, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(xyz_to_pair(6, {1, {2}, {0}, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(xyz_to_pair(6, {2, {2, 0}, {0}, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(xyz_to_pair(8, {2, {-1, 3}, {0, 0}, 2, 2}), std::invalid_argument);
}

TEST_CASE("pair_to_xyz inverts the construction") {
  CHECK(pair_to_xyz({{4, 2}, {{3, 0}, {2, 1}}}) ==
        XyzDecomposition{2, {2, 0}, {0, 0}, 1, 1});
  CHECK(pair_to_xyz({{3, 3}, {{1, 0}, {0, 1}}}) ==
        XyzDecomposition{2, {0, 0}, {0, 0}, 2, 2});
  // Comparable rows break the staircase and surface as a negative gap.
  CHECK_THROWS_AS(pair_to_xyz({{2, 2}, {{2, 2}, {1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(pair_to_xyz({{4, 2}, {{3, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(pair_to_xyz({{4, 2, 1}, {{3, 0, 0}, {2, 1, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("xyz round trip over every decomposition") {
  for (int n = 2; n <= 10; ++n) {
    BigInt seen = 0;
    for_each_xyz(n, [&](const XyzDecomposition& d) {
      ++seen;
      VectorGame vg = xyz_to_pair(n, d);
      CHECK(pair_to_xyz(vg) == d);
      CHECK(vg.total_players() == n);
      ConditionReport rep = check_conditions(vg);
      CHECK(rep.structural_ok);
      CHECK(rep.bounds_ok);
    });
    // The number of decompositions is itself a closed form.
    CHECK(seen == closed_formulas(n).cases);
  }
}

TEST_CASE("separation_violated_xyz follows the four-part rule") {
  for (int a = 0; a <= 3; ++a) {
    CHECK(separation_violated_xyz({2, {0, 0}, {0, 0}, 0, a}));
  }
  CHECK_FALSE(separation_violated_xyz({2, {2, 0}, {0, 0}, 1, 1}));
  CHECK_FALSE(separation_violated_xyz({2, {0, 1}, {0, 0}, 0, 0}));
  CHECK_FALSE(separation_violated_xyz({3, {0, 0, 2}, {0, 0, 0}, 0, 0}));
  CHECK(separation_violated_xyz({2, {3, 0}, {0, 0}, 2, 0}));
}

TEST_CASE("separation on coordinates agrees with the coalition-level check") {
  for (int n = 2; n <= 10; ++n) {
    for_each_xyz(n, [&](const XyzDecomposition& d) {
      CHECK(separation_violated_xyz(d) !=
            check_conditions(xyz_to_pair(n, d)).separation_ok);
    });
  }
}

TEST_CASE("enumerate_pairs smallest cases") {
  CHECK(enumerate_pairs(2) ==
        std::vector<VectorGame>{{{1, 1}, {{1, 0}}}, {{1, 1}, {{0, 1}}}});
  CHECK(enumerate_pairs(3).size() == 10);
  CHECK(enumerate_pairs(4).size() == 32);
  CHECK_THROWS_AS(enumerate_pairs(1), std::invalid_argument);
}

TEST_CASE("enumerate_pairs matches the closed count") {
  for (int n = 2; n <= 14; ++n) {
    BigInt seen = 0;
    for_each_pair(n, [&](const VectorGame&) { ++seen; });
    CHECK(seen == closed_formulas(n).total_pairs);
  }
}

TEST_CASE("enumerate_pairs output order and row range") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<VectorGame> pairs = enumerate_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const VectorGame& vg = pairs[i];
      // Row count range for the multi-row pairs.
      if (vg.num_rows() >= 2) CHECK(vg.num_rows() <= n / 2 + 1);
      CHECK(check_conditions(vg).separation_ok);
      if (i == 0) continue;
      const VectorGame& prev = pairs[i - 1];
      // Sizes ascend; within a size group the flattenings descend.
      CHECK(prev.class_sizes <= vg.class_sizes);
      if (prev.class_sizes == vg.class_sizes) {
        auto flat = [](const VectorGame& v) {
          std::vector<int> f;
          for (std::size_t col = 0; col < 2; ++col) {
            for (const ProfileVector& row : v.rows) f.push_back(row[col]);
          }
          return f;
        };
        CHECK(flat(prev) > flat(vg));
      }
    }
  }
}

TEST_CASE("enumerate_bipartite_canonical smallest cases") {
  CHECK(enumerate_bipartite_canonical(2) ==
        std::vector<VectorGame>{{{1, 1}, {{1, 0}}}});
  CHECK(enumerate_bipartite_canonical(3) ==
        std::vector<VectorGame>{{{2, 1}, {{2, 0}, {0, 1}}},
                                {{2, 1}, {{2, 0}}},
                                {{2, 1}, {{1, 1}}},
                                {{2, 1}, {{1, 0}}},
                                {{2, 1}, {{0, 1}}}});
  CHECK(enumerate_bipartite_canonical(4).size() == 17);
}

TEST_CASE("canonical generator matches the closed count and passes all checks") {
  for (int n = 2; n <= 12; ++n) {
    BigInt seen = 0;
    for_each_bipartite_canonical(n, [&](const VectorGame& vg) {
      ++seen;
      if (n <= 7) CHECK(check_conditions(vg).all_ok());
    });
    CHECK(seen == closed_formulas(n).bipartite);
  }
}

TEST_CASE("canonical count agreement up to twenty players") {
  for (int n = 13; n <= 20; ++n) {
    BigInt seen = 0;
    for_each_bipartite_canonical(n, [&](const VectorGame&) { ++seen; });
    CHECK(seen == closed_formulas(n).bipartite);
  }
}

TEST_CASE("closed_formulas reference rows") {
  CountRecord r2 = closed_formulas(2);
  CHECK(r2.cases == 1);
  CHECK(r2.violations == 1);
  CHECK(r2.r1_count == 2);
  CHECK(r2.total_pairs == 2);
  CHECK(r2.symmetric == 0);
  CHECK(r2.bipartite == 1);

  CountRecord r3 = closed_formulas(3);
  CHECK(r3.cases == 6);
  CHECK(r3.violations == 4);
  CHECK(r3.r1_count == 8);
  CHECK(r3.total_pairs == 10);
  CHECK(r3.symmetric == 0);
  CHECK(r3.bipartite == 5);

  CountRecord r4 = closed_formulas(4);
  CHECK(r4.cases == 22);
  CHECK(r4.violations == 9);
  CHECK(r4.r1_count == 19);
  CHECK(r4.total_pairs == 32);
  CHECK(r4.symmetric == 2);
  CHECK(r4.bipartite == 17);

  CHECK(closed_formulas(5).bipartite == 42);
  CHECK(closed_formulas(6).bipartite == 103);
  CHECK_THROWS_AS(closed_formulas(1), std::invalid_argument);
}

TEST_CASE("count identities hold exactly for n up to 200") {
  for (int n = 2; n <= 200; ++n) {
    CountRecord rec = closed_formulas(n);
    CHECK(rec.total_pairs == rec.cases - rec.violations + rec.r1_count);
    CHECK(rec.bipartite == burnside_combine(rec.total_pairs, rec.symmetric));
  }
}

TEST_CASE("burnside_combine") {
  CHECK(burnside_combine(32, 2) == 17);
  CHECK(burnside_combine(10, 0) == 5);
  CHECK(burnside_combine(2, 2) == 2);
  CHECK_THROWS_AS(burnside_combine(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(burnside_combine(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(burnside_combine(2, -2), std::invalid_argument);
}

TEST_CASE("count_symmetric_direct") {
  CHECK(count_symmetric_direct(2) == 0);
  CHECK(count_symmetric_direct(4) == 2);
  CHECK(count_symmetric_direct(6) == 8);
  CHECK_THROWS_AS(count_symmetric_direct(3), std::invalid_argument);
  for (int n = 2; n <= 40; n += 2) {
    CHECK(count_symmetric_direct(n) == closed_formulas(n).symmetric);
  }
}

TEST_CASE("swap-fixed pairs in the enumeration match the symmetric count") {
  for (int n = 2; n <= 8; n += 2) {
    BigInt fixed = 0;
    std::set<std::pair<CountVector, MinimalWinningMatrix>> fixed_pairs;
    for_each_pair(n, [&](const VectorGame& vg) {
      if (vg.class_sizes[0] != vg.class_sizes[1]) return;
      if (apply_class_permutation(vg, {2, 1}) == vg) {
        ++fixed;
        fixed_pairs.insert({vg.class_sizes, vg.rows});
      }
    });
    CHECK(fixed == closed_formulas(n).symmetric);
    if (n == 4) {
      CHECK(fixed_pairs ==
            std::set<std::pair<CountVector, MinimalWinningMatrix>>{
                {{2, 2}, {{1, 1}}}, {{2, 2}, {{2, 0}, {0, 2}}}});
    }
  }
}

TEST_CASE("asymptotic ratio approaches the power of two") {
  CountRecord rec = closed_formulas(30);
  const double ratio =
      rec.bipartite.convert_to<double>() / (BigInt{1} << 31).convert_to<double>();
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.001));
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == BigInt{"118264581564861424"});
}
