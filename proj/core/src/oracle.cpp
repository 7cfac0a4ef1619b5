#include "sgames/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "sgames/enumeration.hpp"

namespace sgames {

namespace {

std::string canonical_key(const VectorGame& vg) {
  std::string key;
  for (int s : vg.class_sizes) {
    key += std::to_string(s);
    key += ',';
  }
  key += '|';
  for (const ProfileVector& row : vg.rows) {
    for (int e : row) {
      key += std::to_string(e);
      key += ',';
    }
    key += ';';
  }
  return key;
}

struct Sweep {
  BigInt labeled = 0;
  std::unordered_map<std::string, int> classes;  // canonical key -> class count t
};

Sweep run_sweep(int n) {
  Sweep sw;
  for_each_labeled_game(n, [&sw](const SimpleGame& g) {
    ++sw.labeled;
    VectorGame c = canonical_form(g);
    sw.classes.emplace(canonical_key(c), c.num_classes());
  });
  return sw;
}

ClassificationReport report_from_sweep(int n, const Sweep& sw) {
  ClassificationReport rep;
  rep.n = n;
  rep.labeled_total = sw.labeled;
  for (const auto& [key, t] : sw.classes) ++rep.by_t[t];
  return rep;
}

}  // namespace

bool ClassificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

void for_each_labeled_game(int n, const std::function<void(const SimpleGame&)>& fn) {
  if (n < 1 || n > kOracleMaxPlayers) {
    throw std::invalid_argument("brute force supports 1..6 players");
  }
  std::vector<Coalition> order;
  order.reserve((std::size_t{1} << n) - 1);
  for (Coalition s = 1; s <= full_coalition(n); ++s) order.push_back(s);
  std::sort(order.begin(), order.end(), coalition_before);

  // Depth-first extension: each antichain is reached exactly once as an
  // increasing index sequence of pairwise incomparable coalitions.
  std::vector<Coalition> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t idx = start; idx < order.size(); ++idx) {
      const Coalition c = order[idx];
      bool compatible = true;
      for (Coalition m : chosen) {
        if (subset_of(m, c) || subset_of(c, m)) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      chosen.push_back(c);
      fn(SimpleGame::from_minimal_winning(n, chosen));
      self(self, idx + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<SimpleGame> enumerate_labeled_games(int n) {
  std::vector<SimpleGame> out;
  for_each_labeled_game(n, [&out](const SimpleGame& g) { out.push_back(g); });
  return out;
}

ClassificationReport classify_by_t(int n) {
  return report_from_sweep(n, run_sweep(n));
}

ClassificationReport cross_validate(int n) {
  if (n < 2 || n > kOracleMaxPlayers) {
    throw std::invalid_argument("cross validation supports 2..6 players");
  }
  Sweep sw = run_sweep(n);
  ClassificationReport rep = report_from_sweep(n, sw);

  std::vector<std::string> oracle_keys;
  for (const auto& [key, t] : sw.classes) {
    if (t == 2) oracle_keys.push_back(key);
  }
  std::sort(oracle_keys.begin(), oracle_keys.end());

  long long generated = 0;
  std::vector<std::string> generator_keys;
  for_each_bipartite_canonical(n, [&](const VectorGame& vg) {
    ++generated;
    generator_keys.push_back(canonical_key(vg));
  });
  std::sort(generator_keys.begin(), generator_keys.end());

  const long long two_class = rep.by_t.count(2) ? rep.by_t.at(2) : 0;
  const long long one_class = rep.by_t.count(1) ? rep.by_t.at(1) : 0;
  rep.checks.push_back(
      {"theorem_bipartite", BigInt{two_class} == closed_formulas(n).bipartite});
  rep.checks.push_back({"generator_bipartite", two_class == generated});
  rep.checks.push_back({"t1_equals_n", one_class == n});
  rep.checks.push_back({"canonical_forms_match", oracle_keys == generator_keys});
  return rep;
}

}  // namespace sgames
