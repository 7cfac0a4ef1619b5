#include "sgames/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace sgames {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("expected an object with array field \"") +
                                key + "\"");
  }
  return j.at(key);
}

std::string decimal(const BigInt& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

}  // namespace

ordered_json to_json(const VectorGame& vg) {
  ordered_json j;
  j["n_bar"] = vg.class_sizes;
  j["matrix"] = vg.rows;
  return j;
}

VectorGame vector_game_from_json(const json& j) {
  const json& sizes = require_array(j, "n_bar");
  const json& matrix = require_array(j, "matrix");
  VectorGame vg;
  for (const json& e : sizes) vg.class_sizes.push_back(require_int(e, "n_bar entry"));
  for (const json& row : matrix) {
    if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    ProfileVector r;
    for (const json& e : row) r.push_back(require_int(e, "matrix entry"));
    vg.rows.push_back(std::move(r));
  }
  if (vg.class_sizes.empty() || vg.rows.empty()) {
    throw std::invalid_argument("vector game needs classes and rows");
  }
  for (const ProfileVector& row : vg.rows) {
    if (row.size() != vg.class_sizes.size()) {
      throw std::invalid_argument("matrix row width must match n_bar length");
    }
  }
  return vg;
}

ordered_json to_json(const SimpleGame& g) {
  ordered_json j;
  j["n"] = g.player_count();
  ordered_json list = ordered_json::array();
  for (Coalition mw : g.min_winning()) list.push_back(coalition_members(mw));
  j["min_winning"] = std::move(list);
  return j;
}

SimpleGame simple_game_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) {
    throw std::invalid_argument("expected an object with fields \"n\" and \"min_winning\"");
  }
  const int n = require_int(j.at("n"), "n");
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("n must be in 1..64");
  const json& coalitions = require_array(j, "min_winning");
  std::vector<Coalition> sets;
  for (const json& members : coalitions) {
    if (!members.is_array()) throw std::invalid_argument("coalitions must be arrays");
    std::vector<int> ids;
    for (const json& e : members) ids.push_back(require_int(e, "player index"));
    sets.push_back(coalition_from_members(ids, n));
  }
  return SimpleGame::from_minimal_winning(n, std::move(sets));
}

ordered_json to_json(const ClassificationReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["labeled_total"] = report.labeled_total.convert_to<std::uint64_t>();
  ordered_json by_t = ordered_json::object();
  for (const auto& [t, count] : report.by_t) by_t[std::to_string(t)] = count;
  j["by_t"] = std::move(by_t);
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string count_table_csv(const std::vector<CountRecord>& records) {
  std::ostringstream out;
  out << "n,cases,violations,r1,total_pairs,symmetric,bipartite\n";
  for (const CountRecord& rec : records) {
    out << rec.n << ',' << rec.cases << ',' << rec.violations << ',' << rec.r1_count
        << ',' << rec.total_pairs << ',' << rec.symmetric << ',' << rec.bipartite
        << '\n';
  }
  return out.str();
}

ordered_json to_json(const CountRecord& record) {
  // Counts grow past 2^64 quickly, so JSON carries them as decimal strings.
  ordered_json j;
  j["n"] = record.n;
  j["cases"] = decimal(record.cases);
  j["violations"] = decimal(record.violations);
  j["r1"] = decimal(record.r1_count);
  j["total_pairs"] = decimal(record.total_pairs);
  j["symmetric"] = decimal(record.symmetric);
  j["bipartite"] = decimal(record.bipartite);
  return j;
}

}  // namespace sgames
