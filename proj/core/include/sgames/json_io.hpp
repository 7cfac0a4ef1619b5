#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgames/formulas.hpp"
#include "sgames/oracle.hpp"
#include "sgames/vector_game.hpp"

namespace sgames {

// Wire formats. Coalitions are ascending 1-indexed member arrays; coalition
// lists are sorted by (size, members); matrices keep the stored decreasing
// row order. Malformed documents raise std::invalid_argument.

// {"n_bar":[4,2],"matrix":[[3,0],[2,1]]}
nlohmann::ordered_json to_json(const VectorGame& vg);
VectorGame vector_game_from_json(const nlohmann::json& j);

// {"n":3,"min_winning":[[1],[2,3]]}
nlohmann::ordered_json to_json(const SimpleGame& g);
SimpleGame simple_game_from_json(const nlohmann::json& j);

// {"n":4,"labeled_total":166,"by_t":{"1":4,...},"checks":[{"name":...,"pass":...}]}
nlohmann::ordered_json to_json(const ClassificationReport& report);

// One row per n: n,cases,violations,r1,total_pairs,symmetric,bipartite.
std::string count_table_csv(const std::vector<CountRecord>& records);

nlohmann::ordered_json to_json(const CountRecord& record);

}  // namespace sgames
