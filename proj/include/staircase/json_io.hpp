#pragma once

#include <json.hpp>

#include "staircase/powers.hpp"
#include "staircase/reduction.hpp"
#include "staircase/survey.hpp"

namespace staircase {

inline nlohmann::json json_of(monomial m) {
    return nlohmann::json::array({m.x, m.y});
}

// Pairs with the x-exponent descending, matching the text rendering.
inline nlohmann::json json_of(const monomial_ideal& I) {
    nlohmann::json a = nlohmann::json::array();
    const auto gens = I.generators();
    for (std::size_t i = gens.size(); i-- > 0;) a.push_back(json_of(gens[i]));
    return a;
}

inline nlohmann::json json_of(const reduction_report& rep,
                              const monomial_ideal& input) {
    nlohmann::json j{{"a", rep.a},
                     {"b", rep.b},
                     {"generators", json_of(input)},
                     {"J", json_of(rep.reduction)},
                     {"r", rep.r},
                     {"witness_k", rep.witness_k}};
    if (rep.bounds) {
        j["cold_bound"] = rep.bounds->cold;
        j["glp_bound"] = rep.bounds->glp;
    }
    return j;
}

inline nlohmann::json json_of(const exponent_set& A) {
    return {{"g", A.g}, {"members", A.members.elements()}};
}

inline nlohmann::json json_of(const survey_table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const survey_row& row : t.rows)
        rows.push_back({{"j", row.j},
                        {"count", row.count},
                        {"ratio_num", row.count},
                        {"ratio_den", t.total}});
    return {{"parameter", t.parameter}, {"total", t.total}, {"rows", rows}};
}

// One row per bucket: parameter, j, count, total, ratio_num, ratio_den.
inline std::string csv_of(const survey_table& t) {
    std::string s = "parameter,j,count,total,ratio_num,ratio_den\n";
    for (const survey_row& row : t.rows) {
        s += t.parameter + "," + std::to_string(row.j) + "," +
             std::to_string(row.count) + "," + std::to_string(t.total) + "," +
             std::to_string(row.count) + "," + std::to_string(t.total) + "\n";
    }
    return s;
}

}  // namespace staircase
