/*
   Copyright 2026 the wprm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WPRM_SERIALIZE_HPP
#define WPRM_SERIALIZE_HPP

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "weighted_space.hpp"

namespace wprm {

using nlohmann::json;

inline json point_set_to_json(const PointSet& ps) {
    json j;
    j["weights"] = ps.space.weights();
    j["q"] = ps.field.q();
    j["points"] = json::array();
    for (const auto& p : ps.points) j["points"].push_back(p);
    return j;
}

inline PointSet point_set_from_json(const json& j) {
    WeightedSpace space(j.at("weights").get<std::vector<int>>());
    Gf field(j.at("q").get<int>());
    std::vector<Coords> pts;
    for (const auto& p : j.at("points")) pts.push_back(p.get<Coords>());
    return PointSet{std::move(space), std::move(field), std::move(pts)};
}

inline json report_to_json(const VerificationReport& rep, int q, int a, int b) {
    json j;
    j["params"] = {{"q", q}, {"a", a}, {"b", b}};
    j["checks"] = json::array();
    for (const auto& c : rep.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["all_pass"] = rep.all_pass();
    return j;
}

inline json code_params_to_json(const CodeParams& p) {
    return json{{"N", p.n},
                {"K", p.k},
                {"delta", p.delta},
                {"provenance",
                 {{"N", "enumeration"},
                  {"K", "rank"},
                  {"delta", provenance_name(p.delta_provenance)}}}};
}

// ---- CSV: comma separation, header row, no quoting ----

inline std::string table_rows_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "d,N,K,delta,marker\n";
    for (const auto& r : rows)
        os << r.d << ',' << r.n << ',' << r.k << ',' << r.delta << ','
           << (r.marker.empty() ? "-" : r.marker) << '\n';
    return os.str();
}

inline json table_rows_to_json(const std::vector<TableRow>& rows) {
    json j = json::array();
    for (const auto& r : rows)
        j.push_back({{"d", r.d},
                     {"N", r.n},
                     {"K", r.k},
                     {"delta", r.delta},
                     {"marker", r.marker.empty() ? "-" : r.marker}});
    return j;
}

inline std::string hilbert_rows_to_csv(const std::vector<std::pair<int, long long>>& rows) {
    std::ostringstream os;
    os << "d,H\n";
    for (const auto& [d, h] : rows) os << d << ',' << h << '\n';
    return os.str();
}

inline json hilbert_rows_to_json(const std::vector<std::pair<int, long long>>& rows) {
    json j = json::array();
    for (const auto& [d, h] : rows) j.push_back({{"d", d}, {"H", h}});
    return j;
}

inline json series_to_json(const HilbertSeries& s) {
    json terms = json::array();
    for (const auto& [deg, coeff] : s.numerator) terms.push_back({{"degree", deg}, {"coeff", coeff}});
    return json{{"numerator", terms}, {"denominator_weights", s.denom_weights}};
}

}  // namespace wprm

#endif
