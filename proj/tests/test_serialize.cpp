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

#include <catch2/catch_amalgamated.hpp>

#include "wprm/serialize.hpp"

using namespace wprm;

TEST_CASE("point set JSON round trip") {
    PointSet ps = enumerate_points(WeightedSpace({1, 1, 2}), Gf(3));
    json j = point_set_to_json(ps);
    REQUIRE(j["q"] == 3);
    REQUIRE(j["weights"] == json::array({1, 1, 2}));
    REQUIRE(j["points"].size() == 13);
    PointSet back = point_set_from_json(j);
    REQUIRE(back.points == ps.points);
    REQUIRE(back.space == ps.space);
    REQUIRE(back.field.q() == ps.field.q());
}

TEST_CASE("verification report JSON") {
    VerificationReport rep;
    rep.checks.push_back({"phi1_phi2_zero", true, ""});
    rep.checks.push_back({"minors_generate_ideal", false, "detail"});
    json j = report_to_json(rep, 2, 1, 5);
    REQUIRE(j["params"]["q"] == 2);
    REQUIRE(j["params"]["b"] == 5);
    REQUIRE(j["checks"].size() == 2);
    REQUIRE(j["checks"][0]["pass"] == true);
    REQUIRE(j["checks"][1]["pass"] == false);
    REQUIRE(j["all_pass"] == false);
}

TEST_CASE("code params JSON") {
    CodeParams p{7, 4, 2, DeltaProvenance::both_agree};
    json j = code_params_to_json(p);
    REQUIRE(j["N"] == 7);
    REQUIRE(j["K"] == 4);
    REQUIRE(j["delta"] == 2);
    REQUIRE(j["provenance"]["delta"] == "both-agree");
}

TEST_CASE("table CSV shape") {
    auto rows = table_rows(2, 2, 2, 6);
    std::string csv = table_rows_to_csv(rows);
    REQUIRE(csv.substr(0, 19) == "d,N,K,delta,marker\n");
    // d = 4 is the first regularity degree for q = 2, b = 2
    REQUIRE(csv.find("4,7,7,1,reg-first\n") != std::string::npos);
    REQUIRE(csv.find("6,7,7,1,reg\n") != std::string::npos);
    REQUIRE(csv.find("5,7,6,1,-\n") != std::string::npos);
}

TEST_CASE("hilbert rows CSV") {
    std::vector<std::pair<int, long long>> rows{{0, 1}, {1, 2}};
    REQUIRE(hilbert_rows_to_csv(rows) == "d,H\n0,1\n1,2\n");
}

TEST_CASE("series JSON") {
    json j = series_to_json(series_numerator(2, 1, 2));
    REQUIRE(j["denominator_weights"] == json::array({1, 1, 2}));
    REQUIRE(j["numerator"].size() == 5);
}
