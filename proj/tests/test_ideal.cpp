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

#include <functional>

#include "wprm/ideal.hpp"

using namespace wprm;

namespace {
void require_kind(ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
        FAIL("expected an error of kind " << kind_name(kind));
    } catch (const Error& e) {
        REQUIRE(e.kind() == kind);
    }
}
}  // namespace

TEST_CASE("vanishing ideal generators") {
    SECTION("q=2, a=1, b=2 instantiation") {
        IdealGens g = vanishing_gens(2, 1, 2);
        // char 2: minus signs collapse
        REQUIRE(g.f1 == Gpoly::monomial(g.ring, {0, 3, 1}, 1) +
                            Gpoly::monomial(g.ring, {0, 1, 2}, 1));
        REQUIRE(g.f2 == Gpoly::monomial(g.ring, {3, 0, 1}, 1) +
                            Gpoly::monomial(g.ring, {1, 0, 2}, 1));
        REQUIRE(g.f3 == Gpoly::monomial(g.ring, {2, 1, 0}, 1) +
                            Gpoly::monomial(g.ring, {1, 2, 0}, 1));
    }
    SECTION("generator degrees (qb+1, qb+1, q+1) at a = 1") {
        IdealGens g = vanishing_gens(2, 1, 2);
        REQUIRE(g.f1.homogeneous_degree().degree == 5);
        REQUIRE(g.f2.homogeneous_degree().degree == 5);
        REQUIRE(g.f3.homogeneous_degree().degree == 3);
    }
    SECTION("general degrees ((q-1)ab+a+b, qb+1, qa+1)") {
        IdealGens g = vanishing_gens(3, 2, 3);
        REQUIRE(g.f1.homogeneous_degree().degree == (3 - 1) * 2 * 3 + 2 + 3);
        REQUIRE(g.f2.homogeneous_degree().degree == 3 * 3 + 1);
        REQUIRE(g.f3.homogeneous_degree().degree == 3 * 2 + 1);
    }
    SECTION("every generator vanishes on the whole point set") {
        for (const auto& [q, a, b] :
             std::vector<std::array<int, 3>>{{2, 1, 2}, {3, 1, 5}, {3, 2, 3}, {5, 1, 7}}) {
            IdealGens g = vanishing_gens(q, a, b);
            PointSet pts = enumerate_points(g.ring->space, g.ring->field);
            for (const Gpoly* f : g.all())
                for (const auto& p : pts.points) {
                    CAPTURE(q, a, b, p);
                    REQUIRE(f->eval(p) == 0);
                }
        }
    }
    SECTION("gcd violation") {
        require_kind(ErrorKind::gcd_violation, [] { vanishing_gens(2, 2, 4); });
    }
}

TEST_CASE("resolution data") {
    SECTION("q=2, a=1, b=2: A1 = -x2 and A2 = x2 x3 + x1 x3") {
        ResolutionData r = resolution_data(2, 1, 2);
        const RingPtr& ring = r.gens.ring;
        REQUIRE(r.phi2[1][0] == Gpoly::monomial(ring, {0, 1, 0}, 1));  // -x2 in char 2
        REQUIRE(r.phi2[2][0] == Gpoly::monomial(ring, {0, 1, 1}, 1) +
                                    Gpoly::monomial(ring, {1, 0, 1}, 1));
        REQUIRE(r.phi2[0][0] == Gpoly::variable(ring, 0));
        REQUIRE(r.phi2[0][1].is_zero());
    }
    SECTION("shifts for q=5, a=1, b=2") {
        ResolutionData r = resolution_data(5, 1, 2);
        REQUIRE(r.lambda == std::array<int, 3>{11, 11, 6});
        REQUIRE(r.sigma == std::array<int, 2>{12, 16});
    }
    SECTION("at a=1 the (3,1) entry matches the one-parameter sum") {
        for (int q : {2, 3, 5})
            for (int b : {2, 3, 5}) {
                ResolutionData r = resolution_data(q, 1, b);
                const RingPtr& ring = r.gens.ring;
                Gpoly expect(ring);
                for (int i = 1; i <= b; ++i)
                    expect = expect + Gpoly::monomial(
                                          ring, {(i - 1) * (q - 1), (q - 1) * b - i * q + i, 1}, 1);
                REQUIRE(r.phi2[2][0] == expect);
            }
    }
    SECTION("off-diagonal entries divide exactly") {
        ResolutionData r = resolution_data(3, 1, 2);
        REQUIRE(r.phi2[1][1] * Gpoly::variable(r.gens.ring, 0) == r.gens.f3);
        REQUIRE(r.phi2[2][1] * Gpoly::variable(r.gens.ring, 0) == -r.gens.f2);
    }
}

TEST_CASE("resolution verification") {
    SECTION("all five checks pass across parameters") {
        for (const auto& [q, a, b] : std::vector<std::array<int, 3>>{
                 {2, 1, 2}, {5, 1, 7}, {3, 2, 3}, {4, 1, 3}, {5, 3, 5}}) {
            CAPTURE(q, a, b);
            VerificationReport rep = verify_resolution(resolution_data(q, a, b));
            REQUIRE(rep.checks.size() == 5);
            REQUIRE(rep.all_pass());
        }
    }
    SECTION("exact minor identities") {
        // the row {2,3} minor is +f1: forced by phi1.phi2 = 0, and distinct
        // from -f1 whenever the characteristic is odd
        ResolutionData r = resolution_data(5, 1, 2);
        Gpoly m23 = r.phi2[1][0] * r.phi2[2][1] - r.phi2[2][0] * r.phi2[1][1];
        Gpoly m13 = r.phi2[0][0] * r.phi2[2][1] - r.phi2[2][0] * r.phi2[0][1];
        Gpoly m12 = r.phi2[0][0] * r.phi2[1][1] - r.phi2[1][0] * r.phi2[0][1];
        REQUIRE(m23 == r.gens.f1);
        REQUIRE(m23 != -r.gens.f1);
        REQUIRE(m13 == -r.gens.f2);
        REQUIRE(m12 == r.gens.f3);
    }
    SECTION("mutated A1 breaks the complex") {
        ResolutionData r = resolution_data(2, 1, 2);
        // add a term of the right degree so only the identities can object
        r.phi2[1][0] = r.phi2[1][0] + Gpoly::variable(r.gens.ring, 1);
        VerificationReport rep = verify_resolution(r);
        REQUIRE_FALSE(rep.all_pass());
        bool complex_or_minors_failed = false;
        for (const auto& c : rep.checks)
            if ((c.name == "phi1_phi2_zero" || c.name == "minors_generate_ideal") && !c.pass)
                complex_or_minors_failed = true;
        REQUIRE(complex_or_minors_failed);
    }
}

TEST_CASE("ideal piece dimensions") {
    IdealGens g = vanishing_gens(2, 1, 2);
    SECTION("named values") {
        REQUIRE(ideal_piece_dim(g, 2) == 0);  // below the smallest generator degree
        REQUIRE(ideal_piece_dim(g, 3) == 1);  // f3 alone
        REQUIRE(ideal_piece_dim(g, 4) == 2);  // x1 f3, x2 f3 independent
    }
    SECTION("matches the evaluation kernel degreewise") {
        PointSet pts = enumerate_points(g.ring->space, g.ring->field);
        GenerationReport rep = check_generation(g, pts, 14);
        REQUIRE(rep.pass());
    }
}

TEST_CASE("generation check") {
    SECTION("q=3, a=1, b=3 up to d = 20") {
        IdealGens g = vanishing_gens(3, 1, 3);
        PointSet pts = enumerate_points(g.ring->space, g.ring->field);
        REQUIRE(check_generation(g, pts, 20).pass());
    }
    SECTION("dropping f2 first disagrees at degree qb + 1") {
        IdealGens g = vanishing_gens(2, 1, 5);
        g.f2 = Gpoly(g.ring);
        PointSet pts = enumerate_points(g.ring->space, g.ring->field);
        GenerationReport rep = check_generation(g, pts, 15);
        REQUIRE_FALSE(rep.pass());
        REQUIRE(rep.disagreeing_degrees.front() == 11);
    }
    SECTION("parallel and serial agree") {
        IdealGens g = vanishing_gens(3, 1, 2);
        PointSet pts = enumerate_points(g.ring->space, g.ring->field);
        GenerationReport par = check_generation(g, pts, 12, true);
        GenerationReport ser = check_generation(g, pts, 12, false);
        REQUIRE(par.disagreeing_degrees == ser.disagreeing_degrees);
    }
}
