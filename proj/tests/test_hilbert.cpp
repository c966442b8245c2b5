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
#include <map>

#include "wprm/hilbert.hpp"

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

TEST_CASE("series numerator") {
    SECTION("q=2, a=1, b=2: 1 - t^3 - 2t^5 + t^6 + t^7") {
        HilbertSeries s = series_numerator(2, 1, 2);
        REQUIRE(s.numerator ==
                std::map<int, long long>{{0, 1}, {3, -1}, {5, -2}, {6, 1}, {7, 1}});
        REQUIRE(s.denom_weights == std::vector<int>{1, 1, 2});
    }
    SECTION("q=5, a=1, b=5: exponents combine") {
        HilbertSeries s = series_numerator(5, 1, 5);
        REQUIRE(s.numerator ==
                std::map<int, long long>{{0, 1}, {6, -1}, {26, -2}, {27, 1}, {31, 1}});
    }
    SECTION("numerator vanishes to second order at t = 1") {
        for (int q : {2, 3, 4, 5, 7})
            for (const auto& [a, b] :
                 std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 7}, {2, 3}, {3, 5}}) {
                HilbertSeries s = series_numerator(q, a, b);
                CAPTURE(q, a, b);
                REQUIRE(s.eval_at_one() == 0);
                REQUIRE(s.divisible_by_one_minus_t(2));
            }
    }
    SECTION("gcd violation") {
        require_kind(ErrorKind::gcd_violation, [] { series_numerator(3, 2, 4); });
    }
}

TEST_CASE("series expansion") {
    SECTION("q=5, b=2: 1,2,4,6,9,12,15 at d = 0..6") {
        auto c = series_expand(series_numerator(5, 1, 2), 6);
        REQUIRE(c == std::vector<long long>{1, 2, 4, 6, 9, 12, 15});
    }
    SECTION("q=5, b=7: value 31 at d = 35") {
        auto c = series_expand(series_numerator(5, 1, 7), 35);
        REQUIRE(c[35] == 31);
    }
    SECTION("H(0) = 1 always") {
        for (int q : {2, 3, 4, 5})
            for (int b : {1, 2, 3, 7}) REQUIRE(series_expand(series_numerator(q, 1, b), 0)[0] == 1);
    }
}

TEST_CASE("p(t) coefficients") {
    SECTION("q=2, b=2: (1,2,3,3,3,1)") {
        REQUIRE(p_coefficients(2, 2) == std::vector<long long>{1, 2, 3, 3, 3, 1});
    }
    SECTION("leading coefficient is 1") {
        for (int q : {2, 3, 5})
            for (int b = 1; b <= 7; ++b) REQUIRE(p_coefficients(q, b).back() == 1);
    }
    SECTION("H(d) equals the sum of p-coefficients along the b-ladder") {
        for (int q : {2, 3, 4, 5})
            for (int b = 2; b <= 7; ++b) {
                auto p = p_coefficients(q, b);
                auto h = series_expand(series_numerator(q, 1, b), 3 * q * b);
                for (int d = 0; d <= 3 * q * b; ++d) {
                    long long sum = 0;
                    for (int i = 0; d - i * b >= 0; ++i) {
                        const int j = d - i * b;
                        if (j < int(p.size())) sum += p[j];
                    }
                    CAPTURE(q, b, d);
                    REQUIRE(h[d] == sum);
                }
            }
    }
}

TEST_CASE("closed-form Hilbert function") {
    SECTION("table values") {
        REQUIRE(hf_closed(5, 2, 6) == 15);
        REQUIRE(hf_closed(5, 5, 25) == 31);
        REQUIRE(hf_closed(5, 2, 11) == 28);
        REQUIRE(hf_closed(2, 5, 10) == 7);
    }
    SECTION("unsupported regime q > b = 1") {
        require_kind(ErrorKind::unsupported_regime, [] { hf_closed(3, 1, 5); });
        REQUIRE(hf_closed(2, 2, 5) == 6);  // q = b is the q <= b branch
    }
}

TEST_CASE("oracle Hilbert function") {
    SECTION("named values") {
        {
            RingPtr ring = Ring::make(WeightedSpace({1, 1, 2}), Gf(5));
            PointSet pts = enumerate_points(ring->space, ring->field);
            REQUIRE(hf_oracle(*ring, std::span<const Coords>(pts.points), 4) == 9);
        }
        {
            RingPtr ring = Ring::make(WeightedSpace({1, 1, 7}), Gf(2));
            PointSet pts = enumerate_points(ring->space, ring->field);
            REQUIRE(hf_oracle(*ring, std::span<const Coords>(pts.points), 14) == 7);
        }
    }
    SECTION("triple agreement over the full grid") {
        // closed form = series = evaluation rank for q in {2..5}, b in
        // {2..7}, d <= 3qb; two-way (series = rank) for b = 1
        for (int q : {2, 3, 4, 5})
            for (int b = 1; b <= 7; ++b) {
                RingPtr ring = Ring::make(WeightedSpace({1, 1, b}), Gf(q));
                PointSet pts = enumerate_points(ring->space, ring->field);
                auto h = series_expand(series_numerator(q, 1, b), 3 * q * b);
                for (int d = 0; d <= 3 * q * b; ++d) {
                    CAPTURE(q, b, d);
                    const int oracle = hf_oracle(*ring, std::span<const Coords>(pts.points), d);
                    REQUIRE(oracle == h[d]);
                    if (!(q > b && b == 1)) REQUIRE(hf_closed(q, b, d) == h[d]);
                }
            }
    }
    SECTION("larger extension fields: series = rank for q = 8, 9") {
        for (const auto& [q, b] : std::vector<std::pair<int, int>>{{8, 3}, {9, 2}}) {
            RingPtr ring = Ring::make(WeightedSpace({1, 1, b}), Gf(q));
            PointSet pts = enumerate_points(ring->space, ring->field);
            REQUIRE(pts.size() == q * q + q + 1);
            auto h = series_expand(series_numerator(q, 1, b), 2 * q * b);
            for (int d = 0; d <= 2 * q * b; ++d) {
                CAPTURE(q, b, d);
                REQUIRE(hf_oracle(*ring, std::span<const Coords>(pts.points), d) == h[d]);
                REQUIRE(hf_closed(q, b, d) == h[d]);
            }
        }
    }
    SECTION("H is bounded by dim S_d and |Y|, H(0) = 1") {
        RingPtr ring = Ring::make(WeightedSpace({1, 1, 3}), Gf(3));
        PointSet pts = enumerate_points(ring->space, ring->field);
        for (int d = 0; d <= 25; ++d) {
            const int h = hf_oracle(*ring, std::span<const Coords>(pts.points), d);
            REQUIRE(h <= dim_graded_piece(ring->space, d));
            REQUIRE(h <= pts.size());
        }
        REQUIRE(hf_oracle(*ring, std::span<const Coords>(pts.points), 0) == 1);
    }
}

TEST_CASE("regularity set") {
    SECTION("first elements") {
        REQUIRE(regularity_first(5, 2) == 14);
        REQUIRE(regularity_first(2, 5) == 10);
        REQUIRE(regularity_first(5, 7) == 35);
    }
    SECTION("membership matches the oracle hitting |Y|") {
        for (const auto& [q, b] : std::vector<std::pair<int, int>>{{2, 2}, {3, 4}, {4, 3}}) {
            RingPtr ring = Ring::make(WeightedSpace({1, 1, b}), Gf(q));
            PointSet pts = enumerate_points(ring->space, ring->field);
            for (int d = 0; d <= 3 * q * b; ++d) {
                CAPTURE(q, b, d);
                REQUIRE(reg_contains(q, b, d) ==
                        (hf_oracle(*ring, std::span<const Coords>(pts.points), d) ==
                         q * q + q + 1));
            }
        }
    }
}

TEST_CASE("a-invariant and quasi-polynomial") {
    SECTION("q=5, b=2: a-invariant 12, agreement beyond") {
        REQUIRE(a_invariant(5, 1, 2) == 12);
        auto h = series_expand(series_numerator(5, 1, 2), 40);
        REQUIRE(h[12] == 30);
        REQUIRE(quasi_poly_eval(5, 2, 12) == 31);
        for (int d = 13; d <= 40; ++d) REQUIRE(h[d] == quasi_poly_eval(5, 2, d));
    }
    SECTION("q=2, b=2: a-invariant 3") {
        REQUIRE(a_invariant(2, 1, 2) == 3);
        // verify the max-disagreement characterization against the oracle
        RingPtr ring = Ring::make(WeightedSpace({1, 1, 2}), Gf(2));
        PointSet pts = enumerate_points(ring->space, ring->field);
        int last = -1;
        for (int d = 0; d <= 12; ++d)
            if (hf_oracle(*ring, std::span<const Coords>(pts.points), d) !=
                quasi_poly_eval(2, 2, d))
                last = d;
        REQUIRE(last == 3);
    }
    SECTION("named quasi-polynomial value") { REQUIRE(quasi_poly_eval(5, 2, 14) == 31); }
    SECTION("general (a, b) a-invariant via the numerator degree") {
        REQUIRE(a_invariant(3, 2, 3) == series_numerator(3, 2, 3).max_degree() - 6);
    }
    SECTION("H is not eventually monotone") {
        auto h = series_expand(series_numerator(5, 1, 2), 16);
        REQUIRE(h[14] == 31);
        REQUIRE(h[15] == 30);
        REQUIRE(h[16] == 31);
    }
}
