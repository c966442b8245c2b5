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

#include "wprm/field.hpp"

using wprm::Error;
using wprm::ErrorKind;
using wprm::Gf;

namespace {
void require_kind(ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
        FAIL("expected an error of kind " << wprm::kind_name(kind));
    } catch (const Error& e) {
        REQUIRE(e.kind() == kind);
    }
}
}  // namespace

TEST_CASE("field construction") {
    SECTION("prime field") {
        Gf F(5);
        REQUIRE(F.p() == 5);
        REQUIRE(F.k() == 1);
        REQUIRE(F.q() == 5);
        REQUIRE(F.modulus().empty());
    }
    SECTION("built-in modulus for GF(4) is t^2 + t + 1") {
        Gf F(4);
        REQUIRE(F.p() == 2);
        REQUIRE(F.k() == 2);
        REQUIRE(F.modulus() == std::vector<int>{1, 1, 1});
    }
    SECTION("six is not a prime power") {
        require_kind(ErrorKind::not_prime_power, [] { Gf F(6); });
    }
    SECTION("reducible modulus is rejected") {
        // t^2 + 1 = (t + 1)^2 over GF(2)
        require_kind(ErrorKind::reducible_modulus, [] { Gf F(4, {1, 0, 1}); });
        // wrong degree for k = 2
        require_kind(ErrorKind::invalid_argument, [] { Gf F(4, {0, 1}); });
    }
    SECTION("no built-in modulus outside the table") {
        require_kind(ErrorKind::no_builtin_modulus, [] { Gf F(49); });
        Gf F(49, {3, 1, 1});  // t^2 + t + 3 has no roots mod 7
        REQUIRE(F.q() == 49);
    }
    SECTION("all built-in moduli are accepted") {
        for (int q : {4, 8, 9, 16, 25, 27}) REQUIRE(Gf(q).q() == q);
    }
    SECTION("q below 2") {
        require_kind(ErrorKind::invalid_argument, [] { Gf F(1); });
    }
}

TEST_CASE("field arithmetic examples") {
    SECTION("GF(5): inv(3) = 2") {
        Gf F(5);
        REQUIRE(F.inv(3) == 2);
        REQUIRE(F.mul(3, 2) == 1);
    }
    SECTION("GF(2): 1 + 1 = 0") {
        Gf F(2);
        REQUIRE(F.add(1, 1) == 0);
    }
    SECTION("GF(4): alpha * (alpha + 1) = 1") {
        Gf F(4);
        const int alpha = 2, alpha_plus_1 = 3;
        REQUIRE(F.mul(alpha, alpha_plus_1) == 1);
        REQUIRE(F.mul(alpha, alpha) == alpha_plus_1);  // alpha^2 = alpha + 1
    }
    SECTION("division by zero") {
        Gf F(5);
        require_kind(ErrorKind::division_by_zero, [&] { F.inv(0); });
        require_kind(ErrorKind::division_by_zero, [&] { F.div(3, 0); });
        require_kind(ErrorKind::division_by_zero, [&] { F.pow(0, -1); });
    }
    SECTION("pow conventions") {
        Gf F(5);
        REQUIRE(F.pow(0, 0) == 1);
        REQUIRE(F.pow(2, -1) == 3);  // 2 * 3 = 6 = 1
        REQUIRE(F.pow(2, -2) == F.mul(3, 3));
        REQUIRE(F.pow(0, 7) == 0);
    }
    SECTION("from_int lifts through the prime subfield") {
        Gf F4(4);
        REQUIRE(F4.from_int(-1) == 1);  // char 2
        REQUIRE(F4.from_int(2) == 0);
        Gf F5(5);
        REQUIRE(F5.from_int(-1) == 4);
        REQUIRE(F5.from_int(17) == 2);
    }
}

TEST_CASE("field element enumeration") {
    REQUIRE(Gf(2).elements() == std::vector<int>{0, 1});
    REQUIRE(Gf(5).elements() == std::vector<int>{0, 1, 2, 3, 4});
    REQUIRE(Gf(4).elements() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("field axioms hold exhaustively for q <= 27") {
    const int q = GENERATE(2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27);
    CAPTURE(q);
    Gf F(q);
    for (int a = 0; a < q; ++a) {
        REQUIRE(F.add(a, 0) == a);
        REQUIRE(F.mul(a, 1) == a);
        REQUIRE(F.add(a, F.neg(a)) == 0);
        if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
        REQUIRE(F.pow(a, q) == a);               // Frobenius / Fermat
        if (a != 0) REQUIRE(F.pow(a, q - 1) == 1);
        for (int b = 0; b < q; ++b) {
            REQUIRE(F.add(a, b) == F.add(b, a));
            REQUIRE(F.mul(a, b) == F.mul(b, a));
            REQUIRE(F.sub(a, b) == F.add(a, F.neg(b)));
        }
    }
    // associativity and distributivity on all triples
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
}
