/* Copyright 2026 The liegraph authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liegraph/hall.hpp"
#include "oracles.hpp"

using namespace liegraph;

TEST_CASE("witt dimensions") {
    CHECK(witt_dimension(2, 1) == 2);
    CHECK(witt_dimension(2, 2) == 1);
    CHECK(witt_dimension(2, 3) == 2);
    CHECK(witt_dimension(3, 3) == 8);
    CHECK(witt_dimension(4, 4) == 60);
    CHECK(witt_dimension(10, 2) == 45);
}

TEST_CASE("basis sizes match the dimension formula") {
    for (int n = 1; n <= 4; ++n) {
        HallSet hs(n, 6);
        for (int d = 1; d <= 6; ++d)
            CHECK(hs.count(d) == witt_dimension(n, d));
    }
}

TEST_CASE("basis sizes match a full bracket-tree span") {
    for (int n = 2; n <= 3; ++n) {
        HallSet hs(n, 4);
        for (int d = 1; d <= 4; ++d)
            CHECK(hs.count(d) == oracles::brute_force_free_rank(n, d));
    }
}

TEST_CASE("small free bases by hand") {
    HallSet two(2, 3);
    CHECK(two.count(1) == 2);
    CHECK(two.count(2) == 1);
    CHECK(two.count(3) == 2);
    std::vector<std::string> names{"x", "y"};
    CHECK(two.bracket_label(2, 0, names) == "[x,y]");
    CHECK(two.bracket_label(3, 0, names) == "[x,[x,y]]");
    CHECK(two.bracket_label(3, 1, names) == "[[x,y],y]");
}

TEST_CASE("envelope expansions lead with their own word") {
    HallSet hs(3, 4);
    for (int d = 1; d <= 4; ++d) {
        for (int i = 0; i < hs.count(d); ++i) {
            const Poly& env = hs.envelope(d, i);
            REQUIRE_FALSE(env.empty());
            CHECK(env.begin()->first == hs.words(d)[i].word);
            CHECK(env.begin()->second == 1);
        }
    }
}

TEST_CASE("coordinate extraction round-trips random combinations") {
    HallSet hs(3, 4);
    std::mt19937 rng(715);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int d = 2; d <= 4; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
            VecQ x = VecQ::Zero(hs.count(d));
            Poly p;
            for (int i = 0; i < hs.count(d); ++i) {
                x(i) = coef(rng);
                poly_axpy(p, x(i), hs.envelope(d, i));
            }
            CHECK(hs.to_basis(d, p) == x);
        }
    }
}

TEST_CASE("non-Lie input is rejected") {
    HallSet hs(2, 2);
    // the symmetric tensor xy + yx is not a Lie element
    Poly p{{Word{0, 1}, 1}, {Word{1, 0}, 1}};
    CHECK_THROWS_AS(hs.to_basis(2, p), std::logic_error);
}

TEST_CASE("free bracket is antisymmetric and satisfies Jacobi in the envelope") {
    HallSet hs(3, 3);
    const Poly x = hs.envelope(1, 0), y = hs.envelope(1, 1), z = hs.envelope(1, 2);
    Poly xy = bracket_poly(x, y);
    Poly yx = bracket_poly(y, x);
    poly_axpy(xy, 1, yx);
    CHECK(xy.empty());

    Poly j = bracket_poly(bracket_poly(x, y), z);
    poly_axpy(j, 1, bracket_poly(bracket_poly(y, z), x));
    poly_axpy(j, 1, bracket_poly(bracket_poly(z, x), y));
    CHECK(j.empty());
}
