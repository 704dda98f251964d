// Copyright 2026 The gflowc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gflowc/gf2.hpp"
#include "gflowc/graph.hpp"
#include "support/fixtures.hpp"

using namespace gflowc;
namespace fx = gflowc::fixtures;

TEST_CASE("validation reports structural problems") {
    CHECK(validate_open_graph(fx::g_line().description()).empty());

    GraphDescription bad_input{{1}, {}, {2}, {1}, {}};
    auto problems = validate_open_graph(bad_input);
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("inputs") != std::string::npos);

    GraphDescription self_loop{{1, 2}, {{1, 1}}, {1}, {2}, {}};
    problems = validate_open_graph(self_loop);
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("self-loop") != std::string::npos);

    GraphDescription dangling{{1, 2}, {{1, 3}}, {1}, {2}, {}};
    CHECK(!validate_open_graph(dangling).empty());
    CHECK_THROWS_AS(OpenGraph::from_description(dangling), std::invalid_argument);
}

TEST_CASE("vertex sets behave as an F2 vector space") {
    VertexSet a = VertexSet::of(6, {0, 2, 4});
    VertexSet b = VertexSet::of(6, {2, 3});
    CHECK((a ^ b) == VertexSet::of(6, {0, 3, 4}));
    CHECK((a ^ a).empty());
    CHECK((a ^ b) == (b ^ a));
    CHECK(a.minus(b) == VertexSet::of(6, {0, 4}));
    CHECK(a.first() == 0);
    CHECK_THROWS_AS(a ^ VertexSet::of(5, {1}), std::invalid_argument);
}

TEST_CASE("odd neighborhood on the six-vertex fixture") {
    OpenGraph g = fx::g_fig2();
    auto set = [&](std::initializer_list<int> ids) {
        VertexSet s(g.size());
        for (int id : ids) s.add(g.index_of(id));
        return s;
    };
    CHECK(odd_neighborhood(g, set({fx::kO1, fx::kO3})) == set({fx::kI1}));
    CHECK(odd_neighborhood(g, set({fx::kO1, fx::kO2, fx::kO3})) == set({fx::kI2}));
    CHECK(odd_neighborhood(g, VertexSet(g.size())).empty());
    CHECK_THROWS_AS(odd_neighborhood(g, VertexSet(4)), std::invalid_argument);
}

TEST_CASE("odd neighborhood agrees with adjacency-matrix accumulation") {
    // Independent route: count edges into the set per vertex.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        GraphDescription d;
        for (int v = 0; v < n; ++v) d.vertices.push_back(v);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) d.edges.emplace_back(u, v);
        d.inputs = {0};
        d.outputs = {n - 1};
        OpenGraph g = OpenGraph::from_description(d);

        std::uint64_t mask = rng() % (1ULL << n);
        VertexSet s(g.size());
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.add(v);

        VertexSet expected(g.size());
        for (int v = 0; v < n; ++v) {
            int degree_into = 0;
            for (int u : s.members()) degree_into += g.adjacent(v, u) ? 1 : 0;
            if (degree_into % 2) expected.add(v);
        }
        CHECK(odd_neighborhood(g, s) == expected);

        // Odd(A ^ B) = Odd(A) ^ Odd(B).
        std::uint64_t mask_b = rng() % (1ULL << n);
        VertexSet t(g.size());
        for (int v = 0; v < n; ++v)
            if ((mask_b >> v) & 1) t.add(v);
        CHECK(odd_neighborhood(g, s ^ t) == (odd_neighborhood(g, s) ^ odd_neighborhood(g, t)));
    }
}

TEST_CASE("basis recognition") {
    OpenGraph g = fx::g_fig2();
    auto set = [&](std::initializer_list<int> ids) {
        VertexSet s(g.size());
        for (int id : ids) s.add(g.index_of(id));
        return s;
    };
    VertexSet outputs = g.outputs();
    std::vector<VertexSet> caption_g{set({fx::kO1, fx::kO3}), set({fx::kO1, fx::kO2, fx::kO3}),
                                     set({fx::kO1, fx::kO2})};
    CHECK(is_basis(caption_g, outputs));
    CHECK(is_basis({}, VertexSet(g.size())));
    VertexSet two = set({fx::kO1, fx::kO2});
    CHECK_FALSE(is_basis({set({fx::kO1}), set({fx::kO1})}, two));
}

TEST_CASE("gf2 solving is deterministic and certifies inconsistency") {
    // Identity system.
    Gf2System id;
    for (int r = 0; r < 3; ++r) {
        VertexSet row(3);
        row.add(r);
        id.rows.push_back(row);
        id.rhs.push_back(r == 0);
    }
    auto sol = solve_gf2(id);
    REQUIRE(sol.has_value());
    CHECK(*sol == VertexSet::of(3, {0}));

    // Contradictory rows 10 / 10 with rhs (1, 0).
    Gf2System bad;
    bad.rows.push_back(VertexSet::of(2, {0}));
    bad.rows.push_back(VertexSet::of(2, {0}));
    bad.rhs = {true, false};
    CHECK(!solve_gf2(bad).has_value());

    // Underdetermined: free variables stay zero.
    Gf2System under;
    under.rows.push_back(VertexSet::of(3, {0, 1, 2}));
    under.rhs = {true};
    sol = solve_gf2(under);
    REQUIRE(sol.has_value());
    CHECK(*sol == VertexSet::of(3, {0}));
}

TEST_CASE("solutions satisfy their systems on random instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t cols = 1 + rng() % 8, rows = 1 + rng() % 8;
        Gf2System sys;
        for (std::size_t r = 0; r < rows; ++r) {
            VertexSet row(cols);
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 2) row.add(static_cast<int>(c));
            sys.rows.push_back(row);
            sys.rhs.push_back(rng() % 2);
        }
        auto sol = solve_gf2(sys);
        if (!sol) continue;
        for (std::size_t r = 0; r < rows; ++r) {
            bool lhs = (sys.rows[r] & *sol).count() % 2;
            CHECK(lhs == sys.rhs[r]);
        }
    }
}

TEST_CASE("the six-vertex fixture's adjacency is forced by its gflow values") {
    // Solve for the three output adjacency columns from the constraints
    // Odd(g(i_k)) restricted to the inputs = {i_k}; the solution must be
    // unique and reproduce the fixture's edges.
    // Unknowns: 9 bits, column-major (o, i).
    auto bit = [](int o, int i) { return o * 3 + i; };
    std::vector<std::vector<int>> g_sets{{0, 2}, {0, 1, 2}, {0, 1}};  // o-indices per input
    Gf2System sys;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) {
            VertexSet row(9);
            for (int o : g_sets[static_cast<std::size_t>(k)]) row.add(bit(o, i));
            sys.rows.push_back(row);
            sys.rhs.push_back(i == k);
        }
    auto sol = solve_gf2(sys);
    REQUIRE(sol.has_value());
    // c1 = (1,1,1), c2 = (1,1,0), c3 = (0,1,1).
    std::vector<std::vector<int>> expected{{1, 1, 1}, {1, 1, 0}, {0, 1, 1}};
    OpenGraph fig2 = fx::g_fig2();
    for (int o = 0; o < 3; ++o)
        for (int i = 0; i < 3; ++i) {
            CHECK(sol->contains(bit(o, i)) == (expected[static_cast<std::size_t>(o)]
                                                       [static_cast<std::size_t>(i)] == 1));
            bool edge = fig2.adjacent(fig2.index_of(fx::kI1 + i), fig2.index_of(fx::kO1 + o));
            CHECK(edge == sol->contains(bit(o, i)));
        }
    // Uniqueness: the homogeneous system only has the zero solution.
    Gf2System hom = sys;
    hom.rhs.assign(hom.rhs.size(), false);
    CHECK(gf2_rank(hom.rows) == 9);
}
