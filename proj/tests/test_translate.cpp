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

#include <numbers>
#include <set>

#include "gflowc/corpus.hpp"
#include "gflowc/sim.hpp"
#include "gflowc/translate.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace gflowc;
namespace fx = gflowc::fixtures;
using test_support::circuit_effective_map;
using std::numbers::pi;

namespace {

void check_oracle_equivalence(const MeasurementPattern& p, const Circuit& c, double tol = 1e-9) {
    DenseMap pattern = pattern_map(p);
    DenseMap effective = circuit_effective_map(c, p.graph);
    auto match = equal_up_to_phase(pattern.mat, effective.mat, tol);
    REQUIRE(match.has_value());
    double expected_scale = std::pow(std::sqrt(0.5), p.graph.non_outputs().count());
    CHECK(std::abs(match->scale - expected_scale) < 1e-10);
}

}  // namespace

TEST_CASE("translating the line gives a single J-gate") {
    MeasurementPattern p = fx::p_line(pi / 4);
    Circuit c = translate_gflow_pattern(p);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == GateKind::J);
    CHECK(c.gates[0].angle == pi / 4);
    CHECK(c.wires == std::vector<std::vector<int>>{{1, 2}});
    check_oracle_equivalence(p, c);
}

TEST_CASE("translating the three-line stacks two J-gates on one wire") {
    MeasurementPattern p = fx::p_line3(pi / 7, 2 * pi / 7);
    Circuit c = translate_gflow_pattern(p);
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0].kind == GateKind::J);
    CHECK(c.gates[0].angle == pi / 7);
    CHECK(c.gates[1].angle == 2 * pi / 7);
    check_oracle_equivalence(p, c);
}

TEST_CASE("the six-vertex fixture pins a six-gate circuit") {
    MeasurementPattern p = fx::p_fig2();
    Circuit c = translate_gflow_pattern(p);
    CHECK(c.wires == std::vector<std::vector<int>>{{fx::kI1, fx::kO1}, {fx::kI2, fx::kO2},
                                                   {fx::kI3, fx::kO3}});
    REQUIRE(c.gates.size() == 6);
    // Time order: the layer is emitted in reverse matching order, each J
    // followed by its cross CZ, then the conjugating CNOT.
    CHECK(c.gates[0] == Gate::j(2, 3 * pi / 4, fx::kI3));
    CHECK(c.gates[1] == Gate::cz(2, 1));
    CHECK(c.gates[2] == Gate::j(1, pi / 2, fx::kI2));
    CHECK(c.gates[3] == Gate::cz(1, 0));
    CHECK(c.gates[4] == Gate::j(0, pi / 4, fx::kI1));
    CHECK(c.gates[5] == Gate::cx(0, 2));
    check_oracle_equivalence(p, c);
}

TEST_CASE("graph sequence of the six-vertex fixture") {
    OpenGraph g = fx::g_fig2();
    auto gmax = find_max_delayed_gflow(g);
    REQUIRE(gmax.has_value());
    MatchingGflow mg = build_matching_gflow(g, *gmax);
    GraphSequence seq = build_graph_sequence(g, mg);

    REQUIRE(seq.graphs.size() == 4);
    const OpenGraph& gn = seq.graphs.back();
    std::vector<std::pair<int, int>> expected_edges{{fx::kI1, fx::kO1}, {fx::kI1, fx::kO2},
                                                    {fx::kI2, fx::kO2}, {fx::kI2, fx::kO3},
                                                    {fx::kI3, fx::kO3}};
    std::vector<std::pair<int, int>> got;
    for (auto [u, v] : gn.edges()) {
        int a = gn.id_of(u), b = gn.id_of(v);
        got.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(got.begin(), got.end());
    std::sort(expected_edges.begin(), expected_edges.end());
    CHECK(got == expected_edges);

    // Only the first processed vertex needs a conjugator: CX from o1 to o3.
    REQUIRE(seq.output_gates.size() == 1);
    CHECK(seq.output_gates[0].kind == GateKind::CX);
    CHECK(g.id_of(seq.output_gates[0].a) == fx::kO1);
    CHECK(g.id_of(seq.output_gates[0].b) == fx::kO3);
}

TEST_CASE("graph sequence is trivial on the line") {
    OpenGraph g = fx::g_line();
    auto gmax = find_max_delayed_gflow(g);
    MatchingGflow mg = build_matching_gflow(g, *gmax);
    GraphSequence seq = build_graph_sequence(g, mg);
    CHECK(seq.graphs.front() == seq.graphs.back());
    CHECK(seq.output_gates.empty());
}

TEST_CASE("output-output edges leave the graph and enter the output gates") {
    // 1 - 2 plus an edge between outputs 2 and 3.
    OpenGraph g = OpenGraph::from_description(
        {{1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {2, 3}, {}});
    auto gmax = find_max_delayed_gflow(g);
    REQUIRE(gmax.has_value());
    MatchingGflow mg = build_matching_gflow(g, *gmax);
    GraphSequence seq = build_graph_sequence(g, mg);
    CHECK(!seq.graphs.front().adjacent(g.index_of(2), g.index_of(3)));
    REQUIRE(!seq.output_gates.empty());
    CHECK(seq.output_gates.back().kind == GateKind::CZ);

    MeasurementPattern p = make_pattern(g, {{1, pi / 5}});
    check_oracle_equivalence(p, translate_gflow_pattern(p));
}

TEST_CASE("all-output graphs translate to output-local CZ-gates only") {
    OpenGraph g = OpenGraph::from_description(
        {{1, 2, 3}, {{1, 2}, {2, 3}}, {1, 2, 3}, {1, 2, 3}, {}});
    MeasurementPattern p = make_pattern(g, {});
    Circuit c = translate_gflow_pattern(p);
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0].kind == GateKind::CZ);
    CHECK(c.gates[1].kind == GateKind::CZ);
    check_oracle_equivalence(p, c);
}

TEST_CASE("oracle equivalence over a seeded corpus") {
    auto corpus = corpus_with_gflow(999, 60, CorpusOptions{10, 4, 3, 0.3, 0.7, 7});
    for (const auto& p : corpus) check_oracle_equivalence(p, translate_gflow_pattern(p));
}

TEST_CASE("star pattern transformation for flow on the fixtures") {
    MeasurementPattern p2 = fx::p_line(1.2);
    auto f2 = find_flow(p2.graph);
    REQUIRE(f2.has_value());
    Circuit c2 = spt_flow(p2, *f2);
    REQUIRE(c2.gates.size() == 1);
    CHECK(c2.gates[0].kind == GateKind::J);
    check_oracle_equivalence(p2, c2);

    MeasurementPattern p3 = fx::p_line3(0.3, 0.9);
    auto f3 = find_flow(p3.graph);
    Circuit c3 = spt_flow(p3, *f3);
    REQUIRE(c3.gates.size() == 2);
    CHECK(c3.gates[0].angle == 0.3);
    check_oracle_equivalence(p3, c3);
}

TEST_CASE("spt places the cross CZ between the crossing J-gates") {
    // Two paths 1 -> 2 and 3 -> 4 with a cross edge {1, 4}.
    OpenGraph g = OpenGraph::from_description(
        {{1, 2, 3, 4}, {{1, 2}, {3, 4}, {1, 4}}, {1, 3}, {2, 4}, {}});
    MeasurementPattern p = make_pattern(g, {{1, pi / 3}, {3, pi / 5}});
    auto f = find_flow(g);
    REQUIRE(f.has_value());
    Circuit c = spt_flow(p, *f);
    check_oracle_equivalence(p, c);
    // The CZ must act after J(alpha_3) and before J(alpha_1).
    std::size_t cz_at = 99, j1_at = 99, j3_at = 99;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (c.gates[i].kind == GateKind::CZ) cz_at = i;
        if (c.gates[i].kind == GateKind::J && c.gates[i].vertex_id == 1) j1_at = i;
        if (c.gates[i].kind == GateKind::J && c.gates[i].vertex_id == 3) j3_at = i;
    }
    CHECK(j3_at < cz_at);
    CHECK(cz_at < j1_at);
}

TEST_CASE("spt for flow and the layer translation agree on flow graphs") {
    auto corpus = corpus_with_gflow(555, 40, CorpusOptions{9, 4, 3, 0.3, 0.7, 7});
    int flow_cases = 0;
    for (const auto& p : corpus) {
        auto f = find_flow(p.graph);
        if (!f) continue;
        ++flow_cases;
        check_oracle_equivalence(p, spt_flow(p, *f));
        check_oracle_equivalence(p, translate_gflow_pattern(p));
    }
    CHECK(flow_cases > 5);
}

TEST_CASE("position order of a flow circuit mirrors the flow order") {
    auto corpus = corpus_with_gflow(321, 30, CorpusOptions{8, 4, 3, 0.3, 0.7, 7});
    for (const auto& p : corpus) {
        auto f = find_flow(p.graph);
        if (!f) continue;
        const OpenGraph& g = p.graph;
        std::size_t n = g.size();
        // Generators are identical by definition; compare transitive
        // closures of (u before f(u), u before N(f(u))\{u}) built two ways.
        std::vector<std::vector<bool>> from_flow(n, std::vector<bool>(n, false));
        for (std::size_t u = 0; u < n; ++u) {
            int fu = f->f[u];
            if (fu < 0) continue;
            from_flow[u][static_cast<std::size_t>(fu)] = true;
            for (int v : g.neighbors(fu).members())
                if (v != static_cast<int>(u)) from_flow[u][static_cast<std::size_t>(v)] = true;
        }
        // Path-cover route: arcs u -> v in a path, or u -> w with w ~ v.
        std::vector<std::vector<bool>> from_paths(n, std::vector<bool>(n, false));
        for (std::size_t u = 0; u < n; ++u) {
            int fu = f->f[u];
            if (fu < 0) continue;
            from_paths[u][static_cast<std::size_t>(fu)] = true;  // (u -> v) in a path
            for (std::size_t v = 0; v < n; ++v)
                if (v != u && g.adjacent(fu, static_cast<int>(v)))
                    from_paths[u][v] = true;  // (u -> w) with w in N(v) \ {u}
        }
        for (auto* rel : {&from_flow, &from_paths})
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if ((*rel)[i][k] && (*rel)[k][j]) (*rel)[i][j] = true;
        CHECK(from_flow == from_paths);
        for (std::size_t v = 0; v < n; ++v) CHECK_FALSE(from_paths[v][v]);
    }
}

TEST_CASE("reverse transformation rebuilds the line from one J-gate") {
    Circuit c;
    c.wires = {{0, 1}};
    c.gates = {Gate::j(0, pi / 4)};
    PatternWithFlow pw = circuit_to_pattern(c);
    CHECK(pw.pattern.graph.size() == 2);
    CHECK(pw.pattern.graph.edge_count() == 1);
    CHECK(pw.pattern.graph.inputs().count() == 1);
    CHECK(verify_flow(pw.pattern.graph, pw.flow).empty());
    CHECK(pw.pattern.angles[0] == pi / 4);
    DenseMap m = pattern_map(pw.pattern);
    CHECK(max_abs_diff(m.mat, (j_matrix(pi / 4) / std::sqrt(2.0)).eval()) < 1e-12);
}

TEST_CASE("reverse transformation of two J-gates and an output CZ") {
    Circuit c;
    c.wires = {{0, 1}, {2, 3}};
    c.gates = {Gate::j(0, 0.4), Gate::j(1, 1.3), Gate::cz(0, 1)};
    PatternWithFlow pw = circuit_to_pattern(c);
    CHECK(pw.pattern.graph.size() == 4);
    CHECK(pw.pattern.graph.edge_count() == 3);  // two path edges + one output edge
    CHECK(verify_flow(pw.pattern.graph, pw.flow).empty());
    DenseMap m = pattern_map(pw.pattern);
    DenseMap eff = circuit_effective_map(c, pw.pattern.graph);
    // Vertex ids assigned wire-major match the circuit's wires directly.
    auto match = equal_up_to_phase(m.mat, eff.mat, 1e-12);
    REQUIRE(match.has_value());
}

TEST_CASE("round trip through the reverse transformation is a fixed point") {
    auto corpus = corpus_with_gflow(808, 30, CorpusOptions{8, 4, 3, 0.3, 0.7, 7});
    int flow_cases = 0;
    for (const auto& p : corpus) {
        auto f = find_flow(p.graph);
        if (!f) continue;
        ++flow_cases;
        Circuit c = spt_flow(p, *f);
        PatternWithFlow pw = circuit_to_pattern(c);
        Circuit again = spt_flow(pw.pattern, pw.flow);
        REQUIRE(again.gates.size() == c.gates.size());
        for (std::size_t i = 0; i < c.gates.size(); ++i) {
            CHECK(c.gates[i].kind == again.gates[i].kind);
            CHECK(c.gates[i].wire == again.gates[i].wire);
            CHECK(c.gates[i].angle == again.gates[i].angle);
            CHECK(c.gates[i].wire_a == again.gates[i].wire_a);
            CHECK(c.gates[i].wire_b == again.gates[i].wire_b);
        }
    }
    CHECK(flow_cases > 5);
}

TEST_CASE("rejects unsupported gates in the reverse transformation") {
    Circuit c;
    c.wires = {{0, 1}, {2, 3}};
    c.gates = {Gate::cx(0, 1)};
    CHECK_THROWS_AS(circuit_to_pattern(c), std::invalid_argument);
}

TEST_CASE("parallelized six-vertex circuit") {
    MeasurementPattern p = fx::p_fig2();
    Circuit c = translate_gflow_pattern(p);
    LayeredCircuit layered = parallelize_j(c);

    REQUIRE(layered.blocks.size() == 2);  // depth 1
    CHECK(layered.blocks[0].j_layer.size() == 3);
    REQUIRE(layered.blocks[0].cliffords.size() == 2);
    CHECK(layered.blocks[0].cliffords[0] == Gate::cx(2, 1));
    CHECK(layered.blocks[0].cliffords[1] == Gate::cx(1, 0));
    CHECK(layered.blocks[1].j_layer.empty());
    REQUIRE(layered.blocks[1].cliffords.size() == 1);
    CHECK(layered.blocks[1].cliffords[0] == Gate::cx(0, 2));

    Matrix before = circuit_unitary(c).mat;
    Matrix after = circuit_unitary(layered.flatten()).mat;
    CHECK(max_abs_diff(before, after) < 1e-12);
}

TEST_CASE("single J blocks pass through parallelization unchanged") {
    MeasurementPattern p = fx::p_line(0.7);
    LayeredCircuit layered = parallelize_j(translate_gflow_pattern(p));
    REQUIRE(layered.blocks.size() == 2);
    CHECK(layered.blocks[0].j_layer.size() == 1);
    CHECK(layered.blocks[0].cliffords.empty());
    CHECK(layered.blocks[1].cliffords.empty());
}

TEST_CASE("parallelization preserves unitaries and layer counts on the corpus") {
    auto corpus = corpus_with_gflow(31337, 50, CorpusOptions{10, 4, 3, 0.3, 0.7, 7});
    for (const auto& p : corpus) {
        Circuit c = translate_gflow_pattern(p);
        auto gmax = find_max_delayed_gflow(p.graph);
        LayeredCircuit layered = parallelize_j(c);

        CHECK(layered.blocks.size() == static_cast<std::size_t>(gmax->depth()) + 1);
        std::size_t total_j = 0;
        for (std::size_t b = 0; b < layered.blocks.size(); ++b) {
            std::set<int> wires_touched;
            for (const auto& g : layered.blocks[b].j_layer) {
                ++total_j;
                CHECK(wires_touched.insert(g.wire).second);
            }
            for (const auto& g : layered.blocks[b].cliffords)
                CHECK((g.kind == GateKind::CX || g.kind == GateKind::CZ));
        }
        CHECK(layered.blocks.back().j_layer.empty());
        CHECK(total_j == p.graph.non_outputs().count());

        Matrix before = circuit_unitary(c).mat;
        Matrix after = circuit_unitary(layered.flatten()).mat;
        CHECK(max_abs_diff(before, after) < 1e-12);
    }
}

TEST_CASE("wire count always equals the output count") {
    auto corpus = corpus_with_gflow(1812, 30, CorpusOptions{10, 4, 3, 0.3, 0.7, 7});
    for (const auto& p : corpus)
        CHECK(translate_gflow_pattern(p).wire_count() == p.graph.outputs().count());
}
