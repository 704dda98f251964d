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

#pragma once

#include "gflowc/circuit.hpp"
#include "gflowc/pathcover.hpp"
#include "gflowc/pattern.hpp"

namespace gflowc {

/// An output-local gate described on graph vertices (dense indices); the
/// translator resolves vertices to wires.
struct VertexGate {
    GateKind kind;  // CZ or CX (control = a)
    int a = -1;
    int b = -1;
};

/**
 * The sequence of graphs produced by rewiring each matched output: step i
 * replaces every edge at h(v_i) by edges from h(v_i) to the odd neighborhood
 * of the rewritten correcting set, at the price of one conjugating CNOT
 * fan-out per step. graphs[0] is the input graph without its output-output
 * edges; graphs[n] exposes a causal flow from the first measured layer into
 * the matched outputs.
 */
struct GraphSequence {
    std::vector<OpenGraph> graphs;  // G_0 .. G_n, shared vertex ids
    struct Conjugator {
        int control;        // h(v_i)
        VertexSet targets;  // g_V(v_i) xor {h(v_i)}
    };
    std::vector<Conjugator> conjugators;    // aligned with processing order
    std::vector<VertexGate> output_gates;   // U_O, time order: CNOTs then CZs
};

GraphSequence build_graph_sequence(const OpenGraph& g, const MatchingGflow& mg);

/**
 * Translates a pattern with gflow into an ordinary circuit, one measurement
 * layer at a time: each layer contributes its J-gates interleaved with the
 * cross CZ-gates of the rewired graph, then the layer's output-local
 * Cliffords; the residual graph recurses. Wire w is path w of the path
 * cover. Throws no_gflow_error when the graph has no gflow.
 */
Circuit translate_gflow_pattern(const MeasurementPattern& p);

/// Measured vertex ids in the global J-gate order the translation uses:
/// deepest layer first, each layer in reverse matching order.
std::vector<int> measured_order(const OpenGraph& g);

/// Star pattern transformation for a pattern with causal flow.
Circuit spt_flow(const MeasurementPattern& p, const Flow& flow);

struct PatternWithFlow {
    MeasurementPattern pattern;
    Flow flow;
};

/// Reverse star pattern transformation: rebuilds an open graph with flow
/// from a circuit of J- and CZ-gates. Throws on other gate kinds.
PatternWithFlow circuit_to_pattern(const Circuit& c);

/**
 * Rewrites each layer block into a single simultaneous J-layer followed by a
 * CNOT/CZ block, converting every CZ that precedes a J on one of its wires
 * through J Z = X J. Requires translator round annotations.
 */
LayeredCircuit parallelize_j(const Circuit& c);

}  // namespace gflowc
