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

#include <cstddef>
#include <string>
#include <vector>

namespace gflowc {

/**
 * A position on a wire: the segment before the `segment`-th J-gate of that
 * wire (segment == number of J-gates on the wire means the trailing segment).
 * In measurement terms, the segment before J(alpha_v) on v's wire is the
 * position v!, and the segment after it is v!! (equivalently h(v)!).
 */
struct Position {
    int wire = -1;
    int segment = -1;
    bool operator==(const Position& o) const { return wire == o.wire && segment == o.segment; }
    bool operator<(const Position& o) const {
        return wire != o.wire ? wire < o.wire : segment < o.segment;
    }
};

enum class GateKind {
    J,     // J(alpha) on one wire
    CZ,    // controlled-Z between two wires
    CX,    // CNOT, wire_a control, wire_b target
    ACCZ,  // acausal CZ anchored to two positions
    ACCX,  // acausal CNOT (pos_a control, pos_b target); rewrite-internal only
};

struct Gate {
    GateKind kind = GateKind::J;
    int wire = -1;       // J
    double angle = 0.0;  // J
    int vertex_id = -1;  // J: measured vertex, used in diagrams and tests
    int wire_a = -1;     // CZ/CX
    int wire_b = -1;
    Position pos_a;  // ACCZ/ACCX endpoints
    Position pos_b;

    static Gate j(int wire, double angle, int vertex_id = -1);
    static Gate cz(int a, int b);
    static Gate cx(int control, int target);
    static Gate accz(Position a, Position b);
    static Gate accx(Position control, Position target);

    bool operator==(const Gate& o) const;
};

/**
 * An ordinary circuit: one wire per path-cover path, gates in time order.
 * `rounds` (present on translator output) marks, per measurement layer, the
 * span holding the J/CZ interleaving and the span holding the trailing
 * Clifford gates of that layer; parallelize_j consumes it.
 */
struct Circuit {
    std::vector<std::vector<int>> wires;  // vertex ids along each path
    std::vector<Gate> gates;

    struct RoundSpan {
        std::size_t spt_begin = 0;  // J/CZ interleave of the layer
        std::size_t spt_end = 0;    // first gate after the interleave
        std::size_t end = 0;        // first gate after the layer's Cliffords
    };
    std::vector<RoundSpan> rounds;     // earliest layer first
    std::size_t prologue_end = 0;      // gates before the first round
    std::vector<Gate> output_clifford; // empty unless assembled from rounds

    std::size_t wire_count() const { return wires.size(); }
    /// Number of J-gates per wire.
    std::vector<int> j_counts() const;
};

/// Layered form: alternating J-layers and Clifford blocks, plus any Clifford
/// gates preceding the first J-layer.
struct LayeredCircuit {
    struct Block {
        std::vector<Gate> j_layer;
        std::vector<Gate> cliffords;
    };
    std::vector<Gate> prologue;   // Cliffords before every J-layer
    std::vector<Block> blocks;    // earliest first; last block's J-layer is
                                  // empty and its Cliffords are the final
                                  // output-local unitary
    std::vector<std::vector<int>> wires;

    /// Flattened back to a plain circuit (prologue, then blocks in order).
    Circuit flatten() const;
};

/// Circuit with ancilla wires, |+> preparations and <+| post-selections.
/// Each ancilla is prepared once and post-selected once; gate order is the
/// evaluation order.
struct PostselectedCircuit {
    int main_wires = 0;
    int total_wires = 0;  // main wires first, then ancillas
    std::vector<Gate> gates;
    std::vector<int> prep_plus;        // ancilla wire indices
    std::vector<int> postselect_plus;  // same set; kept separate for emphasis
};

/// One gate per line, JSON objects in time order.
std::string to_json_lines(const Circuit& c);
std::string to_json_lines(const PostselectedCircuit& c);
Circuit circuit_from_json_lines(const std::string& text);

/// Fixed-width ASCII rendering, one row per wire.
std::string text_diagram(const Circuit& c);

/// Multiset comparison key: gates sorted canonically, ignoring time order of
/// commuting placements.
std::vector<std::string> gate_multiset(const Circuit& c);

}  // namespace gflowc
