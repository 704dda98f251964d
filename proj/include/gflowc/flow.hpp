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

#include <optional>
#include <string>
#include <vector>

#include "gflowc/graph.hpp"

namespace gflowc {

/**
 * Layer list encoding a strict partial order on the vertices: u precedes v
 * exactly when u sits in a higher-indexed layer. Layer 0 holds the vertices
 * measured last (for a maximally delayed gflow, exactly the outputs); higher
 * indices are measured earlier.
 */
struct Layering {
    std::vector<VertexSet> layers;

    /// Layer index per vertex; throws if the layers do not partition 0..n-1.
    std::vector<int> layer_of(std::size_t n) const;
    /// u strictly precedes v (u measured before v).
    static bool precedes(const std::vector<int>& layer_of, int u, int v) {
        return layer_of[static_cast<std::size_t>(u)] > layer_of[static_cast<std::size_t>(v)];
    }
    int depth() const { return static_cast<int>(layers.size()) - 1; }
};

/// Causal flow: successor function on non-outputs plus the measurement order.
struct Flow {
    std::vector<int> f;  // dense index -> dense index; -1 outside the domain
    Layering order;
};

/// Generalized flow: correcting set per non-output plus the measurement order.
struct Gflow {
    std::vector<std::optional<VertexSet>> g;  // indexed by dense vertex
    Layering order;

    int depth() const { return order.depth(); }
};

struct Violation {
    std::string condition;  // "f-1", "g-2", "structure", ...
    std::string detail;
};

/// Empty result means the flow satisfies all three flow conditions under the
/// order encoded by its layers.
std::vector<Violation> verify_flow(const OpenGraph& g, const Flow& flow);

/// Empty result means the gflow satisfies the three gflow conditions.
std::vector<Violation> verify_gflow(const OpenGraph& g, const Gflow& gf);

/**
 * Maximally delayed gflow, or nullopt when the graph has none. Layers are
 * peeled back to front: layer 0 is O, and each further layer is the maximal
 * set of still-uncorrected vertices v admitting a correcting set S_v inside
 * the already-peeled non-input region with Odd(S_v) meeting the unpeeled
 * vertices exactly in {v}. Correcting sets are the deterministic solve_gf2
 * solutions (free variables zero, ascending column order).
 */
std::optional<Gflow> find_max_delayed_gflow(const OpenGraph& g);

/// Causal flow found by backtracking over neighbor choices (ascending vertex,
/// ascending neighbor), or nullopt if none exists.
std::optional<Flow> find_flow(const OpenGraph& g);

enum class DelayOrder { MoreDelayed, LessDelayed, Equal, Incomparable };

/// Compares cumulative layer sizes: a is more delayed than b when every
/// prefix union of a's layers is at least as large as b's, strictly somewhere.
DelayOrder compare_delay(const Gflow& a, const Gflow& b);

}  // namespace gflowc
