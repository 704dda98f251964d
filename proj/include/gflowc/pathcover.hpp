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

#include "gflowc/flow.hpp"
#include "gflowc/graph.hpp"

namespace gflowc {

/// Thrown by operations that require a gflow when the graph has none.
class no_gflow_error : public std::runtime_error {
  public:
    no_gflow_error() : std::runtime_error("graph has no gflow") {}
};

/**
 * The modified gflow whose first-layer images admit a perfect matching into
 * the outputs, together with the successor function realizing the matching.
 *
 * Vertices of the first measured layer are processed in ascending index
 * order v_1..v_l; for each v_m the correcting set is rewritten to
 * O_m = g(v_m) (+) XOR of g over U_m, where U_m solves the restriction of
 * g(v_m) to the already matched outputs, and h(v_m) is the lowest-index
 * neighbor of v_m inside O_m. The order refines the input layering by
 * placing each v_m before the members of U_m.
 */
struct MatchingGflow {
    Gflow modified;                     // g_V and the refined layer order
    std::vector<int> h;                 // successor per vertex; -1 off-domain
    VertexSet matched_outputs;          // R_V
    std::vector<int> processing_order;  // first layer, ascending

    struct Step {
        int vertex;
        VertexSet u_set;  // U_m: previously processed vertices XOR-ed in
        VertexSet o_set;  // O_m: the rewritten correcting set
    };
    std::vector<Step> steps;  // per processed vertex, in order
};

MatchingGflow build_matching_gflow(const OpenGraph& g, const Gflow& gmax);

/// Result of removing a matched output subset.
struct ReducedGraph {
    OpenGraph graph;  // G \ r with inputs I \ r and outputs V_1 u (O \ r)
    Gflow gflow;      // valid maximally delayed gflow with the shifted layers
};

/**
 * Removes r from the outputs (r must satisfy |r| = |V_1| and the basis
 * condition over the original correcting sets), promoting the first measured
 * layer to outputs. The returned gflow keeps the old ordering with layer
 * indices shifted down by one.
 */
ReducedGraph reduce_outputs(const OpenGraph& g, const Gflow& gmax, const VertexSet& r);

/// Vertex-disjoint directed paths covering the graph, entering inputs only
/// at initial points and outputs only at final points.
struct PathCover {
    std::vector<std::vector<int>> paths;  // dense indices, start to end
};

/// Paths as external vertex ids.
std::vector<std::vector<int>> path_ids(const OpenGraph& g, const PathCover& cover);

/**
 * Builds a path cover from gflow by repeatedly matching the first measured
 * layer into the outputs and reducing. Paths are ordered by starting vertex.
 * Throws no_gflow_error when the graph has no gflow.
 */
PathCover build_path_cover(const OpenGraph& g);

/// Checks the three path-cover conditions; empty result means valid.
std::vector<Violation> verify_path_cover(const OpenGraph& g, const PathCover& cover);

}  // namespace gflowc
