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

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gflowc {

/**
 * Subset of the vertices of one open graph, with bitset semantics.
 *
 * A VertexSet is bound to the universe (vertex count) of the graph it was
 * created for. Mixing sets from universes of different size is rejected;
 * symmetric difference is the group operation used by all F2 kernels.
 */
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), blocks_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int m : members) s.add(m);
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(int v) const {
        check_member(v);
        return (blocks_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
    }
    void add(int v) {
        check_member(v);
        blocks_[static_cast<std::size_t>(v) / 64] |= (std::uint64_t{1} << (v % 64));
    }
    void remove(int v) {
        check_member(v);
        blocks_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
    void toggle(int v) {
        check_member(v);
        blocks_[static_cast<std::size_t>(v) / 64] ^= (std::uint64_t{1} << (v % 64));
    }

    std::size_t count() const;
    bool empty() const;

    /// Symmetric difference (F2 addition).
    VertexSet operator^(const VertexSet& o) const;
    VertexSet& operator^=(const VertexSet& o);
    VertexSet operator&(const VertexSet& o) const;
    /// Set difference: members of *this not in o.
    VertexSet minus(const VertexSet& o) const;

    bool operator==(const VertexSet& o) const;
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    /// Members in ascending order.
    std::vector<int> members() const;
    /// Lowest member, or -1 when empty.
    int first() const;

  private:
    void check_member(int v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= universe_)
            throw std::out_of_range("vertex index outside set universe");
    }
    void check_same(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::invalid_argument("vertex sets belong to different graph universes");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> blocks_;
};

/**
 * Raw open-graph data as read from a file, before validation. Vertex ids are
 * arbitrary non-negative integers; angles (radians) are keyed by vertex id
 * and are meaningful only for measured (non-output) vertices.
 */
struct GraphDescription {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> inputs;
    std::vector<int> outputs;
    std::map<int, double> angles;
};

/// Checks the structural invariants of a description. Returns a list of
/// violated invariants; empty means the description is a valid open graph.
std::vector<std::string> validate_open_graph(const GraphDescription& d);

/**
 * An open graph (G, I, O): a simple undirected graph together with input and
 * output vertex subsets. Immutable after construction. External vertex ids
 * map to dense indices 0..n-1 in ascending id order; every VertexSet handed
 * out or accepted by this class lives over those dense indices.
 */
class OpenGraph {
  public:
    /// Builds from a description, throwing std::invalid_argument when
    /// validate_open_graph would report anything.
    static OpenGraph from_description(const GraphDescription& d);

    std::size_t size() const { return ids_.size(); }
    const std::vector<int>& ids() const { return ids_; }
    int id_of(int index) const { return ids_.at(static_cast<std::size_t>(index)); }
    int index_of(int id) const;
    bool has_id(int id) const;

    const VertexSet& inputs() const { return inputs_; }
    const VertexSet& outputs() const { return outputs_; }
    VertexSet non_inputs() const { return all() ^ inputs_; }
    VertexSet non_outputs() const { return all() ^ outputs_; }
    VertexSet all() const;

    bool adjacent(int u, int v) const { return adj_.at(static_cast<std::size_t>(u)).contains(v); }
    const VertexSet& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

    /// Edges as dense index pairs (u < v), sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const;

    /// Description round-trip (external ids, sorted).
    GraphDescription description() const;

    /// Subgraph that keeps the vertices outside `removed`, with the given
    /// input/output sets (all arguments over this graph's indices). External
    /// ids are preserved; dense indices are recomputed.
    OpenGraph without(const VertexSet& removed, const VertexSet& new_inputs,
                      const VertexSet& new_outputs) const;

    /// Graph with the same vertices and edge set E xor `toggled`.
    OpenGraph with_edges_toggled(const std::vector<std::pair<int, int>>& toggled) const;

    /// Maps a vertex set of this graph into `target` via external ids.
    /// Members absent from the target graph are dropped.
    VertexSet map_onto(const VertexSet& s, const OpenGraph& target) const;

    bool operator==(const OpenGraph& o) const;

  private:
    OpenGraph() = default;

    std::vector<int> ids_;
    std::map<int, int> index_;
    std::vector<VertexSet> adj_;
    VertexSet inputs_;
    VertexSet outputs_;
};

/// Odd neighborhood: the vertices adjacent to an odd number of members of s.
VertexSet odd_neighborhood(const OpenGraph& g, const VertexSet& s);

/// True iff |family| == |target| and the restrictions of the family members
/// to `target` are linearly independent over F2 (hence a basis of target).
bool is_basis(const std::vector<VertexSet>& family, const VertexSet& target);

}  // namespace gflowc
