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

#include "gflowc/graph.hpp"

#include "gflowc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace gflowc {

std::size_t VertexSet::count() const {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
}

bool VertexSet::empty() const {
    for (auto b : blocks_)
        if (b) return false;
    return true;
}

VertexSet VertexSet::operator^(const VertexSet& o) const {
    VertexSet r = *this;
    r ^= o;
    return r;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= o.blocks_[i];
    return *this;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    check_same(o);
    VertexSet r = *this;
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= o.blocks_[i];
    return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
    check_same(o);
    VertexSet r = *this;
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= ~o.blocks_[i];
    return r;
}

bool VertexSet::operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && blocks_ == o.blocks_;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & o.blocks_[i]) return true;
    return false;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        std::uint64_t b = blocks_[i];
        while (b) {
            int bit = std::countr_zero(b);
            out.push_back(static_cast<int>(i * 64) + bit);
            b &= b - 1;
        }
    }
    return out;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i]) return static_cast<int>(i * 64) + std::countr_zero(blocks_[i]);
    return -1;
}

std::vector<std::string> validate_open_graph(const GraphDescription& d) {
    std::vector<std::string> problems;
    std::set<int> verts(d.vertices.begin(), d.vertices.end());
    if (verts.size() != d.vertices.size()) problems.push_back("duplicate vertex id");
    for (int v : d.vertices)
        if (v < 0) problems.push_back("negative vertex id " + std::to_string(v));

    auto in_v = [&](int v) { return verts.count(v) != 0; };
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : d.edges) {
        if (u == v) {
            problems.push_back("self-loop at vertex " + std::to_string(u));
            continue;
        }
        if (!in_v(u) || !in_v(v)) {
            problems.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} has an endpoint outside V");
            continue;
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            problems.push_back("duplicate edge {" + std::to_string(key.first) + "," +
                               std::to_string(key.second) + "}");
    }
    for (int v : d.inputs)
        if (!in_v(v)) {
            problems.push_back("inputs not a subset of V");
            break;
        }
    for (int v : d.outputs)
        if (!in_v(v)) {
            problems.push_back("outputs not a subset of V");
            break;
        }
    for (auto& [v, a] : d.angles) {
        (void)a;
        if (!in_v(v)) {
            problems.push_back("angle given for unknown vertex " + std::to_string(v));
        }
    }
    return problems;
}

OpenGraph OpenGraph::from_description(const GraphDescription& d) {
    auto problems = validate_open_graph(d);
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "invalid open graph:";
        for (auto& p : problems) msg << " " << p << ";";
        throw std::invalid_argument(msg.str());
    }
    OpenGraph g;
    g.ids_ = d.vertices;
    std::sort(g.ids_.begin(), g.ids_.end());
    for (std::size_t i = 0; i < g.ids_.size(); ++i) g.index_[g.ids_[i]] = static_cast<int>(i);
    std::size_t n = g.ids_.size();
    g.adj_.assign(n, VertexSet(n));
    for (auto [u, v] : d.edges) {
        int ui = g.index_.at(u), vi = g.index_.at(v);
        g.adj_[static_cast<std::size_t>(ui)].add(vi);
        g.adj_[static_cast<std::size_t>(vi)].add(ui);
    }
    g.inputs_ = VertexSet(n);
    g.outputs_ = VertexSet(n);
    for (int v : d.inputs) g.inputs_.add(g.index_.at(v));
    for (int v : d.outputs) g.outputs_.add(g.index_.at(v));
    return g;
}

int OpenGraph::index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::out_of_range("vertex id " + std::to_string(id) + " not in graph");
    return it->second;
}

bool OpenGraph::has_id(int id) const { return index_.count(id) != 0; }

VertexSet OpenGraph::all() const {
    VertexSet s(size());
    for (std::size_t i = 0; i < size(); ++i) s.add(static_cast<int>(i));
    return s;
}

std::vector<std::pair<int, int>> OpenGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (int v : adj_[u].members())
            if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    return out;
}

std::size_t OpenGraph::edge_count() const { return edges().size(); }

GraphDescription OpenGraph::description() const {
    GraphDescription d;
    d.vertices = ids_;
    for (auto [u, v] : edges()) d.edges.emplace_back(id_of(u), id_of(v));
    for (int v : inputs_.members()) d.inputs.push_back(id_of(v));
    for (int v : outputs_.members()) d.outputs.push_back(id_of(v));
    return d;
}

OpenGraph OpenGraph::without(const VertexSet& removed, const VertexSet& new_inputs,
                             const VertexSet& new_outputs) const {
    GraphDescription d;
    for (std::size_t i = 0; i < size(); ++i)
        if (!removed.contains(static_cast<int>(i))) d.vertices.push_back(id_of(static_cast<int>(i)));
    for (auto [u, v] : edges())
        if (!removed.contains(u) && !removed.contains(v)) d.edges.emplace_back(id_of(u), id_of(v));
    for (int v : new_inputs.members())
        if (!removed.contains(v)) d.inputs.push_back(id_of(v));
    for (int v : new_outputs.members())
        if (!removed.contains(v)) d.outputs.push_back(id_of(v));
    return from_description(d);
}

OpenGraph OpenGraph::with_edges_toggled(const std::vector<std::pair<int, int>>& toggled) const {
    OpenGraph g = *this;
    for (auto [u, v] : toggled) {
        if (u == v) throw std::invalid_argument("cannot toggle a self-loop");
        g.adj_[static_cast<std::size_t>(u)].toggle(v);
        g.adj_[static_cast<std::size_t>(v)].toggle(u);
    }
    return g;
}

VertexSet OpenGraph::map_onto(const VertexSet& s, const OpenGraph& target) const {
    VertexSet out(target.size());
    for (int v : s.members()) {
        int id = id_of(v);
        if (target.has_id(id)) out.add(target.index_of(id));
    }
    return out;
}

bool OpenGraph::operator==(const OpenGraph& o) const {
    return ids_ == o.ids_ && adj_ == o.adj_ && inputs_ == o.inputs_ && outputs_ == o.outputs_;
}

VertexSet odd_neighborhood(const OpenGraph& g, const VertexSet& s) {
    if (s.universe() != g.size())
        throw std::invalid_argument("vertex set does not live on this graph");
    VertexSet odd(g.size());
    for (int v : s.members()) odd ^= g.neighbors(v);
    return odd;
}

bool is_basis(const std::vector<VertexSet>& family, const VertexSet& target) {
    if (family.size() != target.count()) return false;
    std::vector<VertexSet> restricted;
    restricted.reserve(family.size());
    for (auto& f : family) restricted.push_back(f & target);
    return gf2_rank(restricted) == family.size();
}

}  // namespace gflowc
