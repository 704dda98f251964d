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

#include "gflowc/pathcover.hpp"

#include <algorithm>
#include <map>

#include "gflowc/gf2.hpp"

namespace gflowc {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("matching-gflow internal consistency: ") + what);
}

VertexSet first_layer(const Gflow& gf, std::size_t n) {
    return gf.order.layers.size() > 1 ? gf.order.layers[1] : VertexSet(n);
}

}  // namespace

MatchingGflow build_matching_gflow(const OpenGraph& g, const Gflow& gmax) {
    std::size_t n = g.size();
    if (!verify_gflow(g, gmax).empty())
        throw std::invalid_argument("matching requires a valid gflow");
    if (gmax.order.layers.empty() || gmax.order.layers[0] != g.outputs())
        throw std::invalid_argument("matching requires a maximally delayed gflow (layer 0 = O)");

    VertexSet v1 = first_layer(gmax, n);
    if (v1.empty()) throw std::invalid_argument("first measured layer is empty");

    MatchingGflow out;
    out.modified.g = gmax.g;
    out.h.assign(n, -1);
    out.matched_outputs = VertexSet(n);
    out.processing_order = v1.members();

    std::vector<int> processed;  // v_1..v_m
    for (int v : out.processing_order) {
        const VertexSet& gv = *gmax.g[static_cast<std::size_t>(v)];

        // U_m: subset of processed vertices whose g-images reproduce g(v_m)
        // on the matched outputs.
        Gf2System sys;
        for (int r : out.matched_outputs.members()) {
            VertexSet row(processed.size());
            for (std::size_t c = 0; c < processed.size(); ++c)
                if (gmax.g[static_cast<std::size_t>(processed[c])]->contains(r))
                    row.add(static_cast<int>(c));
            sys.rows.push_back(row);
            sys.rhs.push_back(gv.contains(r));
        }
        auto sol = solve_gf2(sys);
        internal_check(sol.has_value(), "restriction system unsolvable (basis property broken)");

        VertexSet u_set(n);
        VertexSet o_set = gv;
        for (int c : sol->members()) {
            int u = processed[static_cast<std::size_t>(c)];
            u_set.add(u);
            o_set ^= *gmax.g[static_cast<std::size_t>(u)];
        }
        internal_check(!o_set.intersects(out.matched_outputs),
                       "rewritten correcting set meets matched outputs");

        // Successor: lowest-index neighbor of v inside the rewritten set.
        int r = -1;
        for (int cand : o_set.members())
            if (g.adjacent(v, cand)) {
                r = cand;
                break;
            }
        internal_check(r >= 0, "no adjacent candidate in the rewritten correcting set");

        out.modified.g[static_cast<std::size_t>(v)] = o_set;
        out.h[static_cast<std::size_t>(v)] = r;
        out.matched_outputs.add(r);
        out.steps.push_back({v, u_set, o_set});
        processed.push_back(v);

        // Interim matching condition: no rewritten image may look ahead into
        // the unprocessed part of the layer.
        VertexSet pending = v1;
        for (int p : processed) pending.remove(p);
        for (int p : processed) {
            VertexSet odd = odd_neighborhood(g, *out.modified.g[static_cast<std::size_t>(p)]);
            internal_check(!odd.intersects(pending), "odd neighborhood reaches unprocessed layer");
        }
    }

    // Refined order: each v_m precedes the members of its U_m. Rank within
    // the layer by longest dependency chain.
    std::map<int, int> rank;
    for (std::size_t m = 0; m < out.steps.size(); ++m) {
        int rk = 0;
        for (int u : out.steps[m].u_set.members()) rk = std::max(rk, rank.at(u) + 1);
        rank[out.steps[m].vertex] = rk;
    }
    int max_rank = 0;
    for (auto& [v, rk] : rank) max_rank = std::max(max_rank, rk);

    Layering refined;
    refined.layers.push_back(gmax.order.layers[0]);
    for (int rk = 0; rk <= max_rank; ++rk) {
        VertexSet layer(n);
        for (auto& [v, r] : rank)
            if (r == rk) layer.add(v);
        refined.layers.push_back(layer);
    }
    for (std::size_t k = 2; k < gmax.order.layers.size(); ++k)
        refined.layers.push_back(gmax.order.layers[k]);
    out.modified.order = refined;

    // Final matching conditions.
    internal_check(out.matched_outputs.count() == v1.count(), "matching is not a bijection");
    internal_check(out.matched_outputs.is_subset_of(g.outputs()), "matched set leaves O");
    std::vector<VertexSet> family;
    for (int v : out.processing_order) family.push_back(*gmax.g[static_cast<std::size_t>(v)]);
    internal_check(is_basis(family, out.matched_outputs), "matched restrictions lose rank");
    for (int v : out.processing_order) {
        int r = out.h[static_cast<std::size_t>(v)];
        internal_check(g.adjacent(v, r), "matching edge absent from the graph");
        internal_check(out.modified.g[static_cast<std::size_t>(v)]->contains(r),
                       "matching edge is not a real gflow edge");
    }
    internal_check(verify_gflow(g, out.modified).empty(), "modified gflow invalid");
    return out;
}

ReducedGraph reduce_outputs(const OpenGraph& g, const Gflow& gmax, const VertexSet& r) {
    std::size_t n = g.size();
    VertexSet v1 = first_layer(gmax, n);
    if (r.count() != v1.count())
        throw std::invalid_argument("removed set size must match the first measured layer");
    if (!r.is_subset_of(g.outputs()))
        throw std::invalid_argument("removed set must consist of outputs");
    std::vector<VertexSet> family;
    for (int v : v1.members()) family.push_back(*gmax.g[static_cast<std::size_t>(v)]);
    if (!is_basis(family, r))
        throw std::invalid_argument("correcting sets do not form a basis of the removed set");

    VertexSet new_outputs = v1 ^ g.outputs().minus(r);
    OpenGraph reduced = g.without(r, g.inputs(), new_outputs);

    ReducedGraph out{reduced, Gflow{}};
    out.gflow.g.assign(reduced.size(), std::nullopt);

    std::vector<int> v1m = v1.members();
    for (std::size_t ui = 0; ui < n; ++ui) {
        int u = static_cast<int>(ui);
        if (g.outputs().contains(u) || v1.contains(u)) continue;
        const VertexSet& gu = *gmax.g[ui];
        // V_u: first-layer subset reproducing g(u) on r.
        Gf2System sys;
        for (int rv : r.members()) {
            VertexSet row(v1m.size());
            for (std::size_t c = 0; c < v1m.size(); ++c)
                if (gmax.g[static_cast<std::size_t>(v1m[c])]->contains(rv))
                    row.add(static_cast<int>(c));
            sys.rows.push_back(row);
            sys.rhs.push_back(gu.contains(rv));
        }
        auto sol = solve_gf2(sys);
        if (!sol)
            throw std::logic_error("reduction system unsolvable (basis property broken)");
        VertexSet gnew = gu.minus(r);
        for (int c : sol->members())
            gnew ^= gmax.g[static_cast<std::size_t>(v1m[static_cast<std::size_t>(c)])]->minus(r);
        out.gflow.g[static_cast<std::size_t>(reduced.index_of(g.id_of(u)))] =
            g.map_onto(gnew, reduced);
    }

    // Shifted layers: the promoted outputs first, then the old layers 2.. .
    Layering shifted;
    shifted.layers.push_back(g.map_onto(new_outputs, reduced));
    for (std::size_t k = 2; k < gmax.order.layers.size(); ++k)
        shifted.layers.push_back(g.map_onto(gmax.order.layers[k], reduced));
    out.gflow.order = shifted;
    return out;
}

PathCover build_path_cover(const OpenGraph& g) {
    auto gmax = find_max_delayed_gflow(g);
    if (!gmax) throw no_gflow_error();

    std::map<int, int> succ_by_id;  // arcs v -> h(v), external ids
    OpenGraph current = g;
    Gflow gf = *gmax;
    while (!current.non_outputs().empty()) {
        MatchingGflow mg = build_matching_gflow(current, gf);
        for (int v : mg.processing_order)
            succ_by_id[current.id_of(v)] = current.id_of(mg.h[static_cast<std::size_t>(v)]);
        ReducedGraph red = reduce_outputs(current, gf, mg.matched_outputs);
        current = red.graph;
        auto recomputed = find_max_delayed_gflow(current);
        if (!recomputed) throw std::logic_error("reduced graph lost its gflow");
        gf = *recomputed;
    }

    std::map<int, int> pred_by_id;
    for (auto& [v, h] : succ_by_id) pred_by_id[h] = v;

    PathCover cover;
    for (int id : g.ids()) {
        if (pred_by_id.count(id)) continue;  // not a path start
        std::vector<int> path{g.index_of(id)};
        int cur = id;
        while (succ_by_id.count(cur)) {
            cur = succ_by_id[cur];
            path.push_back(g.index_of(cur));
        }
        cover.paths.push_back(std::move(path));
    }
    return cover;
}

std::vector<std::vector<int>> path_ids(const OpenGraph& g, const PathCover& cover) {
    std::vector<std::vector<int>> out;
    for (const auto& p : cover.paths) {
        std::vector<int> ids;
        for (int v : p) ids.push_back(g.id_of(v));
        out.push_back(std::move(ids));
    }
    return out;
}

std::vector<Violation> verify_path_cover(const OpenGraph& g, const PathCover& cover) {
    std::vector<Violation> out;
    VertexSet seen(g.size());
    for (const auto& p : cover.paths) {
        if (p.empty()) {
            out.push_back({"cover", "empty path"});
            continue;
        }
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (seen.contains(p[k])) out.push_back({"disjoint", "vertex revisited"});
            seen.add(p[k]);
            if (k + 1 < p.size() && !g.adjacent(p[k], p[k + 1]))
                out.push_back({"edges", "path arc is not a graph edge"});
            if (g.inputs().contains(p[k]) && k != 0)
                out.push_back({"inputs", "input vertex inside a path"});
            if (g.outputs().contains(p[k]) && k + 1 != p.size())
                out.push_back({"outputs", "output vertex inside a path"});
        }
        if (!g.outputs().contains(p.back()))
            out.push_back({"outputs", "path does not end on an output"});
    }
    if (seen.count() != g.size()) out.push_back({"cover", "paths do not cover all vertices"});
    return out;
}

}  // namespace gflowc
