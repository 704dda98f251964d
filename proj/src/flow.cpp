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

#include "gflowc/flow.hpp"

#include <algorithm>
#include <functional>

#include "gflowc/gf2.hpp"

namespace gflowc {

namespace {

std::string vstr(const OpenGraph& g, int v) { return std::to_string(g.id_of(v)); }

}  // namespace

std::vector<int> Layering::layer_of(std::size_t n) const {
    std::vector<int> out(n, -1);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        for (int v : layers[k].members()) {
            if (out[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("layers overlap");
            out[static_cast<std::size_t>(v)] = static_cast<int>(k);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (out[v] == -1) throw std::invalid_argument("layers do not cover all vertices");
    return out;
}

std::vector<Violation> verify_flow(const OpenGraph& g, const Flow& flow) {
    std::vector<Violation> out;
    std::size_t n = g.size();
    std::vector<int> lo;
    try {
        lo = flow.order.layer_of(n);
    } catch (const std::invalid_argument& e) {
        out.push_back({"structure", e.what()});
        return out;
    }
    if (flow.f.size() != n) {
        out.push_back({"structure", "flow function has wrong domain size"});
        return out;
    }
    VertexSet non_out = g.non_outputs();
    VertexSet inputs = g.inputs();
    for (std::size_t ui = 0; ui < n; ++ui) {
        int u = static_cast<int>(ui);
        int fu = flow.f[ui];
        if (!non_out.contains(u)) {
            if (fu != -1)
                out.push_back({"structure", "f defined on output vertex " + vstr(g, u)});
            continue;
        }
        if (fu < 0 || static_cast<std::size_t>(fu) >= n) {
            out.push_back({"structure", "f undefined on non-output vertex " + vstr(g, u)});
            continue;
        }
        if (inputs.contains(fu))
            out.push_back({"structure", "f(" + vstr(g, u) + ") is an input vertex"});
        if (!Layering::precedes(lo, u, fu))
            out.push_back({"f-1", vstr(g, u) + " does not precede f(" + vstr(g, u) + ")=" +
                                      vstr(g, fu)});
        if (!g.adjacent(u, fu))
            out.push_back({"f-2", vstr(g, u) + " not adjacent to f(" + vstr(g, u) + ")=" +
                                      vstr(g, fu)});
        else
            for (int v : g.neighbors(fu).members())
                if (v != u && !Layering::precedes(lo, u, v))
                    out.push_back({"f-3", vstr(g, u) + " does not precede " + vstr(g, v) +
                                              " in N(f(" + vstr(g, u) + "))"});
    }
    return out;
}

std::vector<Violation> verify_gflow(const OpenGraph& g, const Gflow& gf) {
    std::vector<Violation> out;
    std::size_t n = g.size();
    std::vector<int> lo;
    try {
        lo = gf.order.layer_of(n);
    } catch (const std::invalid_argument& e) {
        out.push_back({"structure", e.what()});
        return out;
    }
    if (gf.g.size() != n) {
        out.push_back({"structure", "gflow function has wrong domain size"});
        return out;
    }
    VertexSet non_out = g.non_outputs();
    VertexSet inputs = g.inputs();
    for (std::size_t ui = 0; ui < n; ++ui) {
        int u = static_cast<int>(ui);
        if (!non_out.contains(u)) {
            if (gf.g[ui].has_value() && !gf.g[ui]->empty())
                out.push_back({"structure", "g defined on output vertex " + vstr(g, u)});
            continue;
        }
        if (!gf.g[ui].has_value()) {
            out.push_back({"structure", "g undefined on non-output vertex " + vstr(g, u)});
            continue;
        }
        const VertexSet& gu = *gf.g[ui];
        if (gu.intersects(inputs))
            out.push_back({"structure", "g(" + vstr(g, u) + ") contains an input vertex"});
        for (int v : gu.members())
            if (!Layering::precedes(lo, u, v))
                out.push_back({"g-1", vstr(g, u) + " does not precede " + vstr(g, v) +
                                          " in g(" + vstr(g, u) + ")"});
        VertexSet odd = odd_neighborhood(g, gu);
        if (!odd.contains(u))
            out.push_back({"g-2", vstr(g, u) + " not in Odd(g(" + vstr(g, u) + "))"});
        for (int v : odd.members())
            if (v != u && !Layering::precedes(lo, u, v))
                out.push_back({"g-3", vstr(g, u) + " does not precede " + vstr(g, v) +
                                          " in Odd(g(" + vstr(g, u) + "))"});
    }
    return out;
}

std::optional<Gflow> find_max_delayed_gflow(const OpenGraph& g) {
    std::size_t n = g.size();
    Gflow result;
    result.g.assign(n, std::nullopt);

    VertexSet fixed = g.outputs();        // vertices already assigned to a layer
    VertexSet correctors = g.outputs().minus(g.inputs());  // usable correcting region
    result.order.layers.push_back(g.outputs());

    while (fixed.count() < n) {
        VertexSet unfixed = g.all().minus(fixed);
        std::vector<int> columns = correctors.members();
        VertexSet layer(n);
        std::vector<std::pair<int, VertexSet>> found;
        for (int v : unfixed.members()) {
            // Solve for S_v over the corrector columns:
            //   |N(w) /\ S_v| = [w == v]  for every unfixed w.
            Gf2System sys;
            for (int w : unfixed.members()) {
                VertexSet row(columns.size());
                for (std::size_t c = 0; c < columns.size(); ++c)
                    if (g.adjacent(w, columns[c])) row.add(static_cast<int>(c));
                sys.rows.push_back(row);
                sys.rhs.push_back(w == v);
            }
            auto sol = solve_gf2(sys);
            if (!sol) continue;
            VertexSet s(n);
            for (int c : sol->members()) s.add(columns[static_cast<std::size_t>(c)]);
            found.emplace_back(v, s);
            layer.add(v);
        }
        if (found.empty()) return std::nullopt;  // peeling stalled: no gflow
        for (auto& [v, s] : found) result.g[static_cast<std::size_t>(v)] = s;
        result.order.layers.push_back(layer);
        fixed ^= layer;
        correctors ^= layer.minus(g.inputs());
    }
    return result;
}

namespace {

// Layers from the constraint arcs "u before v", by longest path to a sink.
// Works on any digraph; vertices on a cycle end up sharing a layer, which the
// verifier then reports.
Layering layering_from_constraints(std::size_t n,
                                   const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> succ(n);
    for (auto [u, v] : arcs) succ[static_cast<std::size_t>(u)].push_back(v);
    std::vector<int> depth(n, -1), state(n, 0);
    std::function<int(int)> rank = [&](int v) -> int {
        if (state[static_cast<std::size_t>(v)] == 1) return 0;  // cycle: cut off
        if (depth[static_cast<std::size_t>(v)] >= 0) return depth[static_cast<std::size_t>(v)];
        state[static_cast<std::size_t>(v)] = 1;
        int d = 0;
        for (int w : succ[static_cast<std::size_t>(v)]) d = std::max(d, rank(w) + 1);
        state[static_cast<std::size_t>(v)] = 2;
        depth[static_cast<std::size_t>(v)] = d;
        return d;
    };
    int maxd = 0;
    for (std::size_t v = 0; v < n; ++v) maxd = std::max(maxd, rank(static_cast<int>(v)));
    Layering order;
    order.layers.assign(static_cast<std::size_t>(maxd) + 1, VertexSet(n));
    for (std::size_t v = 0; v < n; ++v)
        order.layers[static_cast<std::size_t>(depth[v])].add(static_cast<int>(v));
    return order;
}

}  // namespace

std::optional<Flow> find_flow(const OpenGraph& g) {
    std::vector<int> domain = g.non_outputs().members();
    std::size_t n = g.size();
    VertexSet non_inputs = g.non_inputs();

    std::vector<int> f(n, -1);
    std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
        if (k == domain.size()) {
            // Constraint arcs: u before f(u), and u before N(f(u)) \ {u}.
            std::vector<std::pair<int, int>> arcs;
            for (int u : domain) {
                arcs.emplace_back(u, f[static_cast<std::size_t>(u)]);
                for (int v : g.neighbors(f[static_cast<std::size_t>(u)]).members())
                    if (v != u) arcs.emplace_back(u, v);
            }
            // The assignment works iff the constraints are acyclic; the
            // longest-path layering then satisfies them all strictly.
            Layering order = layering_from_constraints(n, arcs);
            auto lo = order.layer_of(n);
            for (auto [u, v] : arcs)
                if (!Layering::precedes(lo, u, v)) return false;
            return true;
        }
        int u = domain[k];
        for (int v : g.neighbors(u).members()) {
            if (!non_inputs.contains(v)) continue;
            f[static_cast<std::size_t>(u)] = v;
            if (assign(k + 1)) return true;
        }
        f[static_cast<std::size_t>(u)] = -1;
        return false;
    };
    if (!assign(0)) return std::nullopt;

    Flow flow;
    flow.f = f;
    std::vector<std::pair<int, int>> arcs;
    for (int u : domain) {
        arcs.emplace_back(u, f[static_cast<std::size_t>(u)]);
        for (int v : g.neighbors(f[static_cast<std::size_t>(u)]).members())
            if (v != u) arcs.emplace_back(u, v);
    }
    flow.order = layering_from_constraints(n, arcs);
    return flow;
}

DelayOrder compare_delay(const Gflow& a, const Gflow& b) {
    std::size_t n = 0;
    for (auto& l : a.order.layers) n = std::max(n, l.universe());
    for (auto& l : b.order.layers)
        if (l.universe() != n) throw std::invalid_argument("gflows live on different graphs");

    std::size_t k = std::max(a.order.layers.size(), b.order.layers.size());
    bool a_ge = true, b_ge = true, strict_a = false, strict_b = false;
    std::size_t ca = 0, cb = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (i < a.order.layers.size()) ca += a.order.layers[i].count();
        if (i < b.order.layers.size()) cb += b.order.layers[i].count();
        if (ca > cb) { strict_a = true; b_ge = false; }
        if (cb > ca) { strict_b = true; a_ge = false; }
    }
    if (a_ge && b_ge) return DelayOrder::Equal;
    if (a_ge && strict_a) return DelayOrder::MoreDelayed;
    if (b_ge && strict_b) return DelayOrder::LessDelayed;
    return DelayOrder::Incomparable;
}

}  // namespace gflowc
