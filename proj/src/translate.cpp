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

#include "gflowc/translate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gflowc {

namespace {

std::vector<std::pair<int, int>> intra_output_edges(const OpenGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges())
        if (g.outputs().contains(u) && g.outputs().contains(v)) out.emplace_back(u, v);
    return out;
}

}  // namespace

GraphSequence build_graph_sequence(const OpenGraph& g, const MatchingGflow& mg) {
    GraphSequence seq;
    auto removed = intra_output_edges(g);
    seq.graphs.reserve(mg.processing_order.size() + 1);
    seq.graphs.push_back(g.with_edges_toggled(removed));

    const OpenGraph g0 = seq.graphs.front();
    for (int v : mg.processing_order) {
        const OpenGraph cur = seq.graphs.back();
        int h = mg.h[static_cast<std::size_t>(v)];
        const VertexSet& gv = *mg.modified.g[static_cast<std::size_t>(v)];
        VertexSet odd = odd_neighborhood(g0, gv);
        if (odd != odd_neighborhood(cur, gv))
            throw std::logic_error("odd neighborhood drifted across the graph sequence");

        VertexSet toggle = cur.neighbors(h) ^ odd;
        std::vector<std::pair<int, int>> toggled;
        for (int y : toggle.members()) toggled.emplace_back(h, y);
        seq.graphs.push_back(cur.with_edges_toggled(toggled));

        seq.conjugators.push_back({h, gv ^ VertexSet::of(g.size(), {h})});
    }

    const OpenGraph& gn = seq.graphs.back();
    for (std::size_t m = 0; m < mg.processing_order.size(); ++m) {
        int v = mg.processing_order[m];
        int h = mg.h[static_cast<std::size_t>(v)];
        if (gn.neighbors(h) != odd_neighborhood(g0, *mg.modified.g[static_cast<std::size_t>(v)]))
            throw std::logic_error("rewired neighborhood does not match the odd neighborhood");
    }

    // Output-local gates, time order: conjugating CNOT fan-outs for the last
    // processed vertex first, then the removed output-output edges as CZs.
    for (std::size_t m = mg.processing_order.size(); m-- > 0;) {
        const auto& cj = seq.conjugators[m];
        for (int t : cj.targets.members())
            seq.output_gates.push_back({GateKind::CX, cj.control, t});
    }
    for (auto [u, v] : removed) seq.output_gates.push_back({GateKind::CZ, u, v});
    return seq;
}

namespace {

struct RoundPlan {
    OpenGraph graph;   // graph the round was computed on
    Gflow gmax;
    MatchingGflow mg;
    GraphSequence seq;
};

struct TranslationPlan {
    std::vector<RoundPlan> rounds;  // first entry handles the last measured layer
    OpenGraph terminal;             // all-output residual
};

TranslationPlan plan_rounds(const OpenGraph& g) {
    TranslationPlan plan{{}, g};
    OpenGraph current = g;
    while (!current.non_outputs().empty()) {
        auto gmax = find_max_delayed_gflow(current);
        if (!gmax) throw no_gflow_error();
        MatchingGflow mg = build_matching_gflow(current, *gmax);
        GraphSequence seq = build_graph_sequence(current, mg);

        VertexSet v1 = gmax->order.layers[1];
        VertexSet new_outputs = v1 ^ current.outputs().minus(mg.matched_outputs);
        OpenGraph residual =
            seq.graphs.back().without(mg.matched_outputs, current.inputs(), new_outputs);
        plan.rounds.push_back({current, std::move(*gmax), std::move(mg), std::move(seq)});
        current = residual;
    }
    plan.terminal = current;
    return plan;
}

std::map<int, int> wire_by_vertex_id(const std::vector<std::vector<int>>& wires) {
    std::map<int, int> out;
    for (std::size_t w = 0; w < wires.size(); ++w)
        for (int id : wires[w]) out[id] = static_cast<int>(w);
    return out;
}

}  // namespace

Circuit translate_gflow_pattern(const MeasurementPattern& p) {
    const OpenGraph& g = p.graph;
    PathCover cover = build_path_cover(g);

    Circuit c;
    c.wires = path_ids(g, cover);
    auto wire_of = wire_by_vertex_id(c.wires);

    std::map<int, double> angle_by_id;
    for (int v : g.non_outputs().members()) angle_by_id[g.id_of(v)] = p.angle_of(v);

    TranslationPlan plan = plan_rounds(g);

    // Terminal residual first: its remaining edges act before any J-gate.
    std::vector<Gate> prologue;
    for (auto [u, v] : plan.terminal.edges())
        prologue.push_back(
            Gate::cz(wire_of.at(plan.terminal.id_of(u)), wire_of.at(plan.terminal.id_of(v))));
    std::sort(prologue.begin(), prologue.end(), [](const Gate& a, const Gate& b) {
        return std::pair(a.wire_a, a.wire_b) < std::pair(b.wire_a, b.wire_b);
    });
    c.gates = prologue;
    c.prologue_end = c.gates.size();

    // Deepest layer first; each round appends [J/CZ interleave][Cliffords].
    for (std::size_t r = plan.rounds.size(); r-- > 0;) {
        const RoundPlan& round = plan.rounds[r];
        const OpenGraph& h_graph = round.graph;
        const OpenGraph& g0 = round.seq.graphs.front();

        Circuit::RoundSpan span;
        span.spt_begin = c.gates.size();
        for (std::size_t m = round.mg.processing_order.size(); m-- > 0;) {
            int v = round.mg.processing_order[m];
            int id = h_graph.id_of(v);
            c.gates.push_back(Gate::j(wire_of.at(id), angle_by_id.at(id), id));
            VertexSet odd =
                odd_neighborhood(g0, *round.mg.modified.g[static_cast<std::size_t>(v)]);
            odd.remove(v);
            for (int u : odd.members())
                c.gates.push_back(Gate::cz(wire_of.at(id), wire_of.at(h_graph.id_of(u))));
        }
        span.spt_end = c.gates.size();
        for (const auto& vg : round.seq.output_gates) {
            int wa = wire_of.at(h_graph.id_of(vg.a));
            int wb = wire_of.at(h_graph.id_of(vg.b));
            c.gates.push_back(vg.kind == GateKind::CX ? Gate::cx(wa, wb) : Gate::cz(wa, wb));
        }
        span.end = c.gates.size();
        c.rounds.push_back(span);
    }
    return c;
}

std::vector<int> measured_order(const OpenGraph& g) {
    TranslationPlan plan = plan_rounds(g);
    std::vector<int> out;
    for (std::size_t r = plan.rounds.size(); r-- > 0;) {
        const RoundPlan& round = plan.rounds[r];
        for (std::size_t m = round.mg.processing_order.size(); m-- > 0;)
            out.push_back(round.graph.id_of(round.mg.processing_order[m]));
    }
    return out;
}

namespace {

// Global J schedule: layer by layer from the earliest measured, vertices of
// one layer in ascending index order. Returns the J time per vertex (-1 for
// outputs).
std::vector<int> j_schedule(const OpenGraph& g, const Layering& order) {
    std::vector<int> t(g.size(), -1);
    int next = 0;
    for (std::size_t k = order.layers.size(); k-- > 1;)
        for (int v : order.layers[k].members()) t[static_cast<std::size_t>(v)] = next++;
    return t;
}

struct SegmentWindow {
    int lo;  // earliest valid placement (number of J-gates already applied)
    int hi;  // latest valid placement
};

// Placement window of position v! given the path predecessor and own J time.
SegmentWindow window_of(int pred_time, int own_time, int total) {
    SegmentWindow w;
    w.lo = pred_time + 1;                  // -1 for path starts
    w.hi = own_time >= 0 ? own_time : total;
    return w;
}

}  // namespace

Circuit spt_flow(const MeasurementPattern& p, const Flow& flow) {
    const OpenGraph& g = p.graph;
    auto violations = verify_flow(g, flow);
    if (!violations.empty())
        throw std::invalid_argument("spt_flow requires a valid flow: " +
                                    violations.front().condition + " " +
                                    violations.front().detail);

    // Path cover induced by the flow function.
    std::vector<bool> is_target(g.size(), false);
    for (int fv : flow.f)
        if (fv >= 0) is_target[static_cast<std::size_t>(fv)] = true;
    PathCover cover;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (is_target[v]) continue;
        std::vector<int> path{static_cast<int>(v)};
        int cur = static_cast<int>(v);
        while (flow.f[static_cast<std::size_t>(cur)] >= 0) {
            cur = flow.f[static_cast<std::size_t>(cur)];
            path.push_back(cur);
        }
        cover.paths.push_back(std::move(path));
    }
    auto cover_violations = verify_path_cover(g, cover);
    if (!cover_violations.empty()) throw std::logic_error("flow did not induce a path cover");

    Circuit c;
    c.wires = path_ids(g, cover);
    auto wire_of = wire_by_vertex_id(c.wires);

    std::vector<int> jt = j_schedule(g, flow.order);
    int total = 0;
    for (int t : jt) total = std::max(total, t + 1);

    // Windows per vertex position v!.
    std::vector<int> pred(g.size(), -1);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (flow.f[v] >= 0) pred[static_cast<std::size_t>(flow.f[v])] = static_cast<int>(v);
    auto window = [&](int v) {
        int pt = pred[static_cast<std::size_t>(v)] >= 0
                     ? jt[static_cast<std::size_t>(pred[static_cast<std::size_t>(v)])]
                     : -1;
        return window_of(pt, jt[static_cast<std::size_t>(v)], total);
    };

    // Consistency of the position order: generators u! < v! from path arcs
    // and from arcs (u -> w) with w adjacent to v must be acyclic.
    {
        std::vector<std::vector<int>> succ(g.size());
        for (std::size_t u = 0; u < g.size(); ++u) {
            int fu = flow.f[u];
            if (fu < 0) continue;
            succ[u].push_back(fu);
            for (int v : g.neighbors(fu).members())
                if (v != static_cast<int>(u)) succ[u].push_back(v);
        }
        std::vector<int> state(g.size(), 0);
        std::function<bool(int)> cyclic = [&](int v) -> bool {
            if (state[static_cast<std::size_t>(v)] == 1) return true;
            if (state[static_cast<std::size_t>(v)] == 2) return false;
            state[static_cast<std::size_t>(v)] = 1;
            for (int w : succ[static_cast<std::size_t>(v)])
                if (cyclic(w)) return true;
            state[static_cast<std::size_t>(v)] = 2;
            return false;
        };
        for (std::size_t v = 0; v < g.size(); ++v)
            if (cyclic(static_cast<int>(v)))
                throw std::logic_error("position order of the flow circuit is cyclic");
    }

    // Bucket CZ-gates at the earliest placement both windows allow.
    std::set<std::pair<int, int>> path_edges;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (flow.f[v] >= 0)
            path_edges.insert(std::minmax(static_cast<int>(v), flow.f[v]));
    std::vector<std::vector<Gate>> bucket(static_cast<std::size_t>(total) + 1);
    for (auto [u, v] : g.edges()) {
        if (path_edges.count({u, v})) continue;
        SegmentWindow wu = window(u), wv = window(v);
        int lo = std::max(wu.lo, wv.lo), hi = std::min(wu.hi, wv.hi);
        if (lo > hi) throw std::logic_error("flow circuit has an unplaceable CZ-gate");
        bucket[static_cast<std::size_t>(lo)].push_back(
            Gate::cz(wire_of.at(g.id_of(u)), wire_of.at(g.id_of(v))));
    }
    std::vector<int> j_at(static_cast<std::size_t>(total), -1);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (jt[v] >= 0) j_at[static_cast<std::size_t>(jt[v])] = static_cast<int>(v);

    for (int t = 0; t <= total; ++t) {
        auto& gates = bucket[static_cast<std::size_t>(t)];
        std::sort(gates.begin(), gates.end(), [](const Gate& a, const Gate& b) {
            return std::pair(a.wire_a, a.wire_b) < std::pair(b.wire_a, b.wire_b);
        });
        for (auto& gt : gates) c.gates.push_back(gt);
        if (t < total) {
            int v = j_at[static_cast<std::size_t>(t)];
            int id = g.id_of(v);
            c.gates.push_back(Gate::j(wire_of.at(id), p.angle_of(v), id));
        }
    }
    return c;
}

PatternWithFlow circuit_to_pattern(const Circuit& c) {
    for (const auto& g : c.gates)
        if (g.kind != GateKind::J && g.kind != GateKind::CZ)
            throw std::invalid_argument("reverse transformation supports J and CZ gates only");

    std::size_t w = c.wire_count();
    std::vector<int> j_seen(w, 0);
    std::vector<int> j_total(w, 0);
    for (const auto& g : c.gates)
        if (g.kind == GateKind::J) ++j_total[static_cast<std::size_t>(g.wire)];

    // Wire w owns vertices base[w] .. base[w] + j_total[w]; the k-th segment
    // of the wire belongs to its k-th vertex.
    std::vector<int> base(w, 0);
    for (std::size_t i = 1; i < w; ++i) base[i] = base[i - 1] + j_total[i - 1] + 1;
    auto vertex_at = [&](int wire, int seg) { return base[static_cast<std::size_t>(wire)] + seg; };

    GraphDescription d;
    int n = w ? base[w - 1] + j_total[w - 1] + 1 : 0;
    for (int v = 0; v < n; ++v) d.vertices.push_back(v);
    std::map<int, double> angles;
    std::set<std::pair<int, int>> edges;
    auto toggle_edge = [&](int a, int b) {
        auto key = std::minmax(a, b);
        if (!edges.insert(key).second) edges.erase(key);
    };
    for (std::size_t i = 0; i < w; ++i)
        for (int k = 0; k < j_total[i]; ++k)
            toggle_edge(vertex_at(static_cast<int>(i), k), vertex_at(static_cast<int>(i), k + 1));

    int time = 0;
    std::vector<int> j_time_of_vertex(static_cast<std::size_t>(n), -1);
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::J) {
            int v = vertex_at(g.wire, j_seen[static_cast<std::size_t>(g.wire)]);
            angles[v] = g.angle;
            j_time_of_vertex[static_cast<std::size_t>(v)] = time++;
            ++j_seen[static_cast<std::size_t>(g.wire)];
        } else {
            toggle_edge(vertex_at(g.wire_a, j_seen[static_cast<std::size_t>(g.wire_a)]),
                        vertex_at(g.wire_b, j_seen[static_cast<std::size_t>(g.wire_b)]));
        }
    }
    for (auto [u, v] : edges) d.edges.emplace_back(u, v);
    for (std::size_t i = 0; i < w; ++i) {
        d.inputs.push_back(vertex_at(static_cast<int>(i), 0));
        d.outputs.push_back(vertex_at(static_cast<int>(i), j_total[i]));
    }

    PatternWithFlow out{MeasurementPattern{OpenGraph::from_description(d), {}}, Flow{}};
    const OpenGraph& graph = out.pattern.graph;
    out.pattern.angles.assign(graph.size(), 0.0);
    for (auto& [v, a] : angles) out.pattern.angles[static_cast<std::size_t>(graph.index_of(v))] = a;

    out.flow.f.assign(graph.size(), -1);
    for (std::size_t i = 0; i < w; ++i)
        for (int k = 0; k < j_total[i]; ++k)
            out.flow.f[static_cast<std::size_t>(graph.index_of(vertex_at(static_cast<int>(i), k)))] =
                graph.index_of(vertex_at(static_cast<int>(i), k + 1));

    // One layer per J-gate, later gates in lower layers; outputs at layer 0.
    Layering order;
    order.layers.assign(static_cast<std::size_t>(time) + 1, VertexSet(graph.size()));
    for (int v = 0; v < n; ++v) {
        int idx = graph.index_of(v);
        int t = j_time_of_vertex[static_cast<std::size_t>(v)];
        std::size_t layer = t < 0 ? 0 : static_cast<std::size_t>(time - t);
        order.layers[layer].add(idx);
    }
    while (order.layers.size() > 1 && order.layers.back().empty()) order.layers.pop_back();
    out.flow.order = order;
    return out;
}

LayeredCircuit parallelize_j(const Circuit& c) {
    if (c.rounds.empty() && c.prologue_end != c.gates.size())
        throw std::invalid_argument("circuit lacks translator round annotations");

    LayeredCircuit out;
    out.wires = c.wires;
    for (std::size_t i = 0; i < c.prologue_end; ++i) out.prologue.push_back(c.gates[i]);

    std::vector<std::vector<Gate>> tails;
    for (std::size_t r = 0; r < c.rounds.size(); ++r) {
        const auto& span = c.rounds[r];
        LayeredCircuit::Block block;

        std::set<int> pending;  // wires whose J is still ahead inside the span
        for (std::size_t i = span.spt_begin; i < span.spt_end; ++i)
            if (c.gates[i].kind == GateKind::J) pending.insert(c.gates[i].wire);

        std::vector<Gate> converted;
        for (std::size_t i = span.spt_begin; i < span.spt_end; ++i) {
            const Gate& g = c.gates[i];
            if (g.kind == GateKind::J) {
                if (!pending.count(g.wire))
                    throw std::invalid_argument("block not reducible: repeated J on a wire");
                pending.erase(g.wire);
                block.j_layer.push_back(g);
                continue;
            }
            if (g.kind != GateKind::CZ)
                throw std::invalid_argument("block not reducible: unexpected gate kind");
            bool a_pending = pending.count(g.wire_a), b_pending = pending.count(g.wire_b);
            if (a_pending == b_pending)
                throw std::invalid_argument("block not reducible: CZ not adjacent to one J");
            // J Z = X J: the pending side's J slides before the gate, which
            // becomes a CNOT controlled by the already-measured side.
            int control = a_pending ? g.wire_b : g.wire_a;
            int target = a_pending ? g.wire_a : g.wire_b;
            converted.push_back(Gate::cx(control, target));
        }
        block.cliffords = converted;
        tails.emplace_back(c.gates.begin() + static_cast<std::ptrdiff_t>(span.spt_end),
                           c.gates.begin() + static_cast<std::ptrdiff_t>(span.end));
        out.blocks.push_back(std::move(block));
    }

    // Every layer's Cliffords stay with its block except the last round's,
    // which forms the final output-local block.
    for (std::size_t r = 0; r + 1 < tails.size(); ++r)
        for (auto& g : tails[r])
            out.blocks[r].cliffords.push_back(g);

    LayeredCircuit::Block final_block;
    if (!tails.empty())
        final_block.cliffords = tails.back();
    else {
        // Depth-0 circuit: the prologue is already output-local.
        final_block.cliffords = out.prologue;
        out.prologue.clear();
    }
    out.blocks.push_back(std::move(final_block));
    return out;
}

}  // namespace gflowc
