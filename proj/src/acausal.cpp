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

#include "gflowc/acausal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gflowc/sim.hpp"
#include "gflowc/translate.hpp"

namespace gflowc {

namespace {

// Global index (in J-only counting) of each wire's k-th J-gate.
std::vector<std::vector<int>> j_indices(const Circuit& c) {
    std::vector<std::vector<int>> out(c.wire_count());
    int t = 0;
    for (const auto& g : c.gates)
        if (g.kind == GateKind::J) out[static_cast<std::size_t>(g.wire)].push_back(t++);
    return out;
}

struct Window {
    int lo;
    int hi;
};

Window window_of(const std::vector<std::vector<int>>& jidx, int total, Position p) {
    const auto& wire = jidx.at(static_cast<std::size_t>(p.wire));
    if (p.segment < 0 || p.segment > static_cast<int>(wire.size()))
        throw std::invalid_argument("position segment out of range");
    Window w;
    w.lo = p.segment == 0 ? 0 : wire[static_cast<std::size_t>(p.segment - 1)] + 1;
    w.hi = p.segment < static_cast<int>(wire.size()) ? wire[static_cast<std::size_t>(p.segment)]
                                                     : total;
    return w;
}

int total_j(const Circuit& c) {
    int t = 0;
    for (const auto& g : c.gates)
        if (g.kind == GateKind::J) ++t;
    return t;
}

}  // namespace

std::vector<bool> temporal_consistency(const Circuit& c) {
    auto jidx = j_indices(c);
    int total = total_j(c);
    std::vector<bool> out;
    out.reserve(c.gates.size());
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::ACCZ || g.kind == GateKind::ACCX) {
            Window a = window_of(jidx, total, g.pos_a);
            Window b = window_of(jidx, total, g.pos_b);
            out.push_back(std::max(a.lo, b.lo) <= std::min(a.hi, b.hi));
        } else {
            out.push_back(true);
        }
    }
    return out;
}

AcausalCircuit spt_gflow(const MeasurementPattern& p) {
    const OpenGraph& g = p.graph;
    PathCover cover = build_path_cover(g);

    AcausalCircuit out;
    out.graph = g;
    out.circuit.wires = path_ids(g, cover);

    std::map<int, int> wire_of, seg_of;
    for (std::size_t w = 0; w < out.circuit.wires.size(); ++w)
        for (std::size_t k = 0; k < out.circuit.wires[w].size(); ++k) {
            wire_of[out.circuit.wires[w][k]] = static_cast<int>(w);
            seg_of[out.circuit.wires[w][k]] = static_cast<int>(k);
        }

    // Layer-ordered schedule shared with the graph-surgery translation.
    std::vector<int> order = measured_order(g);
    std::map<int, int> j_time;
    for (std::size_t t = 0; t < order.size(); ++t) j_time[order[t]] = static_cast<int>(t);
    int total = static_cast<int>(order.size());

    auto vertex_window = [&](int id) {
        int w = wire_of.at(id), s = seg_of.at(id);
        Window win;
        win.lo = s == 0 ? 0 : j_time.at(out.circuit.wires[static_cast<std::size_t>(w)]
                                                         [static_cast<std::size_t>(s - 1)]) +
                                  1;
        win.hi = j_time.count(id) ? j_time.at(id) : total;
        return win;
    };

    std::set<std::pair<int, int>> path_arcs;
    for (const auto& path : out.circuit.wires)
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            path_arcs.insert(std::minmax(path[k], path[k + 1]));

    // Bucket two-qubit gates by placement slot (number of preceding J-gates).
    std::vector<std::vector<Gate>> bucket(static_cast<std::size_t>(total) + 1);
    for (auto [ui, vi] : g.edges()) {
        int u = g.id_of(ui), v = g.id_of(vi);
        if (path_arcs.count(std::minmax(u, v))) continue;
        Window wu = vertex_window(u), wv = vertex_window(v);
        if (std::max(wu.lo, wv.lo) <= std::min(wu.hi, wv.hi)) {
            bucket[static_cast<std::size_t>(std::max(wu.lo, wv.lo))].push_back(
                Gate::cz(wire_of.at(u), wire_of.at(v)));
        } else {
            Gate acc = Gate::accz({wire_of.at(u), seg_of.at(u)}, {wire_of.at(v), seg_of.at(v)});
            bucket[static_cast<std::size_t>(std::min(wu.hi, wv.hi))].push_back(acc);
        }
    }

    for (int t = 0; t <= total; ++t) {
        auto& gates = bucket[static_cast<std::size_t>(t)];
        std::stable_sort(gates.begin(), gates.end(), [](const Gate& a, const Gate& b) {
            if (a.kind != b.kind) return a.kind == GateKind::CZ;
            return std::tuple(a.wire_a, a.wire_b, a.pos_a, a.pos_b) <
                   std::tuple(b.wire_a, b.wire_b, b.pos_a, b.pos_b);
        });
        for (auto& gt : gates) out.circuit.gates.push_back(gt);
        if (t < total) {
            int id = order[static_cast<std::size_t>(t)];
            out.circuit.gates.push_back(
                Gate::j(wire_of.at(id), p.angle_of(g.index_of(id)), id));
        }
    }
    out.consistent = temporal_consistency(out.circuit);
    return out;
}

PostselectedCircuit expand_acausal(const AcausalCircuit& c) {
    const Circuit& cc = c.circuit;
    auto jidx = j_indices(cc);
    int total = total_j(cc);

    PostselectedCircuit out;
    out.main_wires = static_cast<int>(cc.wire_count());
    out.total_wires = out.main_wires;

    struct Event {
        int slot;
        std::size_t index;  // original gate index
        int sub;            // leg order within one expansion
        Gate gate;
    };
    std::vector<Event> events;
    int js_before = 0;
    for (std::size_t i = 0; i < cc.gates.size(); ++i) {
        const Gate& g = cc.gates[i];
        if (g.kind == GateKind::J) {
            events.push_back({js_before, i, 0, g});
            ++js_before;
            continue;
        }
        if (g.kind == GateKind::CZ || g.kind == GateKind::CX) {
            events.push_back({js_before, i, 0, g});
            continue;
        }
        // Acausal gate: three-CZ gadget over a fresh ancilla pair, each main
        // leg clamped into its anchor segment.
        int anc_a = out.total_wires++;
        int anc_b = out.total_wires++;
        out.prep_plus.push_back(anc_a);
        out.prep_plus.push_back(anc_b);
        out.postselect_plus.push_back(anc_a);
        out.postselect_plus.push_back(anc_b);
        Window wa = window_of(jidx, total, g.pos_a);
        Window wb = window_of(jidx, total, g.pos_b);
        int pa = std::clamp(js_before, wa.lo, wa.hi);
        int pb = std::clamp(js_before, wb.lo, wb.hi);
        events.push_back({pa, i, 0, Gate::cz(g.pos_a.wire, anc_a)});
        events.push_back({std::min(pa, pb), i, 1, Gate::cz(anc_a, anc_b)});
        Gate far_leg = g.kind == GateKind::ACCZ ? Gate::cz(anc_b, g.pos_b.wire)
                                                : Gate::cx(anc_b, g.pos_b.wire);
        events.push_back({pb, i, 2, far_leg});
    }
    std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.slot != b.slot) return a.slot < b.slot;
        if (a.index != b.index) return a.index < b.index;
        return a.sub < b.sub;
    });
    for (auto& e : events) out.gates.push_back(e.gate);
    return out;
}

std::vector<std::pair<int, int>> cross_edge_ids(const AcausalCircuit& c) {
    std::vector<std::pair<int, int>> out;
    auto vertex_at = [&](Position p) {
        return c.circuit.wires.at(static_cast<std::size_t>(p.wire))
            .at(static_cast<std::size_t>(p.segment));
    };
    std::vector<int> seen(c.circuit.wire_count(), 0);
    for (const auto& g : c.circuit.gates) {
        switch (g.kind) {
            case GateKind::J: ++seen[static_cast<std::size_t>(g.wire)]; break;
            case GateKind::CZ:
                out.push_back(std::minmax(
                    c.circuit.wires.at(static_cast<std::size_t>(g.wire_a))
                        .at(static_cast<std::size_t>(seen[static_cast<std::size_t>(g.wire_a)])),
                    c.circuit.wires.at(static_cast<std::size_t>(g.wire_b))
                        .at(static_cast<std::size_t>(seen[static_cast<std::size_t>(g.wire_b)]))));
                break;
            case GateKind::ACCZ:
            case GateKind::ACCX:
                out.push_back(std::minmax(vertex_at(g.pos_a), vertex_at(g.pos_b)));
                break;
            case GateKind::CX: break;  // conjugating CNOTs are not cross gates
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RewriteReport apply_acausal_identity(AcausalCircuit& c, AcausalIdentity which, IdentitySite site) {
    auto& gates = c.circuit.gates;
    if (site.gate >= gates.size()) return {false, "site out of range"};
    Gate& g = gates[site.gate];

    switch (which) {
        case AcausalIdentity::A: {
            if (g.kind != GateKind::ACCZ) return {false, "site is not an acausal CZ"};
            if (!temporal_consistency(c.circuit)[site.gate])
                return {false, "positions share no time slice"};
            g.kind = GateKind::CZ;
            g.wire_a = std::min(g.pos_a.wire, g.pos_b.wire);
            g.wire_b = std::max(g.pos_a.wire, g.pos_b.wire);
            break;
        }
        case AcausalIdentity::B: {
            if (g.kind != GateKind::ACCX) return {false, "site is not an acausal CNOT"};
            if (g.pos_b.segment < 1) return {false, "no J-gate precedes the target segment"};
            Position moved{g.pos_b.wire, g.pos_b.segment - 1};
            Gate replacement = Gate::accz(g.pos_a, moved);
            g = replacement;
            break;
        }
        case AcausalIdentity::C: {
            if (g.kind != GateKind::ACCX) return {false, "site is not an acausal CNOT"};
            if (site.other >= gates.size() || site.other == site.gate)
                return {false, "partner site out of range"};
            Gate& other = gates[site.other];
            if (other.kind != GateKind::CZ && other.kind != GateKind::ACCZ)
                return {false, "partner is not a CZ-gate"};
            // Locate the partner endpoint at the CNOT's target position.
            Position far;
            if (other.kind == GateKind::ACCZ) {
                if (other.pos_a == g.pos_b)
                    far = other.pos_b;
                else if (other.pos_b == g.pos_b)
                    far = other.pos_a;
                else
                    return {false, "partner does not touch the target position"};
            } else {
                // Ordinary CZ: endpoint segments inferred from its list slot.
                std::vector<int> seen(c.circuit.wire_count(), 0);
                for (std::size_t i = 0; i < site.other; ++i)
                    if (gates[i].kind == GateKind::J) ++seen[static_cast<std::size_t>(gates[i].wire)];
                Position ea{other.wire_a, seen[static_cast<std::size_t>(other.wire_a)]};
                Position eb{other.wire_b, seen[static_cast<std::size_t>(other.wire_b)]};
                if (ea == g.pos_b)
                    far = eb;
                else if (eb == g.pos_b)
                    far = ea;
                else
                    return {false, "partner does not touch the target position"};
            }
            // CZ CX = CX CZ' CZ: the CNOT hops before the CZ and spawns the
            // gate between its control and the far endpoint.
            Gate spawned = Gate::accz(g.pos_a, far);
            std::size_t lo = std::min(site.gate, site.other);
            std::size_t hi = std::max(site.gate, site.other);
            std::swap(gates[lo], gates[hi]);
            gates.insert(gates.begin() + static_cast<std::ptrdiff_t>(lo), spawned);
            break;
        }
        case AcausalIdentity::D: {
            if (g.kind != GateKind::ACCZ) return {false, "site is not an acausal CZ"};
            for (std::size_t j = 0; j < gates.size(); ++j) {
                if (j == site.gate) continue;
                if (gates[j].kind == GateKind::ACCZ && gates[j].pos_a == g.pos_a &&
                    gates[j].pos_b == g.pos_b) {
                    std::size_t lo = std::min(site.gate, j), hi = std::max(site.gate, j);
                    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(hi));
                    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(lo));
                    c.consistent = temporal_consistency(c.circuit);
                    return {true, "cancelled an acausal pair"};
                }
            }
            return {false, "no matching acausal CZ to cancel"};
        }
    }
    c.consistent = temporal_consistency(c.circuit);
    return {true, ""};
}

namespace {

std::map<int, double> angles_from_gates(const Circuit& c) {
    std::map<int, double> out;
    std::vector<int> seen(c.wire_count(), 0);
    for (const auto& g : c.gates) {
        if (g.kind != GateKind::J) continue;
        int v = c.wires.at(static_cast<std::size_t>(g.wire))
                    .at(static_cast<std::size_t>(seen[static_cast<std::size_t>(g.wire)]++));
        out[v] = g.angle;
    }
    return out;
}

}  // namespace

Circuit rewrite_acausal_to_ordinary(const AcausalCircuit& ac, const MatchingGflow& first_mg,
                                    RewriteTrace* trace) {
    if (!ac.graph) throw std::invalid_argument("rewrite requires the source open graph");

    // Rebuild the working graph from the circuit itself: path arcs plus the
    // cross-gate pairs are exactly its edges.
    GraphDescription d;
    for (const auto& path : ac.circuit.wires)
        for (std::size_t k = 0; k < path.size(); ++k) {
            d.vertices.push_back(path[k]);
            if (k + 1 < path.size()) d.edges.emplace_back(path[k], path[k + 1]);
        }
    for (auto [u, v] : cross_edge_ids(ac)) d.edges.emplace_back(u, v);
    GraphDescription src = ac.graph->description();
    d.inputs = src.inputs;
    d.outputs = src.outputs;
    OpenGraph rebuilt = OpenGraph::from_description(d);
    if (!(rebuilt == *ac.graph))
        throw std::invalid_argument("circuit gates do not match the source graph");

    auto angle_by_id = angles_from_gates(ac.circuit);
    auto wire_of = [&] {
        std::map<int, int> m;
        for (std::size_t w = 0; w < ac.circuit.wires.size(); ++w)
            for (int id : ac.circuit.wires[w]) m[id] = static_cast<int>(w);
        return m;
    }();

    Circuit out;
    out.wires = ac.circuit.wires;

    std::vector<std::vector<Gate>> blocks;  // last measured layer first
    OpenGraph current = rebuilt;
    bool first_round = true;
    while (!current.non_outputs().empty()) {
        auto gmax = find_max_delayed_gflow(current);
        if (!gmax) throw std::logic_error("rewrite lost the gflow");
        MatchingGflow mg = build_matching_gflow(current, *gmax);
        if (first_round) {
            if (mg.processing_order != first_mg.processing_order || mg.h != first_mg.h)
                throw std::invalid_argument("matching gflow does not belong to this circuit");
            first_round = false;
        }

        // Drop the output-local CZ-gates into this layer's tail, then mirror
        // the conjugating CNOT pair insertion gate by gate: commuting one
        // CNOT copy backward toggles, per target v, the cross gates between
        // h(v_i) and N(v) (identities c and b), and equal pairs cancel (d).
        std::vector<std::pair<int, int>> intra;
        for (auto [u, v] : current.edges())
            if (current.outputs().contains(u) && current.outputs().contains(v))
                intra.emplace_back(u, v);
        OpenGraph cur = current.with_edges_toggled(intra);
        const OpenGraph g0 = cur;

        std::set<std::pair<int, int>> path_arcs;
        for (const auto& path : ac.circuit.wires)
            for (std::size_t k = 0; k + 1 < path.size(); ++k)
                path_arcs.insert(std::minmax(path[k], path[k + 1]));

        std::vector<Gate> tail;
        for (int v : mg.processing_order) {
            int h = mg.h[static_cast<std::size_t>(v)];
            const VertexSet& gv = *mg.modified.g[static_cast<std::size_t>(v)];
            VertexSet toggle = odd_neighborhood(g0, gv) ^ cur.neighbors(h);
            std::vector<std::pair<int, int>> toggled;
            for (int y : toggle.members()) toggled.emplace_back(h, y);
            cur = cur.with_edges_toggled(toggled);
            for (int t : (gv ^ VertexSet::of(current.size(), {h})).members())
                tail.push_back(Gate::cx(wire_of.at(current.id_of(h)),
                                        wire_of.at(current.id_of(t))));
            if (trace && blocks.empty()) {
                std::vector<std::pair<int, int>> cross;
                for (auto [a, b] : cur.edges()) {
                    int ia = cur.id_of(a), ib = cur.id_of(b);
                    auto key = std::minmax(ia, ib);
                    if (!path_arcs.count(key)) cross.push_back(key);
                }
                std::sort(cross.begin(), cross.end());
                trace->step_cross_edges.push_back(std::move(cross));
            }
        }

        // All cross gates at the matched outputs are now temporally
        // consistent (identity a) and interleave with the layer's J-gates.
        std::vector<Gate> block;
        for (std::size_t m = mg.processing_order.size(); m-- > 0;) {
            int v = mg.processing_order[m];
            int id = current.id_of(v);
            block.push_back(Gate::j(wire_of.at(id), angle_by_id.at(id), id));
            int h = mg.h[static_cast<std::size_t>(v)];
            VertexSet partners = cur.neighbors(h);
            partners.remove(v);
            for (int u : partners.members())
                block.push_back(Gate::cz(wire_of.at(id), wire_of.at(current.id_of(u))));
        }
        for (std::size_t t = tail.size(); t-- > 0;) block.push_back(tail[t]);
        for (auto [u, v] : intra)
            block.push_back(Gate::cz(wire_of.at(current.id_of(u)), wire_of.at(current.id_of(v))));
        blocks.push_back(std::move(block));

        VertexSet v1 = gmax->order.layers[1];
        VertexSet new_outputs = v1 ^ current.outputs().minus(mg.matched_outputs);
        current = cur.without(mg.matched_outputs, current.inputs(), new_outputs);
    }

    // Terminal residual: whatever cross gates remain act before every J.
    std::vector<Gate> prologue;
    for (auto [u, v] : current.edges())
        prologue.push_back(
            Gate::cz(wire_of.at(current.id_of(u)), wire_of.at(current.id_of(v))));
    std::sort(prologue.begin(), prologue.end(), [](const Gate& a, const Gate& b) {
        return std::pair(a.wire_a, a.wire_b) < std::pair(b.wire_a, b.wire_b);
    });

    out.gates = prologue;
    out.prologue_end = out.gates.size();
    for (std::size_t b = blocks.size(); b-- > 0;) {
        Circuit::RoundSpan span;
        span.spt_begin = out.gates.size();
        std::size_t js_and_czs = 0;
        for (const auto& gt : blocks[b]) {
            if (gt.kind == GateKind::CX) break;
            ++js_and_czs;
        }
        for (const auto& gt : blocks[b]) out.gates.push_back(gt);
        span.spt_end = span.spt_begin + js_and_czs;
        span.end = out.gates.size();
        out.rounds.push_back(span);
    }
    return out;
}

namespace {

Eigen::RowVector2cd sign_bra(int s) {
    Eigen::RowVector2cd b;
    b << 1.0, s >= 0 ? 1.0 : -1.0;
    return b / std::sqrt(2.0);
}

void require_unitary(const Eigen::Matrix2cd& u, const char* name) {
    if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::domain_error(std::string(name) + " is not unitary");
}

Eigen::Matrix2cd pauli_correction(int s_a, int s_b) {
    Eigen::Matrix2cd p;
    if (s_a > 0 && s_b > 0) p = Eigen::Matrix2cd::Identity();
    else if (s_a > 0 && s_b < 0) { p << 0, 1, 1, 0; }                                  // X
    else if (s_a < 0 && s_b < 0) { p << 0, Complex(0, -1), Complex(0, 1), 0; }         // Y
    else { p << 1, 0, 0, -1; }                                                         // Z
    return p;
}

// Raw branch map: <s_a s_b| CZ_AB [U'_C?] U_A |phi>_A CZ_BC |+>_B |+>_C.
Eigen::Matrix2cd raw_branch(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd* uprime_early,
                            int s_a, int s_b) {
    // Qubits ordered (A, B, C); columns are the A-basis inputs.
    Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(8, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cq = 0; cq < 2; ++cq) {
                double sign = (b && cq) ? -1.0 : 1.0;  // CZ_BC on |++>
                amp(a * 4 + b * 2 + cq, a) = 0.5 * sign;
            }
    // U on A.
    for (int b = 0; b < 2; ++b)
        for (int cq = 0; cq < 2; ++cq) {
            Eigen::RowVectorXcd r0 = amp.row(0 + b * 2 + cq);
            Eigen::RowVectorXcd r1 = amp.row(4 + b * 2 + cq);
            amp.row(0 + b * 2 + cq) = u(0, 0) * r0 + u(0, 1) * r1;
            amp.row(4 + b * 2 + cq) = u(1, 0) * r0 + u(1, 1) * r1;
        }
    if (uprime_early) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Eigen::RowVectorXcd r0 = amp.row(a * 4 + b * 2 + 0);
                Eigen::RowVectorXcd r1 = amp.row(a * 4 + b * 2 + 1);
                amp.row(a * 4 + b * 2 + 0) = (*uprime_early)(0, 0) * r0 + (*uprime_early)(0, 1) * r1;
                amp.row(a * 4 + b * 2 + 1) = (*uprime_early)(1, 0) * r0 + (*uprime_early)(1, 1) * r1;
            }
    }
    // CZ_AB.
    for (int cq = 0; cq < 2; ++cq) amp.row(4 + 2 + cq) = -amp.row(4 + 2 + cq);
    // Contract A then B.
    Eigen::RowVector2cd ba = sign_bra(s_a), bb = sign_bra(s_b);
    Eigen::MatrixXcd on_bc = ba(0) * amp.topRows(4) + ba(1) * amp.bottomRows(4);
    Eigen::Matrix2cd out;
    out.row(0) = bb(0) * on_bc.row(0) + bb(1) * on_bc.row(2);
    out.row(1) = bb(0) * on_bc.row(1) + bb(1) * on_bc.row(3);
    return out;
}

}  // namespace

TeleportEvaluation teleport_expand(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& uprime,
                                   TeleportPolicy policy) {
    require_unitary(u, "U");
    require_unitary(uprime, "U'");
    TeleportEvaluation out;
    if (policy == TeleportPolicy::Postselect) {
        out.branches.push_back({+1, +1, uprime * raw_branch(u, nullptr, +1, +1)});
        return out;
    }
    for (int s_a : {+1, -1})
        for (int s_b : {+1, -1})
            out.branches.push_back(
                {s_a, s_b, uprime * pauli_correction(s_a, s_b) * raw_branch(u, nullptr, s_a, s_b)});
    return out;
}

Eigen::Matrix2cd teleport_branch_postponed(const Eigen::Matrix2cd& u,
                                           const Eigen::Matrix2cd& uprime, int s_a, int s_b) {
    require_unitary(u, "U");
    require_unitary(uprime, "U'");
    Eigen::Matrix2cd correction = uprime * pauli_correction(s_a, s_b) * uprime.inverse();
    return correction * raw_branch(u, &uprime, s_a, s_b);
}

double sent_back_probability(const Eigen::Vector2cd& phi, const Eigen::RowVector2cd& basis_bra) {
    // Amplitude <+|_A <+|_B CZ_AB |phi>_A <m'|_C CZ_BC |+>_B |+>_C.
    Complex amp = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cq = 0; cq < 2; ++cq) {
                double cz_bc = (b && cq) ? -1.0 : 1.0;
                double cz_ab = (a && b) ? -1.0 : 1.0;
                amp += 0.5 * phi(a) * cz_bc * cz_ab * basis_bra(cq) * 0.5;
            }
    return 4.0 * std::norm(amp);
}

}  // namespace gflowc
