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

#include "gflowc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gflowc {

using nlohmann::json;

Gate Gate::j(int wire, double angle, int vertex_id) {
    Gate g;
    g.kind = GateKind::J;
    g.wire = wire;
    g.angle = angle;
    g.vertex_id = vertex_id;
    return g;
}

Gate Gate::cz(int a, int b) {
    Gate g;
    g.kind = GateKind::CZ;
    g.wire_a = std::min(a, b);
    g.wire_b = std::max(a, b);
    return g;
}

Gate Gate::cx(int control, int target) {
    Gate g;
    g.kind = GateKind::CX;
    g.wire_a = control;
    g.wire_b = target;
    return g;
}

Gate Gate::accz(Position a, Position b) {
    Gate g;
    g.kind = GateKind::ACCZ;
    if (b < a) std::swap(a, b);
    g.pos_a = a;
    g.pos_b = b;
    g.wire_a = a.wire;
    g.wire_b = b.wire;
    return g;
}

Gate Gate::accx(Position control, Position target) {
    Gate g;
    g.kind = GateKind::ACCX;
    g.pos_a = control;
    g.pos_b = target;
    g.wire_a = control.wire;
    g.wire_b = target.wire;
    return g;
}

bool Gate::operator==(const Gate& o) const {
    return kind == o.kind && wire == o.wire && angle == o.angle && wire_a == o.wire_a &&
           wire_b == o.wire_b && pos_a == o.pos_a && pos_b == o.pos_b;
}

std::vector<int> Circuit::j_counts() const {
    std::vector<int> counts(wires.size(), 0);
    for (const auto& g : gates)
        if (g.kind == GateKind::J) ++counts.at(static_cast<std::size_t>(g.wire));
    return counts;
}

Circuit LayeredCircuit::flatten() const {
    Circuit c;
    c.wires = wires;
    for (const auto& g : prologue) c.gates.push_back(g);
    for (const auto& b : blocks) {
        for (const auto& g : b.j_layer) c.gates.push_back(g);
        for (const auto& g : b.cliffords) c.gates.push_back(g);
    }
    return c;
}

namespace {

json gate_to_json(const Gate& g) {
    switch (g.kind) {
        case GateKind::J: return json{{"gate", "J"}, {"wire", g.wire}, {"angle", g.angle}};
        case GateKind::CZ: return json{{"gate", "CZ"}, {"wires", {g.wire_a, g.wire_b}}};
        case GateKind::CX:
            return json{{"gate", "CX"}, {"control", g.wire_a}, {"target", g.wire_b}};
        case GateKind::ACCZ:
            return json{{"gate", "ACCZ"},
                        {"positions",
                         {{g.pos_a.wire, g.pos_a.segment}, {g.pos_b.wire, g.pos_b.segment}}}};
        case GateKind::ACCX: break;
    }
    throw std::invalid_argument("acausal CNOT gates are rewrite-internal and not serialized");
}

Gate gate_from_json(const json& j) {
    std::string kind = j.at("gate").get<std::string>();
    if (kind == "J")
        return Gate::j(j.at("wire").get<int>(), j.at("angle").get<double>());
    if (kind == "CZ") {
        auto w = j.at("wires");
        return Gate::cz(w.at(0).get<int>(), w.at(1).get<int>());
    }
    if (kind == "CX") return Gate::cx(j.at("control").get<int>(), j.at("target").get<int>());
    if (kind == "ACCZ") {
        auto p = j.at("positions");
        return Gate::accz({p.at(0).at(0).get<int>(), p.at(0).at(1).get<int>()},
                          {p.at(1).at(0).get<int>(), p.at(1).at(1).get<int>()});
    }
    throw std::invalid_argument("unknown gate record: " + kind);
}

}  // namespace

std::string to_json_lines(const Circuit& c) {
    std::ostringstream out;
    for (const auto& g : c.gates) out << gate_to_json(g).dump() << "\n";
    return out.str();
}

std::string to_json_lines(const PostselectedCircuit& c) {
    std::ostringstream out;
    for (int w : c.prep_plus) out << json{{"prep", "+"}, {"wire", w}}.dump() << "\n";
    for (const auto& g : c.gates) out << gate_to_json(g).dump() << "\n";
    for (int w : c.postselect_plus) out << json{{"postselect", "+"}, {"wire", w}}.dump() << "\n";
    return out.str();
}

Circuit circuit_from_json_lines(const std::string& text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    int max_wire = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Gate g = gate_from_json(json::parse(line));
        for (int w : {g.wire, g.wire_a, g.wire_b, g.pos_a.wire, g.pos_b.wire})
            max_wire = std::max(max_wire, w);
        c.gates.push_back(g);
    }
    c.wires.assign(static_cast<std::size_t>(max_wire + 1), {});
    return c;
}

std::string text_diagram(const Circuit& c) {
    std::size_t w = c.wire_count();
    std::vector<std::string> rows(w);
    auto pad_all = [&](std::size_t len) {
        for (auto& r : rows) r.append(len - r.size(), '-');
    };
    auto width = [&] {
        std::size_t m = 0;
        for (auto& r : rows) m = std::max(m, r.size());
        return m;
    };
    for (const auto& g : c.gates) {
        pad_all(width());
        std::ostringstream cell;
        switch (g.kind) {
            case GateKind::J: {
                cell << "[J(" << g.angle << ")]";
                rows[static_cast<std::size_t>(g.wire)] += cell.str();
                break;
            }
            case GateKind::CZ:
            case GateKind::CX:
            case GateKind::ACCZ: {
                std::size_t a = static_cast<std::size_t>(g.wire_a);
                std::size_t b = static_cast<std::size_t>(g.wire_b);
                const char* am = g.kind == GateKind::CX ? "*" : (g.kind == GateKind::ACCZ ? "@" : "*");
                const char* bm = g.kind == GateKind::CX ? "X" : (g.kind == GateKind::ACCZ ? "@" : "*");
                rows[a] += am;
                rows[b] += bm;
                break;
            }
            case GateKind::ACCX:
                rows[static_cast<std::size_t>(g.pos_a.wire)] += "@";
                rows[static_cast<std::size_t>(g.pos_b.wire)] += "x";
                break;
        }
        pad_all(width() + 1);
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < w; ++i) {
        out << "w" << i;
        if (i < c.wires.size() && !c.wires[i].empty()) {
            out << "(";
            for (std::size_t k = 0; k < c.wires[i].size(); ++k)
                out << (k ? ">" : "") << c.wires[i][k];
            out << ")";
        }
        out << ": -" << rows[i] << "\n";
    }
    return out.str();
}

std::vector<std::string> gate_multiset(const Circuit& c) {
    std::vector<std::string> keys;
    char buf[96];
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::J:
                std::snprintf(buf, sizeof buf, "J w%d a%.15g", g.wire, g.angle);
                break;
            case GateKind::CZ:
                std::snprintf(buf, sizeof buf, "CZ %d %d", g.wire_a, g.wire_b);
                break;
            case GateKind::CX:
                std::snprintf(buf, sizeof buf, "CX %d %d", g.wire_a, g.wire_b);
                break;
            case GateKind::ACCZ:
                std::snprintf(buf, sizeof buf, "ACCZ %d:%d %d:%d", g.pos_a.wire, g.pos_a.segment,
                              g.pos_b.wire, g.pos_b.segment);
                break;
            case GateKind::ACCX:
                std::snprintf(buf, sizeof buf, "ACCX %d:%d %d:%d", g.pos_a.wire, g.pos_a.segment,
                              g.pos_b.wire, g.pos_b.segment);
                break;
        }
        keys.emplace_back(buf);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace gflowc
