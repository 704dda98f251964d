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

#include "gflowc/io.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <json.hpp>

namespace gflowc {

using nlohmann::json;

double parse_angle(const std::string& text) {
    // Grammar: [-]k*pi/n | [-]pi/n | [-]k*pi | [-]pi | plain float.
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty angle");

    double sign = 1.0;
    if (s.front() == '-') {
        sign = -1.0;
        s.erase(s.begin());
    }
    auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        std::size_t used = 0;
        double value = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("malformed angle: " + text);
        return sign * value;
    }
    double k = 1.0, n = 1.0;
    std::string head = s.substr(0, pi_pos);
    std::string tail = s.substr(pi_pos + 2);
    if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("malformed angle: " + text);
        head.pop_back();
        std::size_t used = 0;
        k = std::stod(head, &used);
        if (used != head.size()) throw std::invalid_argument("malformed angle: " + text);
    }
    if (!tail.empty()) {
        if (tail.front() != '/') throw std::invalid_argument("malformed angle: " + text);
        tail.erase(tail.begin());
        std::size_t used = 0;
        n = std::stod(tail, &used);
        if (used != tail.size() || n == 0.0) throw std::invalid_argument("malformed angle: " + text);
    }
    return sign * k * std::numbers::pi / n;
}

GraphDescription parse_graph_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("graph file must hold a JSON object");
    static const std::set<std::string> known{"vertices", "edges", "inputs", "outputs", "angles"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("unknown key in graph file: " + it.key());

    GraphDescription d;
    for (auto& v : j.at("vertices")) d.vertices.push_back(v.get<int>());
    if (j.count("edges"))
        for (auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("edges must be vertex pairs");
            d.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
    if (j.count("inputs"))
        for (auto& v : j.at("inputs")) d.inputs.push_back(v.get<int>());
    if (j.count("outputs"))
        for (auto& v : j.at("outputs")) d.outputs.push_back(v.get<int>());
    if (j.count("angles")) {
        for (auto it = j.at("angles").begin(); it != j.at("angles").end(); ++it) {
            int v = std::stoi(it.key());
            if (it.value().is_string())
                d.angles[v] = parse_angle(it.value().get<std::string>());
            else
                d.angles[v] = it.value().get<double>();
        }
    }
    return d;
}

std::string graph_to_json(const GraphDescription& d) {
    json j;
    j["vertices"] = d.vertices;
    j["edges"] = json::array();
    for (auto [u, v] : d.edges) j["edges"].push_back({u, v});
    j["inputs"] = d.inputs;
    j["outputs"] = d.outputs;
    if (!d.angles.empty()) {
        json a = json::object();
        for (auto& [v, ang] : d.angles) a[std::to_string(v)] = ang;
        j["angles"] = a;
    }
    return j.dump();
}

std::string gflow_to_json(const OpenGraph& g, const Gflow& gf) {
    json j;
    j["layers"] = json::array();
    for (const auto& layer : gf.order.layers) {
        json l = json::array();
        for (int v : layer.members()) l.push_back(g.id_of(v));
        j["layers"].push_back(l);
    }
    json m = json::object();
    for (std::size_t v = 0; v < gf.g.size(); ++v) {
        if (!gf.g[v].has_value()) continue;
        json set = json::array();
        for (int u : gf.g[v]->members()) set.push_back(g.id_of(u));
        m[std::to_string(g.id_of(static_cast<int>(v)))] = set;
    }
    j["g"] = m;
    return j.dump();
}

std::string path_cover_to_json(const OpenGraph& g, const PathCover& cover) {
    json j;
    j["paths"] = json::array();
    for (const auto& ids : path_ids(g, cover)) j["paths"].push_back(ids);
    return j.dump();
}

MeasurementPattern pattern_from_description(const GraphDescription& d) {
    OpenGraph g = OpenGraph::from_description(d);
    return make_pattern(g, d.angles);
}

}  // namespace gflowc
