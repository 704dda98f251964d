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

#include <string>

#include "gflowc/flow.hpp"
#include "gflowc/graph.hpp"
#include "gflowc/pathcover.hpp"
#include "gflowc/pattern.hpp"

namespace gflowc {

/**
 * Parses the open-graph file format:
 *   {"vertices":[ids], "edges":[[u,v],...], "inputs":[ids], "outputs":[ids],
 *    "angles":{"v": angle, ...}}
 * Angles are radians, given as numbers or as exact strings like "pi/4",
 * "3*pi/4", "-pi/2", "0". Unknown keys are rejected.
 */
GraphDescription parse_graph_json(const std::string& text);

std::string graph_to_json(const GraphDescription& d);

/// Exact angle strings "k*pi/n" (also plain numbers); throws on anything else.
double parse_angle(const std::string& text);

/// {"layers":[[ids],...], "g":{"v":[ids],...}}, layer 0 first.
std::string gflow_to_json(const OpenGraph& g, const Gflow& gf);

/// {"paths":[[ids,...],...]}.
std::string path_cover_to_json(const OpenGraph& g, const PathCover& cover);

MeasurementPattern pattern_from_description(const GraphDescription& d);

}  // namespace gflowc
