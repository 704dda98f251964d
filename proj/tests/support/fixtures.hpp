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

#include <numbers>

#include "gflowc/graph.hpp"
#include "gflowc/pattern.hpp"

namespace gflowc::fixtures {

// Single vertex that is both input and output.
inline OpenGraph g_triv() {
    return OpenGraph::from_description({{1}, {}, {1}, {1}, {}});
}

// 1 - 2 with I = {1}, O = {2}.
inline OpenGraph g_line() {
    return OpenGraph::from_description({{1, 2}, {{1, 2}}, {1}, {2}, {}});
}

inline MeasurementPattern p_line(double alpha) {
    return make_pattern(g_line(), {{1, alpha}});
}

// 1 - 2 - 3 with I = {1}, O = {3}.
inline OpenGraph g_line3() {
    return OpenGraph::from_description({{1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {3}, {}});
}

inline MeasurementPattern p_line3(double a1, double a2) {
    return make_pattern(g_line3(), {{1, a1}, {2, a2}});
}

// Two isolated vertices; no gflow.
inline OpenGraph g_nogflow() {
    return OpenGraph::from_description({{1, 2}, {}, {1}, {2}, {}});
}

// The six-vertex graph with gflow but no flow. Inputs 1,2,3 stand for
// i1,i2,i3 and outputs 4,5,6 for o1,o2,o3; the edge set realizes the
// adjacency columns (1,1,1), (1,1,0), (0,1,1) over the inputs.
inline constexpr int kI1 = 1, kI2 = 2, kI3 = 3, kO1 = 4, kO2 = 5, kO3 = 6;

inline OpenGraph g_fig2() {
    return OpenGraph::from_description({{1, 2, 3, 4, 5, 6},
                                        {{1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}},
                                        {1, 2, 3},
                                        {4, 5, 6},
                                        {}});
}

inline MeasurementPattern p_fig2() {
    using std::numbers::pi;
    return make_pattern(g_fig2(), {{1, pi / 4}, {2, pi / 2}, {3, 3 * pi / 4}});
}

}  // namespace gflowc::fixtures
