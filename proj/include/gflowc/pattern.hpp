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

#include <map>

#include "gflowc/graph.hpp"

namespace gflowc {

/// A measurement pattern: open graph plus one measurement angle (radians)
/// per non-output vertex.
struct MeasurementPattern {
    OpenGraph graph;
    std::vector<double> angles;  // dense index; zero on outputs

    double angle_of(int index) const { return angles.at(static_cast<std::size_t>(index)); }
};

/// Builds a pattern, requiring angles exactly on the non-outputs (by id).
MeasurementPattern make_pattern(const OpenGraph& g, const std::map<int, double>& angles_by_id);

}  // namespace gflowc
