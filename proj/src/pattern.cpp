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

#include "gflowc/pattern.hpp"

#include <stdexcept>

namespace gflowc {

MeasurementPattern make_pattern(const OpenGraph& g, const std::map<int, double>& angles_by_id) {
    MeasurementPattern p{g, std::vector<double>(g.size(), 0.0)};
    VertexSet covered(g.size());
    for (auto& [id, angle] : angles_by_id) {
        int v = g.index_of(id);
        if (g.outputs().contains(v))
            throw std::invalid_argument("angle given for output vertex " + std::to_string(id));
        p.angles[static_cast<std::size_t>(v)] = angle;
        covered.add(v);
    }
    if (covered != g.non_outputs())
        throw std::invalid_argument("angles must cover exactly the non-output vertices");
    return p;
}

}  // namespace gflowc
