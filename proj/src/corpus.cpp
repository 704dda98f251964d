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

#include "gflowc/corpus.hpp"

#include <numbers>
#include <random>

#include "gflowc/flow.hpp"

namespace gflowc {

MeasurementPattern random_pattern(std::uint64_t seed, const CorpusOptions& opt) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(opt.min_vertices, opt.max_vertices);
    int n = n_dist(rng);
    std::uniform_int_distribution<int> out_dist(1, std::min(opt.max_outputs, n));
    int n_out = out_dist(rng);
    std::uniform_int_distribution<int> in_dist(1, n_out);
    int n_in = in_dist(rng);
    std::uniform_real_distribution<double> density_dist(opt.min_density, opt.max_density);
    double density = density_dist(rng);

    GraphDescription d;
    for (int v = 0; v < n; ++v) d.vertices.push_back(v);

    // Outputs first, then inputs from the remaining vertices (overlapping
    // I and O only when the graph is too small to separate them).
    std::vector<int> shuffled = d.vertices;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (int k = 0; k < n_out; ++k) d.outputs.push_back(shuffled[static_cast<std::size_t>(k)]);
    for (int k = 0; k < n_in; ++k)
        d.inputs.push_back(shuffled[static_cast<std::size_t>((n_out + k) % n)]);

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < density) d.edges.emplace_back(u, v);

    std::uniform_int_distribution<int> angle_dist(0, 2 * opt.angle_denominator - 1);
    OpenGraph g = OpenGraph::from_description(d);
    std::map<int, double> angles;
    for (int v : g.non_outputs().members())
        angles[g.id_of(v)] =
            angle_dist(rng) * std::numbers::pi / static_cast<double>(opt.angle_denominator);
    return make_pattern(g, angles);
}

std::vector<MeasurementPattern> corpus_with_gflow(std::uint64_t seed, int count,
                                                  const CorpusOptions& opt) {
    std::vector<MeasurementPattern> out;
    std::uint64_t trial = 0;
    while (static_cast<int>(out.size()) < count) {
        MeasurementPattern p = random_pattern(seed + 0x9e3779b97f4a7c15ULL * ++trial, opt);
        if (find_max_delayed_gflow(p.graph)) out.push_back(std::move(p));
        if (trial > 200000ULL * static_cast<std::uint64_t>(count))
            throw std::runtime_error("corpus generation stalled");
    }
    return out;
}

}  // namespace gflowc
