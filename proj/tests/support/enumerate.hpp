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

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "gflowc/corpus.hpp"
#include "gflowc/flow.hpp"
#include "gflowc/gf2.hpp"

namespace gflowc::test_support {

/**
 * Every gflow layer structure of a small graph, by exhausting ordered set
 * partitions of the vertices (all part orders of all partitions) and keeping
 * those where each non-output vertex admits a correcting set of non-input
 * vertices in strictly lower layers whose odd neighborhood meets its own and
 * higher layers exactly in itself. Any valid gflow induces such an ordered
 * partition with identical layers, so delay comparisons against this family
 * cover all gflows of the graph.
 */
inline std::vector<Gflow> enumerate_gflows(const OpenGraph& g) {
    std::size_t n = g.size();
    if (n > 7) throw std::invalid_argument("enumeration is capped at 7 vertices");
    std::vector<Gflow> out;

    auto try_layers = [&](const std::vector<std::vector<int>>& parts) {
        std::vector<int> layer_of(n, -1);
        for (std::size_t k = 0; k < parts.size(); ++k)
            for (int v : parts[k]) layer_of[static_cast<std::size_t>(v)] = static_cast<int>(k);

        Gflow cand;
        cand.order.layers.assign(parts.size(), VertexSet(n));
        for (std::size_t k = 0; k < parts.size(); ++k)
            for (int v : parts[k]) cand.order.layers[k].add(v);

        cand.g.assign(n, std::nullopt);
        VertexSet non_out = g.non_outputs();
        for (std::size_t v = 0; v < n; ++v) {
            if (!non_out.contains(static_cast<int>(v))) continue;
            std::vector<int> columns;
            for (std::size_t u = 0; u < n; ++u)
                if (layer_of[u] < layer_of[v] && !g.inputs().contains(static_cast<int>(u)))
                    columns.push_back(static_cast<int>(u));
            Gf2System sys;
            for (std::size_t w = 0; w < n; ++w) {
                if (layer_of[w] < layer_of[v]) continue;
                VertexSet row(columns.size());
                for (std::size_t c = 0; c < columns.size(); ++c)
                    if (g.adjacent(static_cast<int>(w), columns[c]))
                        row.add(static_cast<int>(c));
                sys.rows.push_back(row);
                sys.rhs.push_back(w == v);
            }
            auto sol = solve_gf2(sys);
            if (!sol) return;
            VertexSet s(n);
            for (int c : sol->members()) s.add(columns[static_cast<std::size_t>(c)]);
            cand.g[v] = s;
        }
        if (verify_gflow(g, cand).empty()) out.push_back(std::move(cand));
    };

    // Unordered partitions via restricted growth strings, then every order
    // of the parts.
    std::vector<int> rgs(n, 0);
    std::function<void(std::size_t, int)> recurse = [&](std::size_t v, int used) {
        if (v == n) {
            std::vector<std::vector<int>> parts(static_cast<std::size_t>(used));
            for (std::size_t u = 0; u < n; ++u)
                parts[static_cast<std::size_t>(rgs[u])].push_back(static_cast<int>(u));
            std::vector<int> perm(static_cast<std::size_t>(used));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<std::vector<int>> ordered;
                for (int k : perm) ordered.push_back(parts[static_cast<std::size_t>(k)]);
                try_layers(ordered);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int k = 0; k <= used; ++k) {
            rgs[v] = k;
            recurse(v + 1, std::max(used, k + 1));
        }
    };
    if (n > 0) recurse(0, 0);
    return out;
}

}  // namespace gflowc::test_support
