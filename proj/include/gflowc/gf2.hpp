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

#include <optional>
#include <vector>

#include "gflowc/graph.hpp"

namespace gflowc {

/**
 * Linear system A x = b over F2. Rows are VertexSets over a shared column
 * universe; the rhs is one bit per row.
 */
struct Gf2System {
    std::vector<VertexSet> rows;
    std::vector<bool> rhs;

    std::size_t columns() const { return rows.empty() ? 0 : rows.front().universe(); }
};

/**
 * Solves A x = b. Echelonization pivots on the lowest column index available
 * per row, and free variables are set to zero, so the returned solution is
 * deterministic for a fixed row order. Returns nullopt when inconsistent.
 */
std::optional<VertexSet> solve_gf2(const Gf2System& system);

/// Rank of the row space.
std::size_t gf2_rank(const std::vector<VertexSet>& rows);

}  // namespace gflowc
