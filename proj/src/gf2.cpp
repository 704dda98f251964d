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

#include "gflowc/gf2.hpp"

#include <stdexcept>

namespace gflowc {

std::optional<VertexSet> solve_gf2(const Gf2System& system) {
    if (system.rows.size() != system.rhs.size())
        throw std::invalid_argument("row/rhs size mismatch");
    std::size_t cols = system.columns();
    std::vector<VertexSet> rows = system.rows;
    std::vector<bool> rhs = system.rhs;
    for (auto& r : rows)
        if (r.universe() != cols) throw std::invalid_argument("inconsistent row universes");

    // Forward elimination, lowest column index first.
    std::vector<int> pivot_row_of_col(cols, -1);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows.size(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && !rows[pivot].contains(static_cast<int>(col))) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[next_row]);
        std::swap(rhs[pivot], rhs[next_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next_row && rows[r].contains(static_cast<int>(col))) {
                rows[r] ^= rows[next_row];
                rhs[r] = rhs[r] != rhs[next_row];
            }
        }
        pivot_row_of_col[col] = static_cast<int>(next_row);
        ++next_row;
    }
    // A zero row with rhs 1 certifies inconsistency.
    for (std::size_t r = next_row; r < rows.size(); ++r)
        if (rhs[r]) return std::nullopt;

    VertexSet x(cols);
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_row_of_col[col] >= 0 && rhs[static_cast<std::size_t>(pivot_row_of_col[col])])
            x.add(static_cast<int>(col));
    return x;
}

std::size_t gf2_rank(const std::vector<VertexSet>& rows) {
    if (rows.empty()) return 0;
    std::vector<VertexSet> work = rows;
    std::size_t cols = work.front().universe();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < work.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].contains(static_cast<int>(col))) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[pivot], work[rank]);
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != rank && work[r].contains(static_cast<int>(col))) work[r] ^= work[rank];
        ++rank;
    }
    return rank;
}

}  // namespace gflowc
