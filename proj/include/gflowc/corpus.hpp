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

#include <cstdint>

#include "gflowc/pattern.hpp"

namespace gflowc {

struct CorpusOptions {
    int max_vertices = 10;
    int min_vertices = 4;
    int max_outputs = 3;
    double min_density = 0.3;
    double max_density = 0.7;
    int angle_denominator = 7;  // angles are multiples of pi/denominator
};

/// One seeded random open graph with measurement angles; not guaranteed to
/// have gflow.
MeasurementPattern random_pattern(std::uint64_t seed, const CorpusOptions& opt = {});

/// The first `count` seeded random patterns whose graphs have gflow,
/// generated from consecutive trial seeds derived from `seed`.
std::vector<MeasurementPattern> corpus_with_gflow(std::uint64_t seed, int count,
                                                  const CorpusOptions& opt = {});

}  // namespace gflowc
