// Copyright 2026 Google LLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STAR_MATCHING_H
#define STAR_MATCHING_H

#include <cstdint>
#include <vector>

namespace star {

struct WeightedEdge {
    int u;
    int v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with dual
/// variables, O(n^3)). With max_cardinality set, returns a maximum-weight matching among the
/// maximum-cardinality ones. Returns mate[v] (or -1 if v is unmatched).
///
/// Weights are integers so that all dual updates stay exact.
std::vector<int> max_weight_matching(int num_vertices, const std::vector<WeightedEdge> &edges,
                                     bool max_cardinality);

/// Minimum-weight perfect matching. Throws std::invalid_argument if no perfect matching exists.
std::vector<int> min_weight_perfect_matching(int num_vertices, const std::vector<WeightedEdge> &edges);

}  // namespace star

#endif
