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

#ifndef STAR_DECODER_H
#define STAR_DECODER_H

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "star/circuit.h"
#include "star/surface_code.h"

namespace star {

/// Raised when a single fault flips more than two detectors of one graph, or flips an
/// observable without flipping any detector.
class ScheduleInvalidError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct GraphEdge {
    uint32_t a;
    uint32_t b;
    double probability;
    double weight;
    bool flips_observable;
};

/// One of the two independent matching problems (X-type or Z-type detectors).
/// Nodes 0..n-1 are detectors; node n is the boundary.
class MatchingGraph {
   public:
    std::vector<uint32_t> detectors;
    uint32_t observable = 0;
    std::vector<GraphEdge> edges;

    uint32_t boundary() const { return (uint32_t)detectors.size(); }
    size_t num_nodes() const { return detectors.size() + 1; }

    /// Computes all-pairs shortest paths; called by build_detector_graph.
    void compute_distances();
    /// Shortest-path weight in fixed point (units of 1/DISTANCE_SCALE), or INFINITE_DISTANCE.
    int64_t distance(uint32_t a, uint32_t b) const { return distance_[a * num_nodes() + b]; }
    /// Observable parity along the chosen shortest path.
    bool path_parity(uint32_t a, uint32_t b) const { return parity_[a * num_nodes() + b]; }

    static constexpr double DISTANCE_SCALE = 1 << 20;
    static constexpr int64_t INFINITE_DISTANCE = int64_t{1} << 50;

   private:
    std::vector<int64_t> distance_;
    std::vector<uint8_t> parity_;
};

struct DetectorGraph {
    std::array<MatchingGraph, 2> parts;
    /// For every detector of the circuit: its part and node index inside that part.
    std::vector<uint8_t> part_of;
    std::vector<uint32_t> node_of;
};

/// Builds the graph from every single fault of the circuit at physical error rate p.
///
/// `detector_parts[k]` says which graph detector k belongs to; `part_observables[g]` is the
/// observable that graph g protects. Parallel edges merge as q1(1-q2) + q2(1-q1).
DetectorGraph build_detector_graph(const Circuit &circuit, const std::vector<uint8_t> &detector_parts,
                                   std::array<uint32_t, 2> part_observables, double p);
DetectorGraph build_detector_graph(const MemoryExperiment &experiment, double p);

struct MatchingResult {
    /// Matched node pairs; the second entry equals the graph's boundary() for boundary matches.
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    double total_weight = 0;
    bool flips_observable = false;
};

/// Exact minimum-weight matching of the given detector nodes, each either paired with another
/// or sent to the boundary.
MatchingResult decode(const MatchingGraph &graph, std::span<const uint32_t> defects);

/// Predicted flip of each part's observable for a set of fired detectors (circuit indices).
std::array<bool, 2> predict_observables(const DetectorGraph &graph, std::span<const uint32_t> fired);

struct LogicalErrorEstimate {
    int d = 0;
    double p = 0;
    uint64_t shots = 0;
    uint64_t failures_z = 0;
    uint64_t failures_x = 0;

    double rate_z() const { return shots ? (double)failures_z / (double)shots : 0; }
    double rate_x() const { return shots ? (double)failures_x / (double)shots : 0; }
    double sigma_z() const;
    double sigma_x() const;
};

/// Binomial standard error of k successes in n trials.
double binomial_sigma(uint64_t k, uint64_t n);

/// Monte Carlo memory experiment: logical Z and X failure counts after decoding.
/// Results depend only on (d, p, shots, seed), not on the thread count.
LogicalErrorEstimate estimate_logical_error_rate(int d, double p, uint64_t shots, uint64_t seed,
                                                 int threads = 0);

struct SingleFaultSweep {
    uint64_t faults = 0;
    uint64_t failures = 0;
    uint32_t max_detectors_per_part = 0;
};

/// Decodes every single elementary fault of the experiment and counts logical failures.
SingleFaultSweep sweep_single_faults(const MemoryExperiment &experiment, const DetectorGraph &graph);

}  // namespace star

#endif
