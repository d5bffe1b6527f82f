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

#include "star/decoder.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <queue>

#include "star/frame_simulator.h"
#include "star/matching.h"
#include "star/parallel.h"

namespace star {

namespace {

struct EdgeAccumulator {
    // Probability of an odd number of mechanisms firing, split by observable flip.
    double q[2] = {0, 0};
    void add(double p, bool flip) {
        q[flip] = q[flip] * (1 - p) + p * (1 - q[flip]);
    }
};

int64_t to_fixed(double w) {
    return (int64_t)std::llround(w * MatchingGraph::DISTANCE_SCALE);
}

}  // namespace

void MatchingGraph::compute_distances() {
    size_t n = num_nodes();
    std::vector<std::vector<std::pair<uint32_t, size_t>>> adj(n);
    for (size_t e = 0; e < edges.size(); e++) {
        adj[edges[e].a].push_back({edges[e].b, e});
        adj[edges[e].b].push_back({edges[e].a, e});
    }
    distance_.assign(n * n, INFINITE_DISTANCE);
    parity_.assign(n * n, 0);
    using Item = std::pair<int64_t, uint32_t>;
    for (uint32_t s = 0; s < n; s++) {
        int64_t *dist = &distance_[s * n];
        uint8_t *par = &parity_[s * n];
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        dist[s] = 0;
        heap.push({0, s});
        while (!heap.empty()) {
            auto [du, u] = heap.top();
            heap.pop();
            if (du != dist[u]) {
                continue;
            }
            // Paths may end at the boundary but never pass through it.
            if (u == boundary() && u != s) {
                continue;
            }
            for (auto [v, e] : adj[u]) {
                int64_t dv = du + to_fixed(edges[e].weight);
                if (dv < dist[v]) {
                    dist[v] = dv;
                    par[v] = par[u] ^ (uint8_t)edges[e].flips_observable;
                    heap.push({dv, v});
                }
            }
        }
    }
}

DetectorGraph build_detector_graph(const Circuit &circuit, const std::vector<uint8_t> &detector_parts,
                                   std::array<uint32_t, 2> part_observables, double p) {
    size_t n_det = circuit.detectors().size();
    if (detector_parts.size() != n_det) {
        throw std::invalid_argument("detector_parts must label every detector");
    }
    DetectorGraph graph;
    graph.part_of = detector_parts;
    graph.node_of.resize(n_det);
    for (uint32_t k = 0; k < n_det; k++) {
        MatchingGraph &g = graph.parts.at(detector_parts[k]);
        graph.node_of[k] = (uint32_t)g.detectors.size();
        g.detectors.push_back(k);
    }
    for (int g = 0; g < 2; g++) {
        graph.parts[g].observable = part_observables[g];
    }

    std::array<std::map<std::pair<uint32_t, uint32_t>, EdgeAccumulator>, 2> acc;
    std::vector<uint64_t> words(n_det);
    const FrameSimulator *last = nullptr;
    std::array<std::vector<uint32_t>, 2> fired;
    auto describe = [&](uint32_t site) {
        const FaultSite &s = circuit.fault_sites()[site];
        return std::string(fault_kind_name(s.kind)) + " fault at layer " + std::to_string(s.layer) + " on qubit " +
               std::to_string(s.q0);
    };
    visit_single_faults(circuit, [&](uint32_t site, uint8_t alt, const FrameSimulator &sim, uint8_t lane) {
        if (lane == 0 || last != &sim) {
            for (size_t k = 0; k < n_det; k++) {
                words[k] = sim.detector(k);
            }
            last = &sim;
        }
        double q = alternative_coefficient(circuit.fault_sites()[site].kind).to_double() * p;
        fired[0].clear();
        fired[1].clear();
        for (uint32_t k = 0; k < n_det; k++) {
            if (lane_bit(words[k], lane)) {
                fired[detector_parts[k]].push_back(graph.node_of[k]);
            }
        }
        (void)alt;
        for (int g = 0; g < 2; g++) {
            bool flip = lane_bit(sim.observable(part_observables[g]), lane);
            const auto &f = fired[g];
            if (f.size() > 2) {
                throw ScheduleInvalidError(describe(site) + " flips " + std::to_string(f.size()) +
                                           " detectors of one matching graph");
            }
            if (f.empty()) {
                if (flip) {
                    throw ScheduleInvalidError(describe(site) + " flips a logical observable undetectably");
                }
                continue;
            }
            uint32_t a = f[0];
            uint32_t b = f.size() == 2 ? f[1] : graph.parts[g].boundary();
            acc[g][{std::min(a, b), std::max(a, b)}].add(q, flip);
        }
    });

    for (int g = 0; g < 2; g++) {
        for (const auto &[key, e] : acc[g]) {
            double q = e.q[0] * (1 - e.q[1]) + e.q[1] * (1 - e.q[0]);
            if (!(q > 0)) {
                continue;
            }
            q = std::min(q, 0.5 - 1e-12);
            graph.parts[g].edges.push_back({key.first, key.second, q, std::log((1 - q) / q), e.q[1] > e.q[0]});
        }
        graph.parts[g].compute_distances();
    }
    return graph;
}

DetectorGraph build_detector_graph(const MemoryExperiment &experiment, double p) {
    return build_detector_graph(experiment.circuit, experiment.detector_parts(), {0, 1}, p);
}

MatchingResult decode(const MatchingGraph &graph, std::span<const uint32_t> defects) {
    MatchingResult result;
    size_t k = defects.size();
    uint32_t bnd = graph.boundary();
    auto add_pair = [&](uint32_t a, uint32_t b) {
        result.pairs.push_back({a, b});
        result.total_weight += (double)graph.distance(a, b) / MatchingGraph::DISTANCE_SCALE;
        result.flips_observable ^= graph.path_parity(a, b);
    };
    if (k == 0) {
        return result;
    }
    if (k == 1) {
        add_pair(defects[0], bnd);
        return result;
    }
    if (k == 2) {
        uint32_t a = defects[0], b = defects[1];
        if (graph.distance(a, b) <= graph.distance(a, bnd) + graph.distance(b, bnd)) {
            add_pair(a, b);
        } else {
            add_pair(a, bnd);
            add_pair(b, bnd);
        }
        return result;
    }

    // Defects are nodes 0..k-1 and their boundary copies k..2k-1.
    std::vector<WeightedEdge> edges;
    for (size_t i = 0; i < k; i++) {
        edges.push_back({(int)i, (int)(k + i), graph.distance(defects[i], bnd)});
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            edges.push_back({(int)(k + i), (int)(k + j), 0});
            int64_t dij = graph.distance(defects[i], defects[j]);
            if (dij <= graph.distance(defects[i], bnd) + graph.distance(defects[j], bnd)) {
                edges.push_back({(int)i, (int)j, dij});
            }
        }
    }
    std::vector<int> mate = min_weight_perfect_matching((int)(2 * k), edges);
    for (size_t i = 0; i < k; i++) {
        size_t m = (size_t)mate[i];
        if (m >= k) {
            add_pair(defects[i], bnd);
        } else if (m > i) {
            add_pair(defects[i], defects[m]);
        }
    }
    return result;
}

std::array<bool, 2> predict_observables(const DetectorGraph &graph, std::span<const uint32_t> fired) {
    std::array<std::vector<uint32_t>, 2> defects;
    for (uint32_t k : fired) {
        defects[graph.part_of[k]].push_back(graph.node_of[k]);
    }
    return {decode(graph.parts[0], defects[0]).flips_observable, decode(graph.parts[1], defects[1]).flips_observable};
}

double binomial_sigma(uint64_t k, uint64_t n) {
    if (n == 0) {
        return 0;
    }
    double r = (double)k / (double)n;
    return std::sqrt(r * (1 - r) / (double)n);
}

double LogicalErrorEstimate::sigma_z() const {
    return binomial_sigma(failures_z, shots);
}

double LogicalErrorEstimate::sigma_x() const {
    return binomial_sigma(failures_x, shots);
}

LogicalErrorEstimate estimate_logical_error_rate(int d, double p, uint64_t shots, uint64_t seed, int threads) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    if (!(p >= 0 && p <= 0.1)) {
        throw std::invalid_argument("physical error rate must lie in [0, 0.1]");
    }
    MemoryExperiment experiment = build_memory_circuit(build_layout(d));
    // Edge weights need a positive rate; at p = 0 no detector ever fires anyway.
    DetectorGraph graph = build_detector_graph(experiment, p > 0 ? p : 1e-3);
    const Circuit &circuit = experiment.circuit;
    size_t n_det = circuit.detectors().size();

    constexpr uint64_t CHUNK = 1024;
    size_t n_chunks = (size_t)((shots + CHUNK - 1) / CHUNK);
    std::vector<std::array<uint64_t, 2>> counts(n_chunks, {0, 0});
    parallel_for(n_chunks, threads, [&](size_t chunk) {
        FrameSimulator sim(circuit);
        std::vector<FaultEvent> events;
        std::array<std::vector<uint32_t>, 64> fired;
        uint64_t begin = chunk * CHUNK;
        uint64_t end = std::min(shots, begin + CHUNK);
        for (uint64_t b = begin; b < end; b += 64) {
            uint8_t lanes = (uint8_t)std::min<uint64_t>(64, end - b);
            events.clear();
            for (uint8_t lane = 0; lane < lanes; lane++) {
                std::mt19937_64 rng = shot_stream(seed, b + lane);
                sample_fault_events(circuit, p, rng, lane, events);
            }
            std::sort(events.begin(), events.end());
            sim.run(events);
            for (auto &f : fired) {
                f.clear();
            }
            for (uint32_t k = 0; k < n_det; k++) {
                uint64_t w = sim.detector(k);
                while (w) {
                    fired[std::countr_zero(w)].push_back(k);
                    w &= w - 1;
                }
            }
            uint64_t obs_z = sim.observable(0), obs_x = sim.observable(1);
            for (uint8_t lane = 0; lane < lanes; lane++) {
                if (fired[lane].empty()) {
                    counts[chunk][0] += lane_bit(obs_z, lane);
                    counts[chunk][1] += lane_bit(obs_x, lane);
                    continue;
                }
                std::array<bool, 2> pred = predict_observables(graph, fired[lane]);
                counts[chunk][0] += pred[0] != lane_bit(obs_z, lane);
                counts[chunk][1] += pred[1] != lane_bit(obs_x, lane);
            }
        }
    });
    LogicalErrorEstimate est;
    est.d = d;
    est.p = p;
    est.shots = shots;
    for (const auto &c : counts) {
        est.failures_z += c[0];
        est.failures_x += c[1];
    }
    return est;
}

SingleFaultSweep sweep_single_faults(const MemoryExperiment &experiment, const DetectorGraph &graph) {
    const Circuit &circuit = experiment.circuit;
    size_t n_det = circuit.detectors().size();
    SingleFaultSweep sweep;
    std::vector<uint32_t> fired;
    visit_single_faults(circuit, [&](uint32_t, uint8_t, const FrameSimulator &sim, uint8_t lane) {
        fired.clear();
        std::array<uint32_t, 2> per_part{0, 0};
        for (uint32_t k = 0; k < n_det; k++) {
            if (lane_bit(sim.detector(k), lane)) {
                fired.push_back(k);
                per_part[graph.part_of[k]]++;
            }
        }
        sweep.max_detectors_per_part = std::max({sweep.max_detectors_per_part, per_part[0], per_part[1]});
        std::array<bool, 2> pred = predict_observables(graph, fired);
        bool fail = false;
        for (int g = 0; g < 2; g++) {
            fail |= pred[g] != lane_bit(sim.observable(graph.parts[g].observable), lane);
        }
        sweep.faults++;
        sweep.failures += fail;
    });
    return sweep;
}

}  // namespace star
