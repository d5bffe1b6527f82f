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

#include <random>

#include "gtest/gtest.h"
#include "star/frame_simulator.h"
#include "star/surface_code.h"

using namespace star;

namespace {

std::vector<uint32_t> fired_detectors(const FrameSimulator &sim, uint8_t lane) {
    std::vector<uint32_t> fired;
    for (uint32_t k = 0; k < sim.circuit().detectors().size(); k++) {
        if (lane_bit(sim.detector(k), lane)) {
            fired.push_back(k);
        }
    }
    return fired;
}

// Minimum over all edge subsets whose boundary equals the defect set.
double brute_force_correction(const MatchingGraph &g, const std::vector<uint32_t> &defects, bool &parity,
                              bool &unique) {
    size_t m = g.edges.size();
    double best = 1e300;
    int best_count = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); mask++) {
        std::vector<uint8_t> deg(g.num_nodes());
        double w = 0;
        bool par = false;
        for (size_t e = 0; e < m; e++) {
            if ((mask >> e) & 1) {
                deg[g.edges[e].a] ^= 1;
                deg[g.edges[e].b] ^= 1;
                w += g.edges[e].weight;
                par ^= g.edges[e].flips_observable;
            }
        }
        deg[g.boundary()] = 0;
        std::vector<uint8_t> want(g.num_nodes());
        for (uint32_t d : defects) {
            want[d] = 1;
        }
        if (deg != want) {
            continue;
        }
        if (w < best - 1e-6) {
            best = w;
            best_count = 1;
            parity = par;
        } else if (w < best + 1e-6) {
            best_count++;
        }
    }
    unique = best_count == 1;
    return best;
}

}  // namespace

TEST(decoder, edge_weights_are_log_likelihoods) {
    MemoryExperiment exp = build_memory_circuit(build_layout(3));
    DetectorGraph g = build_detector_graph(exp, 1e-3);
    for (const MatchingGraph &part : g.parts) {
        EXPECT_EQ(part.detectors.size(), exp.circuit.detectors().size() / 2);
        EXPECT_FALSE(part.edges.empty());
        for (const GraphEdge &e : part.edges) {
            EXPECT_GT(e.probability, 0);
            EXPECT_LT(e.probability, 0.5);
            EXPECT_NEAR(e.weight, std::log((1 - e.probability) / e.probability), 1e-9);
            EXPECT_LT(e.a, e.b);
        }
    }
}

TEST(decoder, measurement_flip_gives_time_edge) {
    MemoryExperiment exp = build_memory_circuit(build_layout(3));
    DetectorGraph g = build_detector_graph(exp, 1e-3);
    const Circuit &c = exp.circuit;
    const Plaquette &p = exp.layout.plaquettes[2];
    uint32_t m = c.measurement_index(ROUND_DEPTH * 2 - 1, p.measure_qubit);
    uint32_t a = exp.detector_index(2, 1);
    uint32_t b = exp.detector_index(2, 2);
    const MatchingGraph &part = g.parts[g.part_of[a]];
    bool found = false;
    for (const GraphEdge &e : part.edges) {
        if (e.a == g.node_of[a] && e.b == g.node_of[b]) {
            found = true;
            EXPECT_FALSE(e.flips_observable);
        }
    }
    EXPECT_TRUE(found);
    (void)m;
}

TEST(decoder, decode_matches_brute_force_on_random_graphs) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 150; trial++) {
        MatchingGraph g;
        uint32_t n = 3 + rng() % 5;
        g.detectors.resize(n);
        for (uint32_t a = 0; a <= n; a++) {
            for (uint32_t b = a + 1; b <= n; b++) {
                if (rng() % 3 == 0 && g.edges.size() < 14) {
                    double q = 0.01 + 0.4 * (double)(rng() % 1000) / 1000.0;
                    g.edges.push_back({a, b, q, std::log((1 - q) / q), (bool)(rng() & 1)});
                }
            }
        }
        // Every node reaches the boundary.
        for (uint32_t a = 0; a < n; a++) {
            g.edges.push_back({a, n, 0.05, std::log(0.95 / 0.05), false});
        }
        if (g.edges.size() > 18) {
            continue;
        }
        g.compute_distances();
        std::vector<uint32_t> defects;
        for (uint32_t a = 0; a < n; a++) {
            if (rng() & 1) {
                defects.push_back(a);
            }
        }
        bool parity = false;
        bool unique = false;
        double best = brute_force_correction(g, defects, parity, unique);
        MatchingResult r = decode(g, defects);
        ASSERT_NEAR(r.total_weight, best, 1e-4) << "trial " << trial;
        if (unique) {
            EXPECT_EQ(r.flips_observable, parity) << "trial " << trial;
        }
    }
}

TEST(decoder, single_fault_sweep_d3) {
    MemoryExperiment exp = build_memory_circuit(build_layout(3));
    DetectorGraph g = build_detector_graph(exp, 1e-3);
    SingleFaultSweep sweep = sweep_single_faults(exp, g);
    EXPECT_GT(sweep.faults, 1000u);
    EXPECT_EQ(sweep.failures, 0u);
    EXPECT_LE(sweep.max_detectors_per_part, 2u);
}

TEST(decoder, single_fault_sweep_d5) {
    MemoryExperiment exp = build_memory_circuit(build_layout(5));
    DetectorGraph g = build_detector_graph(exp, 1e-3);
    SingleFaultSweep sweep = sweep_single_faults(exp, g);
    EXPECT_EQ(sweep.failures, 0u);
}

TEST(decoder, fault_pairs_corrected_at_d5) {
    // Distance 5 corrects any two elementary faults when every edge counts the same.
    // With log-likelihood weights a pair of rare faults can lose to three likely ones.
    MemoryExperiment exp = build_memory_circuit(build_layout(5));
    DetectorGraph g = build_detector_graph(exp, 1e-3);
    for (MatchingGraph &part : g.parts) {
        for (GraphEdge &e : part.edges) {
            e.weight = 1;
        }
        part.compute_distances();
    }
    const Circuit &c = exp.circuit;
    std::vector<FaultEvent> singles;
    for (uint32_t s = 0; s < c.fault_sites().size(); s++) {
        for (uint8_t a = 0; a < num_alternatives(c.fault_sites()[s].kind); a++) {
            singles.push_back({s, a, 0});
        }
    }
    std::mt19937_64 rng(11);
    FrameSimulator sim(c);
    int failures = 0;
    for (int batch = 0; batch < 300; batch++) {
        std::vector<FaultEvent> events;
        for (uint8_t lane = 0; lane < 64; lane++) {
            FaultEvent a = singles[rng() % singles.size()];
            FaultEvent b = singles[rng() % singles.size()];
            if (a.site == b.site) {
                continue;
            }
            a.lane = b.lane = lane;
            events.push_back(a);
            events.push_back(b);
        }
        std::sort(events.begin(), events.end());
        sim.run(events);
        for (uint8_t lane = 0; lane < 64; lane++) {
            auto prediction = predict_observables(g, fired_detectors(sim, lane));
            failures += prediction[0] != lane_bit(sim.observable(0), lane);
            failures += prediction[1] != lane_bit(sim.observable(1), lane);
        }
    }
    EXPECT_EQ(failures, 0);
}

TEST(decoder, zero_noise_never_fails) {
    LogicalErrorEstimate e = estimate_logical_error_rate(3, 0, 5000, 1, 1);
    EXPECT_EQ(e.failures_z, 0u);
    EXPECT_EQ(e.failures_x, 0u);
    EXPECT_EQ(e.sigma_z(), 0);
    EXPECT_THROW(estimate_logical_error_rate(3, 0.2, 10, 1, 1), std::invalid_argument);
    EXPECT_THROW(estimate_logical_error_rate(4, 1e-3, 10, 1, 1), std::invalid_argument);
}

TEST(decoder, thread_count_does_not_change_results) {
    LogicalErrorEstimate a = estimate_logical_error_rate(3, 3e-3, 20000, 5, 1);
    LogicalErrorEstimate b = estimate_logical_error_rate(3, 3e-3, 20000, 5, 4);
    EXPECT_EQ(a.failures_z, b.failures_z);
    EXPECT_EQ(a.failures_x, b.failures_x);
}

TEST(decoder, second_order_rate_matches_pair_enumeration) {
    // At low p the failure rate is dominated by pairs of faults. Sum the exact pair
    // contributions over a random sample of pairs and compare with Monte Carlo
    // restricted to shots with exactly two faults.
    MemoryExperiment exp = build_memory_circuit(build_layout(3));
    const Circuit &c = exp.circuit;
    const double p = 1e-3;
    DetectorGraph g = build_detector_graph(exp, p);
    std::vector<FaultEvent> singles;
    for (uint32_t s = 0; s < c.fault_sites().size(); s++) {
        for (uint8_t a = 0; a < num_alternatives(c.fault_sites()[s].kind); a++) {
            singles.push_back({s, a, 0});
        }
    }
    size_t n_sites = c.fault_sites().size();
    // Probability that a failure occurs given exactly two faulty sites: average over
    // uniformly chosen site pairs and alternatives.
    std::mt19937_64 rng(12);
    FrameSimulator sim(c);
    uint64_t pairs = 0;
    uint64_t failing = 0;
    for (int batch = 0; batch < 2000; batch++) {
        std::vector<FaultEvent> events;
        for (uint8_t lane = 0; lane < 64; lane++) {
            uint32_t s1 = (uint32_t)(rng() % n_sites);
            uint32_t s2 = (uint32_t)(rng() % n_sites);
            if (s1 == s2) {
                s2 = (s2 + 1) % (uint32_t)n_sites;
            }
            events.push_back({s1, (uint8_t)(rng() % num_alternatives(c.fault_sites()[s1].kind)), lane});
            events.push_back({s2, (uint8_t)(rng() % num_alternatives(c.fault_sites()[s2].kind)), lane});
        }
        std::sort(events.begin(), events.end());
        sim.run(events);
        for (uint8_t lane = 0; lane < 64; lane++) {
            auto prediction = predict_observables(g, fired_detectors(sim, lane));
            failing += prediction[0] != lane_bit(sim.observable(0), lane);
            pairs++;
        }
    }
    double f_pair = (double)failing / (double)pairs;

    // Monte Carlo over real shots, keeping only those with exactly two faults.
    uint64_t two_fault_shots = 0;
    uint64_t two_fault_failures = 0;
    for (int batch = 0; batch < 8000; batch++) {
        std::vector<FaultEvent> events;
        std::vector<int> count(64);
        for (uint8_t lane = 0; lane < 64; lane++) {
            auto r = shot_stream(13, (uint64_t)batch * 64 + lane);
            size_t before = events.size();
            sample_fault_events(c, p, r, lane, events);
            count[lane] = (int)(events.size() - before);
        }
        std::sort(events.begin(), events.end());
        sim.run(events);
        for (uint8_t lane = 0; lane < 64; lane++) {
            if (count[lane] != 2) {
                continue;
            }
            auto prediction = predict_observables(g, fired_detectors(sim, lane));
            two_fault_failures += prediction[0] != lane_bit(sim.observable(0), lane);
            two_fault_shots++;
        }
    }
    double f_mc = (double)two_fault_failures / (double)two_fault_shots;
    double sigma = std::sqrt(f_pair * (1 - f_pair) / (double)two_fault_shots +
                             f_pair * (1 - f_pair) / (double)pairs);
    EXPECT_NEAR(f_mc, f_pair, 3 * sigma);
    EXPECT_GT(failing, 0u);
}

TEST(decoder, graph_distance_equals_code_distance) {
    // Fewest edges of an undetectable logical error: an odd-parity walk from the boundary
    // back to the boundary.
    for (int d : {3, 5, 7}) {
        MemoryExperiment exp = build_memory_circuit(build_layout(d));
        DetectorGraph g = build_detector_graph(exp, 1e-3);
        for (const MatchingGraph &m : g.parts) {
            size_t n = m.num_nodes();
            uint32_t bnd = m.boundary();
            std::vector<std::vector<std::pair<uint32_t, int>>> adj(n);
            for (const GraphEdge &e : m.edges) {
                adj[e.a].push_back({e.b, e.flips_observable});
                adj[e.b].push_back({e.a, e.flips_observable});
            }
            std::vector<int> hops(2 * n, -1);
            std::vector<std::pair<uint32_t, int>> frontier;
            for (auto [v, f] : adj[bnd]) {
                if (hops[2 * v + f] < 0) {
                    hops[2 * v + f] = 1;
                    frontier.push_back({v, f});
                }
            }
            int best = INT32_MAX;
            for (size_t i = 0; i < frontier.size(); i++) {
                auto [u, par] = frontier[i];
                for (auto [v, f] : adj[u]) {
                    int np = par ^ f;
                    if (v == bnd) {
                        if (np) {
                            best = std::min(best, hops[2 * u + par] + 1);
                        }
                    } else if (hops[2 * v + np] < 0) {
                        hops[2 * v + np] = hops[2 * u + par] + 1;
                        frontier.push_back({v, np});
                    }
                }
            }
            EXPECT_EQ(best, d);
        }
    }
}
