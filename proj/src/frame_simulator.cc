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

#include "star/frame_simulator.h"

#include <cmath>
#include <stdexcept>

namespace star {

namespace {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64 &rng) {
    // 53 random bits, never exactly zero.
    return ((rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::mt19937_64 shot_stream(uint64_t seed, uint64_t shot) {
    uint64_t state = seed;
    uint64_t a = splitmix64(state);
    state = a ^ shot;
    return std::mt19937_64(splitmix64(state));
}

int sample_fault(FaultKind kind, double p, std::mt19937_64 &rng) {
    if (!(uniform01(rng) < p)) {
        return -1;
    }
    return (int)(rng() % num_alternatives(kind));
}

void sample_fault_events(const Circuit &circuit, double p, std::mt19937_64 &rng, uint8_t lane,
                         std::vector<FaultEvent> &out) {
    const auto &sites = circuit.fault_sites();
    size_t n = sites.size();
    if (p <= 0 || n == 0) {
        return;
    }
    if (p >= 1) {
        for (size_t s = 0; s < n; s++) {
            out.push_back({(uint32_t)s, (uint8_t)(rng() % num_alternatives(sites[s].kind)), lane});
        }
        return;
    }
    // Geometric skipping: the gap to the next faulty site has P(gap = k) = (1-p)^k p.
    double log_q = std::log1p(-p);
    size_t s = 0;
    while (true) {
        double gap = std::floor(std::log(uniform01(rng)) / log_q);
        if (gap >= (double)(n - s)) {
            return;
        }
        s += (size_t)gap;
        out.push_back({(uint32_t)s, (uint8_t)(rng() % num_alternatives(sites[s].kind)), lane});
        s++;
    }
}

FrameSimulator::FrameSimulator(const Circuit &circuit)
    : circuit_(circuit),
      x_(circuit.num_qubits()),
      z_(circuit.num_qubits()),
      measurements_(circuit.measurements().size()) {
    if (!circuit.finalized()) {
        throw std::logic_error("FrameSimulator needs a finalized circuit");
    }
    size_t n_layers = circuit.num_layers();
    layer_site_begin_.assign(n_layers + 1, 0);
    const auto &sites = circuit.fault_sites();
    size_t s = 0;
    for (size_t t = 0; t <= n_layers; t++) {
        while (s < sites.size() && sites[s].layer < t) {
            s++;
        }
        layer_site_begin_[t] = s;
    }
    layer_marks_.resize(n_layers);
    for (const RotationMark &mark : circuit.rotation_marks()) {
        layer_marks_[mark.layer].push_back(&mark);
    }
}

void FrameSimulator::apply_mark(const RotationMark &mark) {
    uint64_t anti = 0;
    for (uint32_t q : mark.generator.support()) {
        if (mark.generator.x(q)) {
            anti ^= z_[q];
        }
        if (mark.generator.z(q)) {
            anti ^= x_[q];
        }
    }
    for (uint32_t q : mark.absorber.support()) {
        if (mark.absorber.x(q)) {
            x_[q] ^= anti;
        }
        if (mark.absorber.z(q)) {
            z_[q] ^= anti;
        }
    }
}

void FrameSimulator::apply_gate(const Gate &g, std::mt19937_64 *gauge_rng) {
    uint32_t q = g.q0;
    switch (g.type) {
        case GateType::H:
            std::swap(x_[q], z_[q]);
            break;
        case GateType::CNOT:
            x_[g.q1] ^= x_[q];
            z_[q] ^= z_[g.q1];
            break;
        case GateType::INIT_Z:
            x_[q] = 0;
            z_[q] = gauge_rng ? (*gauge_rng)() : 0;
            break;
        case GateType::INIT_X:
            z_[q] = 0;
            x_[q] = gauge_rng ? (*gauge_rng)() : 0;
            break;
        case GateType::MEASURE_Z:
        case GateType::MEASURE_X:
            // Handled by run(), which knows the measurement index.
            break;
        case GateType::IDLE:
        case GateType::ROT_ZZ:
        case GateType::ROT_Z:
            break;
    }
}

void FrameSimulator::apply_fault(const FaultEvent &e) {
    const FaultSite &site = circuit_.fault_sites()[e.site];
    uint64_t bit = uint64_t{1} << e.lane;
    if (site.kind == FaultKind::MEASURE_FLIP) {
        measurements_[site.measurement] ^= bit;
        return;
    }
    uint8_t b = alternative_bits(site, e.alt);
    if (b & 1) {
        x_[site.q0] ^= bit;
    }
    if (b & 2) {
        z_[site.q0] ^= bit;
    }
    if (b & 4) {
        x_[site.q1] ^= bit;
    }
    if (b & 8) {
        z_[site.q1] ^= bit;
    }
}

void FrameSimulator::run(std::span<const FaultEvent> events, std::mt19937_64 *gauge_rng) {
    std::fill(x_.begin(), x_.end(), 0);
    std::fill(z_.begin(), z_.end(), 0);
    std::fill(measurements_.begin(), measurements_.end(), 0);
    const auto &layers = circuit_.layers();
    size_t e = 0;
    uint32_t m = 0;
    for (size_t t = 0; t < layers.size(); t++) {
        for (const RotationMark *mark : layer_marks_[t]) {
            apply_mark(*mark);
        }
        for (const Gate &g : layers[t].gates) {
            if (g.type == GateType::MEASURE_Z || g.type == GateType::MEASURE_X) {
                bool z_basis = g.type == GateType::MEASURE_Z;
                uint64_t &kept = z_basis ? z_[g.q0] : x_[g.q0];
                measurements_[m++] = z_basis ? x_[g.q0] : z_[g.q0];
                kept = gauge_rng ? (*gauge_rng)() : 0;
            } else {
                apply_gate(g, gauge_rng);
            }
        }
        size_t end = layer_site_begin_[t + 1];
        while (e < events.size() && events[e].site < end) {
            if (events[e].site < layer_site_begin_[t]) {
                break;
            }
            apply_fault(events[e]);
            e++;
        }
    }
    if (e != events.size()) {
        throw std::invalid_argument("fault events not sorted by site or out of range");
    }
}

uint64_t FrameSimulator::detector(size_t k) const {
    uint64_t v = 0;
    for (uint32_t m : circuit_.detectors()[k]) {
        v ^= measurements_[m];
    }
    return v;
}

uint64_t FrameSimulator::observable(size_t k) const {
    const PauliString &op = circuit_.observables()[k];
    uint64_t v = 0;
    for (uint32_t q : op.support()) {
        if (op.x(q)) {
            v ^= z_[q];
        }
        if (op.z(q)) {
            v ^= x_[q];
        }
    }
    return v;
}

ShotRecord FrameSimulator::record(uint8_t lane) const {
    ShotRecord r;
    r.measurement_flips.resize(measurements_.size());
    for (size_t m = 0; m < measurements_.size(); m++) {
        r.measurement_flips[m] = lane_bit(measurements_[m], lane);
    }
    r.final_frame = PauliString(x_.size());
    for (size_t q = 0; q < x_.size(); q++) {
        r.final_frame.set(q, lane_bit(x_[q], lane), lane_bit(z_[q], lane));
    }
    return r;
}

ShotRecord replay(const Circuit &circuit, std::span<const FaultEvent> events) {
    FrameSimulator sim(circuit);
    sim.run(events);
    return sim.record(0);
}

ShotRecord simulate_shot(const Circuit &circuit, double p, std::mt19937_64 &rng) {
    std::vector<FaultEvent> events;
    sample_fault_events(circuit, p, rng, 0, events);
    return replay(circuit, events);
}

void visit_single_faults(const Circuit &circuit,
                         const std::function<void(uint32_t, uint8_t, const FrameSimulator &, uint8_t)> &callback) {
    FrameSimulator sim(circuit);
    const auto &sites = circuit.fault_sites();
    std::vector<FaultEvent> batch;
    auto flush = [&]() {
        if (batch.empty()) {
            return;
        }
        sim.run(batch);
        for (const FaultEvent &e : batch) {
            callback(e.site, e.alt, sim, e.lane);
        }
        batch.clear();
    };
    for (uint32_t s = 0; s < sites.size(); s++) {
        for (uint8_t a = 0; a < num_alternatives(sites[s].kind); a++) {
            batch.push_back({s, a, (uint8_t)batch.size()});
            if (batch.size() == 64) {
                flush();
            }
        }
    }
    flush();
}

std::vector<SingleFault> enumerate_single_faults(const Circuit &circuit) {
    std::vector<SingleFault> result;
    visit_single_faults(circuit, [&](uint32_t site, uint8_t alt, const FrameSimulator &sim, uint8_t lane) {
        result.push_back({site, alt, alternative_coefficient(circuit.fault_sites()[site].kind), sim.record(lane)});
    });
    return result;
}

}  // namespace star
