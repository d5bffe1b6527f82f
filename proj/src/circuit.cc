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

#include "star/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace star {

const char *fault_kind_name(FaultKind kind) {
    switch (kind) {
        case FaultKind::SINGLE:
            return "SINGLE";
        case FaultKind::DOUBLE:
            return "DOUBLE";
        case FaultKind::INIT_FLIP:
            return "INIT_FLIP";
        case FaultKind::MEASURE_FLIP:
            return "MEASURE_FLIP";
    }
    return "?";
}

uint8_t num_alternatives(FaultKind kind) {
    switch (kind) {
        case FaultKind::SINGLE:
            return 3;
        case FaultKind::DOUBLE:
            return 15;
        default:
            return 1;
    }
}

Rational alternative_coefficient(FaultKind kind) {
    return Rational(1, num_alternatives(kind));
}

uint8_t alternative_bits(const FaultSite &site, uint8_t alt) {
    switch (site.kind) {
        case FaultKind::SINGLE:
        case FaultKind::DOUBLE:
            return alt + 1;
        case FaultKind::INIT_FLIP:
            return site.gate == GateType::INIT_X ? 2 : 1;
        case FaultKind::MEASURE_FLIP:
            return 0;
    }
    return 0;
}

Circuit::Circuit(uint32_t num_qubits) : num_qubits_(num_qubits) {}

void Circuit::check_qubit(uint32_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for a circuit of " +
                                std::to_string(num_qubits_) + " qubits");
    }
}

void Circuit::add(uint32_t layer, Gate gate) {
    if (finalized_) {
        throw std::logic_error("circuit already finalized");
    }
    check_qubit(gate.q0);
    if (is_two_qubit(gate.type)) {
        check_qubit(gate.q1);
        if (gate.q0 == gate.q1) {
            throw std::invalid_argument("gate '" + gate.str() + "' repeats a qubit");
        }
    } else {
        gate.q1 = NO_QUBIT;
    }
    if (layer >= layers_.size()) {
        layers_.resize(layer + 1);
    }
    for (const Gate &g : layers_[layer].gates) {
        for (uint32_t q : {g.q0, g.q1}) {
            if (q != NO_QUBIT && (q == gate.q0 || q == gate.q1)) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " used twice in layer " +
                                            std::to_string(layer));
            }
        }
    }
    layers_[layer].gates.push_back(gate);
}

void Circuit::set_noisy(uint32_t layer, bool noisy) {
    if (finalized_) {
        throw std::logic_error("circuit already finalized");
    }
    if (layer >= layers_.size()) {
        layers_.resize(layer + 1);
    }
    layers_[layer].noisy = noisy;
}

void Circuit::add_rotation_mark(uint32_t layer, PauliString generator, PauliString absorber) {
    if (generator.num_qubits() != num_qubits_ || absorber.num_qubits() != num_qubits_) {
        throw std::invalid_argument("rotation mark size mismatch");
    }
    marks_.push_back({layer, std::move(generator), std::move(absorber)});
}

void Circuit::finalize() {
    if (finalized_) {
        return;
    }
    size_t n_layers = layers_.size();

    std::vector<std::vector<std::pair<uint32_t, GateType>>> uses(num_qubits_);
    for (size_t t = 0; t < n_layers; t++) {
        for (const Gate &g : layers_[t].gates) {
            uses[g.q0].push_back({(uint32_t)t, g.type});
            if (g.q1 != NO_QUBIT) {
                uses[g.q1].push_back({(uint32_t)t, g.type});
            }
        }
    }
    auto is_init = [](GateType g) { return g == GateType::INIT_Z || g == GateType::INIT_X; };
    auto is_measure = [](GateType g) { return g == GateType::MEASURE_Z || g == GateType::MEASURE_X; };
    auto idle_range = [&](uint32_t q, size_t begin, size_t end) {
        for (size_t t = begin; t < end; t++) {
            if (layers_[t].noisy) {
                layers_[t].gates.push_back(IDLE(q));
            }
        }
    };
    for (uint32_t q = 0; q < num_qubits_; q++) {
        const auto &u = uses[q];
        if (u.empty()) {
            continue;
        }
        if (!is_init(u.front().second)) {
            idle_range(q, 0, u.front().first);
        }
        for (size_t k = 1; k < u.size(); k++) {
            if (!(is_measure(u[k - 1].second) && is_init(u[k].second))) {
                idle_range(q, u[k - 1].first + 1, u[k].first);
            }
        }
        if (!is_measure(u.back().second)) {
            idle_range(q, u.back().first + 1, n_layers);
        }
    }

    auto key = [](const Gate &g) { return std::min(g.q0, g.q1); };
    measurement_lookup_.assign(n_layers, {});
    for (size_t t = 0; t < n_layers; t++) {
        Layer &layer = layers_[t];
        std::sort(layer.gates.begin(), layer.gates.end(),
                  [&](const Gate &a, const Gate &b) { return key(a) < key(b); });
        for (const Gate &g : layer.gates) {
            uint32_t m = NO_QUBIT;
            if (is_measure(g.type)) {
                m = (uint32_t)measurements_.size();
                measurements_.push_back({(uint32_t)t, g.q0, g.type});
                if (measurement_lookup_[t].empty()) {
                    measurement_lookup_[t].assign(num_qubits_, NO_QUBIT);
                }
                measurement_lookup_[t][g.q0] = m;
            }
            if (!layer.noisy) {
                continue;
            }
            FaultKind kind;
            if (is_two_qubit(g.type)) {
                kind = FaultKind::DOUBLE;
            } else if (is_init(g.type)) {
                kind = FaultKind::INIT_FLIP;
            } else if (is_measure(g.type)) {
                kind = FaultKind::MEASURE_FLIP;
            } else {
                kind = FaultKind::SINGLE;
            }
            sites_.push_back({(uint32_t)t, kind, g.type, g.q0, g.q1, m});
        }
    }
    for (const RotationMark &mark : marks_) {
        if (mark.layer >= n_layers) {
            throw std::out_of_range("rotation mark beyond the last layer");
        }
    }
    finalized_ = true;
}

uint32_t Circuit::measurement_index(uint32_t layer, uint32_t qubit) const {
    if (layer >= measurement_lookup_.size() || measurement_lookup_[layer].empty() || qubit >= num_qubits_ ||
        measurement_lookup_[layer][qubit] == NO_QUBIT) {
        throw std::out_of_range("no measurement of qubit " + std::to_string(qubit) + " in layer " +
                                std::to_string(layer));
    }
    return measurement_lookup_[layer][qubit];
}

uint32_t Circuit::add_detector(std::vector<uint32_t> measurement_indices) {
    if (!finalized_) {
        throw std::logic_error("detectors refer to measurement indices; finalize() first");
    }
    for (uint32_t m : measurement_indices) {
        if (m >= measurements_.size()) {
            throw std::out_of_range("detector refers to missing measurement " + std::to_string(m));
        }
    }
    detectors_.push_back(std::move(measurement_indices));
    return (uint32_t)detectors_.size() - 1;
}

uint32_t Circuit::add_observable(PauliString op) {
    if (op.num_qubits() != num_qubits_) {
        throw std::invalid_argument("observable size mismatch");
    }
    observables_.push_back(std::move(op));
    return (uint32_t)observables_.size() - 1;
}

std::string Circuit::str() const {
    std::ostringstream out;
    for (size_t t = 0; t < layers_.size(); t++) {
        out << "layer " << t << (layers_[t].noisy ? "" : " (noiseless)") << ":";
        for (const Gate &g : layers_[t].gates) {
            out << " [" << g.str() << "]";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace star
