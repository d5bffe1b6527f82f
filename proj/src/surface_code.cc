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

#include "star/surface_code.h"

#include <stdexcept>

#include "json.hpp"

namespace star {

namespace {

PauliString sized(const RotatedSurfaceLayout &layout, size_t total_qubits) {
    size_t n = total_qubits ? total_qubits : layout.num_qubits();
    if (n < layout.num_data()) {
        throw std::invalid_argument("operator too small for the layout");
    }
    return PauliString(n);
}

}  // namespace

int RotatedSurfaceLayout::plaquette_at(Coord center) const {
    for (size_t k = 0; k < plaquettes.size(); k++) {
        if (plaquettes[k].center == center) {
            return (int)k;
        }
    }
    return -1;
}

PauliString RotatedSurfaceLayout::stabilizer(size_t k, size_t total_qubits) const {
    PauliString s = sized(*this, total_qubits);
    char c = plaquettes.at(k).type == PlaquetteType::X ? 'X' : 'Z';
    for (uint32_t q : plaquettes[k].support) {
        s.set(q, c);
    }
    return s;
}

PauliString RotatedSurfaceLayout::logical_x_op(size_t total_qubits) const {
    PauliString s = sized(*this, total_qubits);
    for (uint32_t q : logical_x) {
        s.set(q, 'X');
    }
    return s;
}

PauliString RotatedSurfaceLayout::logical_z_op(size_t total_qubits) const {
    PauliString s = sized(*this, total_qubits);
    for (uint32_t q : logical_z) {
        s.set(q, 'Z');
    }
    return s;
}

std::string RotatedSurfaceLayout::to_json() const {
    nlohmann::ordered_json j;
    j["d"] = d;
    auto &dq = j["data_qubits"] = nlohmann::ordered_json::array();
    for (size_t q = 0; q < data.size(); q++) {
        dq.push_back({{"index", q}, {"row", data[q].row}, {"col", data[q].col}});
    }
    auto &pl = j["plaquettes"] = nlohmann::ordered_json::array();
    for (const Plaquette &p : plaquettes) {
        pl.push_back({{"type", p.type == PlaquetteType::X ? "X" : "Z"},
                      {"row", p.center.row},
                      {"col", p.center.col},
                      {"measure_qubit", p.measure_qubit},
                      {"support", p.support}});
    }
    j["logical_x"] = logical_x;
    j["logical_z"] = logical_z;
    return j.dump(2);
}

RotatedSurfaceLayout build_layout(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("code distance must be odd and at least 3, got " + std::to_string(d));
    }
    RotatedSurfaceLayout layout;
    layout.d = d;
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            layout.data.push_back({2 * i + 1, 2 * j + 1});
        }
    }
    for (int a = 0; a <= d; a++) {
        for (int b = 0; b <= d; b++) {
            PlaquetteType type = (a + b) % 2 == 0 ? PlaquetteType::X : PlaquetteType::Z;
            bool row_edge = a == 0 || a == d;
            bool col_edge = b == 0 || b == d;
            if (row_edge && col_edge) {
                continue;
            }
            if (row_edge && type != PlaquetteType::Z) {
                continue;
            }
            if (col_edge && type != PlaquetteType::X) {
                continue;
            }
            Plaquette p;
            p.type = type;
            p.center = {2 * a, 2 * b};
            p.measure_qubit = (uint32_t)(d * d + layout.plaquettes.size());
            const int di[4] = {a - 1, a - 1, a, a};
            const int dj[4] = {b - 1, b, b - 1, b};
            for (int c = 0; c < 4; c++) {
                bool inside = di[c] >= 0 && di[c] < d && dj[c] >= 0 && dj[c] < d;
                p.corners[c] = inside ? layout.data_index(di[c], dj[c]) : NO_QUBIT;
                if (inside) {
                    p.support.push_back(p.corners[c]);
                }
            }
            layout.plaquettes.push_back(p);
        }
    }
    for (int j = 0; j < d; j++) {
        layout.logical_x.push_back(layout.data_index(0, j));
    }
    for (int i = 0; i < d; i++) {
        layout.logical_z.push_back(layout.data_index(i, 0));
    }
    return layout;
}

const std::array<int, 4> &cnot_order(PlaquetteType type) {
    // Corner indices: 0 = NW, 1 = NE, 2 = SW, 3 = SE. A measure-qubit fault halfway through
    // leaves a hook along a column for X plaquettes and along a row for Z plaquettes, i.e.
    // perpendicular to the logical operator of the same type.
    static const std::array<int, 4> x_order{0, 2, 1, 3};
    static const std::array<int, 4> z_order{0, 1, 2, 3};
    return type == PlaquetteType::X ? x_order : z_order;
}

uint32_t append_syndrome_round(Circuit &circuit, const RotatedSurfaceLayout &layout, uint32_t t) {
    for (const Plaquette &p : layout.plaquettes) {
        circuit.add(t, INIT_Z(p.measure_qubit));
        if (p.type == PlaquetteType::X) {
            circuit.add(t + 1, H(p.measure_qubit));
            circuit.add(t + 6, H(p.measure_qubit));
        }
        const auto &order = cnot_order(p.type);
        for (int step = 0; step < 4; step++) {
            uint32_t q = p.corners[order[step]];
            if (q == NO_QUBIT) {
                continue;
            }
            if (p.type == PlaquetteType::X) {
                circuit.add(t + 2 + step, CNOT(p.measure_qubit, q));
            } else {
                circuit.add(t + 2 + step, CNOT(q, p.measure_qubit));
            }
        }
        circuit.add(t + 7, MEASURE_Z(p.measure_qubit));
    }
    return t + ROUND_DEPTH;
}

std::vector<uint8_t> MemoryExperiment::detector_parts() const {
    std::vector<uint8_t> parts;
    for (uint32_t r = 0; r < rounds; r++) {
        for (const Plaquette &p : layout.plaquettes) {
            parts.push_back(p.type == PlaquetteType::X ? 0 : 1);
        }
    }
    return parts;
}

MemoryExperiment build_memory_circuit(const RotatedSurfaceLayout &layout) {
    uint32_t rounds = (uint32_t)layout.d + 1;
    Circuit circuit(layout.num_qubits());
    uint32_t t = 0;
    for (uint32_t r = 0; r < rounds; r++) {
        uint32_t next = append_syndrome_round(circuit, layout, t);
        if (r + 1 == rounds) {
            for (uint32_t u = t; u < next; u++) {
                circuit.set_noisy(u, false);
            }
        }
        t = next;
    }
    circuit.finalize();
    for (uint32_t r = 0; r < rounds; r++) {
        for (const Plaquette &p : layout.plaquettes) {
            uint32_t m = circuit.measurement_index(r * ROUND_DEPTH + ROUND_DEPTH - 1, p.measure_qubit);
            if (r == 0) {
                circuit.add_detector({m});
            } else {
                circuit.add_detector({m, circuit.measurement_index((r - 1) * ROUND_DEPTH + ROUND_DEPTH - 1, p.measure_qubit)});
            }
        }
    }
    circuit.add_observable(layout.logical_x_op());
    circuit.add_observable(layout.logical_z_op());
    return {layout, rounds, std::move(circuit)};
}

}  // namespace star
