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

#ifndef STAR_SURFACE_CODE_H
#define STAR_SURFACE_CODE_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "star/circuit.h"

namespace star {

enum class PlaquetteType : uint8_t { X, Z };

struct Coord {
    int row;
    int col;
    bool operator==(const Coord &) const = default;
};

struct Plaquette {
    PlaquetteType type;
    /// Measurement-qubit position (even row and column).
    Coord center;
    uint32_t measure_qubit;
    /// Data qubits at the NW, NE, SW, SE corners (NO_QUBIT where the plaquette is cut off).
    std::array<uint32_t, 4> corners;
    std::vector<uint32_t> support;
};

/// Rotated planar code of odd distance d.
///
/// Data qubit (i, j) sits at (2i+1, 2j+1) with index i*d + j. Measurement qubits sit at even
/// coordinates (2a, 2b); the plaquette there is X-type when a+b is even. Weight-2 plaquettes
/// on the top and bottom edges are Z-type, those on the left and right edges X-type, so the
/// logical X runs along the top row and the logical Z down the left column.
struct RotatedSurfaceLayout {
    int d = 0;
    std::vector<Coord> data;
    std::vector<Plaquette> plaquettes;
    std::vector<uint32_t> logical_x;
    std::vector<uint32_t> logical_z;

    uint32_t num_data() const { return (uint32_t)(d * d); }
    uint32_t num_qubits() const { return num_data() + (uint32_t)plaquettes.size(); }
    uint32_t data_index(int i, int j) const { return (uint32_t)(i * d + j); }
    /// Plaquette index for a measurement-qubit position, or -1.
    int plaquette_at(Coord center) const;

    /// Operators on num_qubits() qubits (or `total_qubits` when embedded in a bigger circuit).
    PauliString stabilizer(size_t k, size_t total_qubits = 0) const;
    PauliString logical_x_op(size_t total_qubits = 0) const;
    PauliString logical_z_op(size_t total_qubits = 0) const;

    std::string to_json() const;
};

/// Throws std::invalid_argument unless d is odd and at least 3.
RotatedSurfaceLayout build_layout(int d);

/// Corner order of the four CNOT steps: X plaquettes NW, SW, NE, SE; Z plaquettes NW, NE, SW, SE.
const std::array<int, 4> &cnot_order(PlaquetteType type);

/// Appends one 8-layer syndrome round starting at `first_layer`: reset, H on X-type measure
/// qubits, four CNOT layers, H, measure. Returns the first layer after the round.
uint32_t append_syndrome_round(Circuit &circuit, const RotatedSurfaceLayout &layout, uint32_t first_layer);

inline constexpr uint32_t ROUND_DEPTH = 8;

/// d noisy syndrome rounds followed by one ideal round on a noiselessly prepared code state.
///
/// Detector r * P + k compares plaquette k in rounds r and r-1 (round 0 against the noiseless
/// reference). Observable 0 is the logical X (it flips on logical Z errors) and observable 1
/// the logical Z (flips on logical X errors).
struct MemoryExperiment {
    RotatedSurfaceLayout layout;
    uint32_t rounds;
    Circuit circuit;

    uint32_t detector_index(uint32_t plaquette, uint32_t round) const {
        return round * (uint32_t)layout.plaquettes.size() + plaquette;
    }
    /// 0 for detectors on X plaquettes, 1 for Z plaquettes.
    std::vector<uint8_t> detector_parts() const;
};

MemoryExperiment build_memory_circuit(const RotatedSurfaceLayout &layout);

}  // namespace star

#endif
