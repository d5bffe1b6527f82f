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

#ifndef STAR_CIRCUIT_H
#define STAR_CIRCUIT_H

#include <cstdint>
#include <string>
#include <vector>

#include "star/pauli.h"
#include "star/rational.h"

namespace star {

enum class FaultKind : uint8_t {
    /// One of X, Z, Y, each with probability p/3.
    SINGLE,
    /// One of the 15 non-identity two-qubit Paulis, each with probability p/15.
    DOUBLE,
    /// Wrong initial state with probability p (X after INIT_Z, Z after INIT_X).
    INIT_FLIP,
    /// Reported outcome flipped with probability p.
    MEASURE_FLIP,
};

const char *fault_kind_name(FaultKind kind);
uint8_t num_alternatives(FaultKind kind);
/// Probability of each alternative divided by p.
Rational alternative_coefficient(FaultKind kind);

struct FaultSite {
    uint32_t layer;
    FaultKind kind;
    /// Gate the site is attached to.
    GateType gate;
    uint32_t q0;
    uint32_t q1 = NO_QUBIT;
    /// Measurement index for MEASURE_FLIP sites.
    uint32_t measurement = NO_QUBIT;
};

/// Pauli error (on the site's qubits) for one alternative of a SINGLE, DOUBLE or INIT_FLIP
/// site. Bit 0 is the x bit of q0, bit 1 its z bit, bits 2 and 3 the same for q1.
uint8_t alternative_bits(const FaultSite &site, uint8_t alt);

struct MeasurementEvent {
    uint32_t layer;
    uint32_t qubit;
    GateType basis;
};

/// Bookkeeping for an analog rotation exp(-i theta/2 G) simulated at theta = 0.
///
/// A frame component anticommuting with G at the rotation would have turned theta into
/// -theta. For a rotation acting on |+> of a logical qubit, that sign change equals applying
/// the logical X (the absorber, expressed at the rotation's position) after the rotation.
struct RotationMark {
    uint32_t layer;
    PauliString generator;
    PauliString absorber;
};

struct Layer {
    std::vector<Gate> gates;
    bool noisy = true;
};

/// Layered Clifford circuit annotated with its noise locations.
///
/// Gates are added layer by layer; finalize() then inserts idle gates, numbers the
/// measurements and derives the fault sites in canonical (layer, qubit) order. A qubit idles
/// (and picks up noise) on every layer between its first and last use, except between a
/// measurement and the reset that follows it. Qubits whose first gate is not a reset are
/// taken to hold state from the start; qubits whose last gate is not a measurement hold
/// state until the end.
class Circuit {
   public:
    explicit Circuit(uint32_t num_qubits = 0);

    uint32_t num_qubits() const { return num_qubits_; }
    size_t num_layers() const { return layers_.size(); }
    const std::vector<Layer> &layers() const { return layers_; }

    /// Adds a gate to a layer, creating layers as needed.
    /// Throws std::out_of_range for bad qubits, std::invalid_argument for a qubit used twice in
    /// one layer, and std::logic_error after finalize().
    void add(uint32_t layer, Gate gate);
    /// Noiseless layers carry no fault sites at all.
    void set_noisy(uint32_t layer, bool noisy);
    void add_rotation_mark(uint32_t layer, PauliString generator, PauliString absorber);
    void finalize();
    bool finalized() const { return finalized_; }

    const std::vector<FaultSite> &fault_sites() const { return sites_; }
    const std::vector<MeasurementEvent> &measurements() const { return measurements_; }
    const std::vector<RotationMark> &rotation_marks() const { return marks_; }
    /// Index of the measurement on `qubit` in `layer`. Throws std::out_of_range if absent.
    uint32_t measurement_index(uint32_t layer, uint32_t qubit) const;

    /// Detectors are parities of measurement flips; observables are Pauli operators whose
    /// anticommutation with the final frame is reported. Both may be added after finalize().
    uint32_t add_detector(std::vector<uint32_t> measurement_indices);
    uint32_t add_observable(PauliString op);
    const std::vector<std::vector<uint32_t>> &detectors() const { return detectors_; }
    const std::vector<PauliString> &observables() const { return observables_; }

    std::string str() const;

   private:
    void check_qubit(uint32_t q) const;

    uint32_t num_qubits_;
    std::vector<Layer> layers_;
    std::vector<FaultSite> sites_;
    std::vector<MeasurementEvent> measurements_;
    std::vector<std::vector<uint32_t>> measurement_lookup_;
    std::vector<RotationMark> marks_;
    std::vector<std::vector<uint32_t>> detectors_;
    std::vector<PauliString> observables_;
    bool finalized_ = false;
};

}  // namespace star

#endif
