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

#ifndef STAR_FRAME_SIMULATOR_H
#define STAR_FRAME_SIMULATOR_H

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "star/circuit.h"

namespace star {

/// One active fault in a batched run.
struct FaultEvent {
    uint32_t site;
    uint8_t alt;
    uint8_t lane;

    auto operator<=>(const FaultEvent &) const = default;
};

/// Result of one shot relative to the noiseless reference run.
struct ShotRecord {
    std::vector<bool> measurement_flips;
    PauliString final_frame;

    bool operator==(const ShotRecord &) const = default;
};

/// Independent random stream for one shot, derived from (seed, shot index) only.
std::mt19937_64 shot_stream(uint64_t seed, uint64_t shot);

/// Draws one site's outcome: -1 for no fault, otherwise the alternative index.
int sample_fault(FaultKind kind, double p, std::mt19937_64 &rng);

/// Appends the faults of one shot, in site order, to `out`.
void sample_fault_events(const Circuit &circuit, double p, std::mt19937_64 &rng, uint8_t lane,
                         std::vector<FaultEvent> &out);

/// Pauli-frame propagation of up to 64 shots at once, one shot per bit lane.
class FrameSimulator {
   public:
    explicit FrameSimulator(const Circuit &circuit);

    /// Runs the circuit with the given faults, which must be sorted by site.
    ///
    /// With a gauge rng, every reset and measurement also applies a random Pauli from the
    /// stabilizer of the state it produces (Z after a Z-basis reset or measurement, X for the X
    /// basis). This leaves physical outcomes unchanged, so deterministic detectors and
    /// observables must be unaffected by it.
    void run(std::span<const FaultEvent> events, std::mt19937_64 *gauge_rng = nullptr);

    const Circuit &circuit() const { return circuit_; }
    uint64_t measurement(size_t m) const { return measurements_[m]; }
    uint64_t frame_x(size_t q) const { return x_[q]; }
    uint64_t frame_z(size_t q) const { return z_[q]; }
    uint64_t detector(size_t k) const;
    uint64_t observable(size_t k) const;
    ShotRecord record(uint8_t lane) const;

   private:
    void apply_mark(const RotationMark &mark);
    void apply_gate(const Gate &g, std::mt19937_64 *gauge_rng);
    void apply_fault(const FaultEvent &e);

    const Circuit &circuit_;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
    std::vector<uint64_t> measurements_;
    std::vector<size_t> layer_site_begin_;
    std::vector<std::vector<const RotationMark *>> layer_marks_;
};

/// Simulates one shot under circuit-level noise of strength p.
ShotRecord simulate_shot(const Circuit &circuit, double p, std::mt19937_64 &rng);

/// Replays one shot with exactly the given faults active.
ShotRecord replay(const Circuit &circuit, std::span<const FaultEvent> events);

struct SingleFault {
    uint32_t site;
    uint8_t alt;
    Rational coefficient;
    ShotRecord record;
};

/// Every (site, alternative) pair run alone, in canonical order.
std::vector<SingleFault> enumerate_single_faults(const Circuit &circuit);

/// Streaming form of enumerate_single_faults for large circuits. The callback sees the
/// simulator state holding the fault in `lane`; faults arrive in canonical order.
void visit_single_faults(const Circuit &circuit,
                         const std::function<void(uint32_t site, uint8_t alt, const FrameSimulator &sim,
                                                  uint8_t lane)> &callback);

inline bool lane_bit(uint64_t word, uint8_t lane) { return (word >> lane) & 1; }

}  // namespace star

#endif
