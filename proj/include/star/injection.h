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

#ifndef STAR_INJECTION_H
#define STAR_INJECTION_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "star/circuit.h"
#include "star/frame_simulator.h"
#include "star/rational.h"
#include "star/surface_code.h"

namespace star {

/// Operators of the [[4,1,1,2]] subsystem code on qubits 0..3.
struct FourTwoTwoCode {
    PauliString s_x{PauliString::from_str("XXXX")};
    PauliString s_z{PauliString::from_str("ZZZZ")};
    PauliString l_x{PauliString::from_str("XX__")};
    PauliString l_z{PauliString::from_str("Z_Z_")};
    PauliString g_x{PauliString::from_str("X_X_")};
    PauliString g_z{PauliString::from_str("ZZ__")};
};

/// How the ZZ rotation on qubits 0 and 2 is carried out.
enum class Variant : uint8_t {
    /// Native two-qubit rotation.
    DIRECT,
    /// CNOT(0, 2), single-qubit rotation on 2, CNOT(0, 2).
    INDIRECT_TWO_CNOT,
    /// Parity of 0 and 2 copied onto an extra qubit, rotated there, uncomputed and checked.
    INDIRECT_ANCILLA,
};

const char *variant_name(Variant v);
/// Accepts "direct", "indirect_two_cnot" and "indirect_ancilla". Throws std::invalid_argument.
Variant parse_variant(std::string_view name);

/// One round of gauge outcomes (true means -1). m0/m3 measure X0X2 and X1X3, m1/m2 measure
/// Z0Z1 and Z2Z3.
struct GaugeRound {
    bool m0 = false;
    bool m3 = false;
    bool m1 = false;
    bool m2 = false;
};

enum class Stage1Verdict : uint8_t {
    ACCEPT,
    /// A stabilizer (product of gauges) changed between the two rounds.
    REJECT_CHANGED,
    /// Both rounds agree but a stabilizer reads -1 in the first round.
    REJECT_BARE,
};

/// Post-selection after the two gauge rounds. Individual gauge outcomes are random, so only
/// the stabilizer products X0X1X2X3 = m0*m3 and Z0Z1Z2Z3 = m1*m2 are checked.
Stage1Verdict apply_stage1_postselection(const GaugeRound &r1, const GaugeRound &r2);

/// Initial state of data qubit (i, j) when the 2x2 block in the top-left corner is expanded:
/// 'B' for the block, '+' above the diagonal, '0' on and below it.
char expansion_init(int i, int j);

/// Whether a plaquette's first-round value is fixed by the expansion's initial state.
struct DeterminedPlaquette {
    bool determined = false;
    /// The value is also multiplied by the last Z0Z1 (bit 0) and Z2Z3 (bit 1) gauge outcomes.
    uint8_t gauge_deps = 0;
};
std::vector<DeterminedPlaquette> determined_plaquettes(const RotatedSurfaceLayout &layout);

enum class InjectionStage : uint8_t { REJECTED_STAGE1, REJECTED_STAGE2, ACCEPTED };

struct InjectionOutcome {
    InjectionStage stage = InjectionStage::ACCEPTED;
    bool logical_z_error = false;
    bool logical_x_error = false;
    uint32_t rounds_used = 0;
};

/// A protocol circuit together with where its post-selection data lives.
///
/// Stage 1 is read from the gauge measurements; every circuit detector belongs to stage 2.
/// Observable 0 is the patch's logical X (flips on logical Z errors), observable 1 its
/// logical Z.
struct InjectionCircuit {
    Variant variant = Variant::DIRECT;
    int d = 0;
    Circuit circuit;
    std::array<uint32_t, 4> block{};
    /// M0..M3, then the extra rotation qubit.
    std::array<uint32_t, 5> ancillas{};
    bool has_stage1 = false;
    bool has_stage2 = false;
    /// Measurement indices of M0, M3, M1, M2 for the two gauge rounds.
    std::array<std::array<uint32_t, 4>, 2> gauge_measurements{};
    uint32_t ancilla_check = NO_QUBIT;
    uint32_t stage2_first_layer = 0;

    InjectionOutcome evaluate(const FrameSimulator &sim, uint8_t lane) const;
    /// Outcomes of lanes 0..lanes-1 of one batched run.
    void evaluate_batch(const FrameSimulator &sim, uint8_t lanes, std::vector<InjectionOutcome> &out) const;
};

/// Encoding, rotation and the two gauge rounds only, on 4 data qubits plus ancillas.
InjectionCircuit build_stage1_circuit(Variant variant);
/// Expansion of a noiselessly prepared block into a distance-d patch: initialization, one
/// noisy and one ideal syndrome round.
InjectionCircuit build_stage2_circuit(int d);
/// Both stages, maximally overlapped.
InjectionCircuit build_injection_circuit(Variant variant, int d);

struct OracleResult {
    Rational c_z;
    Rational c_x;
    /// Leading coefficients of rejection at stage 1 and at stage 2.
    Rational c_reject_stage1;
    Rational c_reject_stage2;
    uint64_t faults = 0;
};

/// First-order coefficients from replaying every single fault of the full protocol.
OracleResult oracle_leading_coefficients(Variant variant, int d);
OracleResult oracle_leading_coefficients(const InjectionCircuit &circuit);

struct InjectionEstimate {
    int d = 0;
    double p = 0;
    Variant variant = Variant::DIRECT;
    uint64_t shots = 0;
    uint64_t accepted = 0;
    uint64_t rejected_stage1 = 0;
    uint64_t rejected_stage2 = 0;
    uint64_t logical_z = 0;
    uint64_t logical_x = 0;

    double acceptance_rate() const { return shots ? (double)accepted / (double)shots : 0; }
    double failure_rate() const { return 1 - acceptance_rate(); }
    double rate_z() const { return accepted ? (double)logical_z / (double)accepted : 0; }
    double sigma_acceptance() const;
    double sigma_z() const;
};

InjectionEstimate run_injection_experiment(int d, double p, uint64_t shots, Variant variant, uint64_t seed,
                                           int threads = 0);

}  // namespace star

#endif
