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

#include "star/injection.h"

#include <algorithm>
#include <stdexcept>

#include "star/decoder.h"
#include "star/parallel.h"

namespace star {

const char *variant_name(Variant v) {
    switch (v) {
        case Variant::DIRECT:
            return "direct";
        case Variant::INDIRECT_TWO_CNOT:
            return "indirect_two_cnot";
        case Variant::INDIRECT_ANCILLA:
            return "indirect_ancilla";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    for (Variant v : {Variant::DIRECT, Variant::INDIRECT_TWO_CNOT, Variant::INDIRECT_ANCILLA}) {
        if (name == variant_name(v)) {
            return v;
        }
    }
    throw std::invalid_argument("unknown variant '" + std::string(name) +
                                "' (expected direct, indirect_two_cnot or indirect_ancilla)");
}

Stage1Verdict apply_stage1_postselection(const GaugeRound &r1, const GaugeRound &r2) {
    bool sx1 = r1.m0 ^ r1.m3, sz1 = r1.m1 ^ r1.m2;
    bool sx2 = r2.m0 ^ r2.m3, sz2 = r2.m1 ^ r2.m2;
    if ((sx1 ^ sx2) || (sz1 ^ sz2)) {
        return Stage1Verdict::REJECT_CHANGED;
    }
    if (sx1 || sz1) {
        return Stage1Verdict::REJECT_BARE;
    }
    return Stage1Verdict::ACCEPT;
}

char expansion_init(int i, int j) {
    if (i < 2 && j < 2) {
        return 'B';
    }
    return i < j ? '+' : '0';
}

std::vector<DeterminedPlaquette> determined_plaquettes(const RotatedSurfaceLayout &layout) {
    size_t n = layout.num_data();
    size_t bits = 2 * n + 2;
    using Row = std::vector<bool>;
    auto make = [&]() { return Row(bits, false); };
    auto pivot = [&](const Row &r) -> size_t {
        for (size_t k = 0; k < 2 * n; k++) {
            if (r[k]) {
                return k;
            }
        }
        return bits;
    };
    auto xor_into = [&](Row &a, const Row &b) {
        for (size_t k = 0; k < bits; k++) {
            a[k] = a[k] ^ b[k];
        }
    };
    std::vector<Row> basis;
    std::vector<size_t> pivots;
    auto reduce = [&](Row &r) {
        for (size_t b = 0; b < basis.size(); b++) {
            if (r[pivots[b]]) {
                xor_into(r, basis[b]);
            }
        }
    };
    auto insert = [&](Row r) {
        reduce(r);
        size_t pv = pivot(r);
        if (pv < bits) {
            basis.push_back(std::move(r));
            pivots.push_back(pv);
        }
    };

    int d = layout.d;
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            char c = expansion_init(i, j);
            if (c == 'B') {
                continue;
            }
            Row r = make();
            uint32_t q = layout.data_index(i, j);
            r[c == '+' ? q : n + q] = true;
            insert(r);
        }
    }
    uint32_t b0 = layout.data_index(0, 0), b1 = layout.data_index(0, 1);
    uint32_t b2 = layout.data_index(1, 0), b3 = layout.data_index(1, 1);
    Row sx = make();
    for (uint32_t q : {b0, b1, b2, b3}) {
        sx[q] = true;
    }
    insert(sx);
    Row gz01 = make();
    gz01[n + b0] = gz01[n + b1] = true;
    gz01[2 * n] = true;
    insert(gz01);
    Row gz23 = make();
    gz23[n + b2] = gz23[n + b3] = true;
    gz23[2 * n + 1] = true;
    insert(gz23);

    std::vector<DeterminedPlaquette> result;
    for (const Plaquette &p : layout.plaquettes) {
        Row r = make();
        for (uint32_t q : p.support) {
            r[p.type == PlaquetteType::X ? q : n + q] = true;
        }
        reduce(r);
        DeterminedPlaquette dp;
        dp.determined = pivot(r) == bits;
        if (dp.determined) {
            dp.gauge_deps = (uint8_t)(r[2 * n] | (r[2 * n + 1] << 1));
        }
        result.push_back(dp);
    }
    return result;
}

namespace {

struct Stage1Plan {
    uint32_t gauge_start;
    uint32_t ancilla_measure_layer;
};

// Layer-by-layer schedule of encoding, rotation and two gauge rounds; returns where the
// gauge rounds start.
Stage1Plan append_stage1(Circuit &c, Variant variant, const std::array<uint32_t, 4> &b,
                         const std::array<uint32_t, 5> &a) {
    uint32_t n = c.num_qubits();
    auto op = [&](std::initializer_list<std::pair<uint32_t, char>> terms) {
        PauliString s(n);
        for (auto [q, ch] : terms) {
            s.set(q, ch);
        }
        return s;
    };
    for (uint32_t q : b) {
        c.add(0, INIT_Z(q));
    }
    c.add(1, H(b[1]));
    c.add(1, H(b[3]));
    c.add(2, CNOT(b[1], b[0]));
    c.add(2, CNOT(b[3], b[2]));

    Stage1Plan plan{0, NO_QUBIT};
    switch (variant) {
        case Variant::DIRECT:
            c.add(3, ROT_ZZ(b[0], b[2]));
            c.add_rotation_mark(3, op({{b[0], 'Z'}, {b[2], 'Z'}}), op({{b[0], 'X'}, {b[1], 'X'}}));
            plan.gauge_start = 4;
            break;
        case Variant::INDIRECT_TWO_CNOT:
            c.add(3, CNOT(b[0], b[2]));
            c.add(4, ROT_Z(b[2]));
            c.add_rotation_mark(4, op({{b[2], 'Z'}}), op({{b[0], 'X'}, {b[1], 'X'}, {b[2], 'X'}}));
            c.add(5, CNOT(b[0], b[2]));
            plan.gauge_start = 6;
            break;
        case Variant::INDIRECT_ANCILLA: {
            uint32_t m4 = a[4];
            c.add(2, INIT_Z(m4));
            c.add(3, CNOT(b[0], m4));
            c.add(4, CNOT(b[2], m4));
            c.add(5, ROT_Z(m4));
            c.add_rotation_mark(5, op({{m4, 'Z'}}), op({{b[0], 'X'}, {b[1], 'X'}, {m4, 'X'}}));
            c.add(6, CNOT(b[2], m4));
            c.add(7, CNOT(b[0], m4));
            c.add(8, MEASURE_Z(m4));
            plan.gauge_start = 8;
            plan.ancilla_measure_layer = 8;
            break;
        }
    }

    uint32_t m0 = a[0], m1 = a[1], m2 = a[2], m3 = a[3];
    uint32_t g = plan.gauge_start;
    c.add(g - 2, INIT_Z(m0));
    c.add(g - 2, INIT_Z(m3));
    c.add(g - 1, H(m0));
    c.add(g - 1, H(m3));
    for (uint32_t k = 0; k < 2; k++) {
        uint32_t t = g + 6 * k;
        c.add(t, CNOT(m0, b[0]));
        c.add(t, CNOT(m3, b[1]));
        c.add(t + 1, CNOT(m0, b[2]));
        c.add(t + 1, CNOT(m3, b[3]));
        c.add(t + 1, INIT_Z(m1));
        c.add(t + 1, INIT_Z(m2));
        c.add(t + 2, CNOT(b[0], m1));
        c.add(t + 2, CNOT(b[2], m2));
        c.add(t + 2, H(m0));
        c.add(t + 2, H(m3));
        c.add(t + 3, CNOT(b[1], m1));
        c.add(t + 3, CNOT(b[3], m2));
        c.add(t + 3, MEASURE_Z(m0));
        c.add(t + 3, MEASURE_Z(m3));
        c.add(t + 4, MEASURE_Z(m1));
        c.add(t + 4, MEASURE_Z(m2));
        if (k == 0) {
            c.add(t + 4, INIT_Z(m0));
            c.add(t + 4, INIT_Z(m3));
            c.add(t + 5, H(m0));
            c.add(t + 5, H(m3));
        }
    }
    return plan;
}

void resolve_stage1(InjectionCircuit &ic, const Stage1Plan &plan) {
    const Circuit &c = ic.circuit;
    for (uint32_t k = 0; k < 2; k++) {
        uint32_t t = plan.gauge_start + 6 * k;
        ic.gauge_measurements[k] = {c.measurement_index(t + 3, ic.ancillas[0]), c.measurement_index(t + 3, ic.ancillas[3]),
                                    c.measurement_index(t + 4, ic.ancillas[1]), c.measurement_index(t + 4, ic.ancillas[2])};
    }
    if (plan.ancilla_measure_layer != NO_QUBIT) {
        ic.ancilla_check = c.measurement_index(plan.ancilla_measure_layer, ic.ancillas[4]);
    }
}

// Data initialization plus one noisy and one ideal syndrome round starting at layer t0.
void append_stage2(Circuit &c, const RotatedSurfaceLayout &layout, uint32_t t0) {
    for (int i = 0; i < layout.d; i++) {
        for (int j = 0; j < layout.d; j++) {
            char ch = expansion_init(i, j);
            if (ch == '+') {
                c.add(t0, INIT_X(layout.data_index(i, j)));
            } else if (ch == '0') {
                c.add(t0, INIT_Z(layout.data_index(i, j)));
            }
        }
    }
    uint32_t ideal = append_syndrome_round(c, layout, t0 + 1);
    uint32_t end = append_syndrome_round(c, layout, ideal);
    for (uint32_t t = ideal; t < end; t++) {
        c.set_noisy(t, false);
    }
}

void add_stage2_detectors(InjectionCircuit &ic, const RotatedSurfaceLayout &layout) {
    Circuit &c = ic.circuit;
    uint32_t r1 = ic.stage2_first_layer + 1 + ROUND_DEPTH - 1;
    uint32_t r2 = r1 + ROUND_DEPTH;
    std::vector<DeterminedPlaquette> det = determined_plaquettes(layout);
    for (size_t k = 0; k < layout.plaquettes.size(); k++) {
        uint32_t mq = layout.plaquettes[k].measure_qubit;
        uint32_t a = c.measurement_index(r1, mq);
        uint32_t b = c.measurement_index(r2, mq);
        c.add_detector({a, b});
        if (det[k].determined) {
            std::vector<uint32_t> ms{a};
            if (ic.has_stage1) {
                // Last Z0Z1 and Z2Z3 gauge outcomes.
                if (det[k].gauge_deps & 1) {
                    ms.push_back(ic.gauge_measurements[1][2]);
                }
                if (det[k].gauge_deps & 2) {
                    ms.push_back(ic.gauge_measurements[1][3]);
                }
            }
            c.add_detector(ms);
        }
    }
}

}  // namespace

InjectionCircuit build_stage1_circuit(Variant variant) {
    InjectionCircuit ic;
    ic.variant = variant;
    ic.d = 0;
    ic.circuit = Circuit(9);
    ic.block = {0, 1, 2, 3};
    ic.ancillas = {4, 5, 6, 7, 8};
    ic.has_stage1 = true;
    Stage1Plan plan = append_stage1(ic.circuit, variant, ic.block, ic.ancillas);
    ic.circuit.finalize();
    resolve_stage1(ic, plan);
    FourTwoTwoCode code;
    PauliString lx(9), lz(9);
    for (uint32_t q = 0; q < 4; q++) {
        lx.set(q, code.l_x.x(q), code.l_x.z(q));
        lz.set(q, code.l_z.x(q), code.l_z.z(q));
    }
    ic.circuit.add_observable(lx);
    ic.circuit.add_observable(lz);
    return ic;
}

InjectionCircuit build_stage2_circuit(int d) {
    RotatedSurfaceLayout layout = build_layout(d);
    InjectionCircuit ic;
    ic.d = d;
    ic.circuit = Circuit(layout.num_qubits());
    ic.block = {layout.data_index(0, 0), layout.data_index(0, 1), layout.data_index(1, 0), layout.data_index(1, 1)};
    ic.ancillas = {NO_QUBIT, NO_QUBIT, NO_QUBIT, NO_QUBIT, NO_QUBIT};
    ic.has_stage2 = true;
    ic.stage2_first_layer = 0;
    append_stage2(ic.circuit, layout, 0);
    ic.circuit.finalize();
    add_stage2_detectors(ic, layout);
    ic.circuit.add_observable(layout.logical_x_op());
    ic.circuit.add_observable(layout.logical_z_op());
    return ic;
}

InjectionCircuit build_injection_circuit(Variant variant, int d) {
    RotatedSurfaceLayout layout = build_layout(d);
    uint32_t base = layout.num_qubits();
    InjectionCircuit ic;
    ic.variant = variant;
    ic.d = d;
    ic.circuit = Circuit(base + 5);
    ic.block = {layout.data_index(0, 0), layout.data_index(0, 1), layout.data_index(1, 0), layout.data_index(1, 1)};
    ic.ancillas = {base, base + 1, base + 2, base + 3, base + 4};
    ic.has_stage1 = true;
    ic.has_stage2 = true;
    Stage1Plan plan = append_stage1(ic.circuit, variant, ic.block, ic.ancillas);
    // The last Z-gauge measurement shares its layer with the patch initialization.
    ic.stage2_first_layer = plan.gauge_start + 10;
    append_stage2(ic.circuit, layout, ic.stage2_first_layer);
    ic.circuit.finalize();
    resolve_stage1(ic, plan);
    add_stage2_detectors(ic, layout);
    ic.circuit.add_observable(layout.logical_x_op(base + 5));
    ic.circuit.add_observable(layout.logical_z_op(base + 5));
    return ic;
}

void InjectionCircuit::evaluate_batch(const FrameSimulator &sim, uint8_t lanes, std::vector<InjectionOutcome> &out) const {
    out.assign(lanes, {});
    uint64_t rejected1 = 0;
    if (has_stage1) {
        uint64_t w[2][4];
        for (int k = 0; k < 2; k++) {
            for (int i = 0; i < 4; i++) {
                w[k][i] = sim.measurement(gauge_measurements[k][i]);
            }
        }
        uint64_t sx1 = w[0][0] ^ w[0][1], sz1 = w[0][2] ^ w[0][3];
        uint64_t sx2 = w[1][0] ^ w[1][1], sz2 = w[1][2] ^ w[1][3];
        rejected1 = (sx1 ^ sx2) | (sz1 ^ sz2) | sx1 | sz1;
        if (ancilla_check != NO_QUBIT) {
            rejected1 |= sim.measurement(ancilla_check);
        }
    }
    uint64_t rejected2 = 0;
    for (size_t k = 0; k < circuit.detectors().size(); k++) {
        rejected2 |= sim.detector(k);
    }
    uint64_t lz = sim.observable(0), lx = sim.observable(1);
    for (uint8_t lane = 0; lane < lanes; lane++) {
        InjectionOutcome &o = out[lane];
        o.rounds_used = has_stage1 ? 2 : 0;
        if (lane_bit(rejected1, lane)) {
            o.stage = InjectionStage::REJECTED_STAGE1;
            continue;
        }
        o.rounds_used += has_stage2 ? 2 : 0;
        if (lane_bit(rejected2, lane)) {
            o.stage = InjectionStage::REJECTED_STAGE2;
            continue;
        }
        o.stage = InjectionStage::ACCEPTED;
        o.logical_z_error = lane_bit(lz, lane);
        o.logical_x_error = lane_bit(lx, lane);
    }
}

InjectionOutcome InjectionCircuit::evaluate(const FrameSimulator &sim, uint8_t lane) const {
    std::vector<InjectionOutcome> out;
    evaluate_batch(sim, 64, out);
    return out[lane];
}

OracleResult oracle_leading_coefficients(const InjectionCircuit &ic) {
    OracleResult r;
    std::vector<InjectionOutcome> outcomes;
    visit_single_faults(ic.circuit, [&](uint32_t site, uint8_t, const FrameSimulator &sim, uint8_t lane) {
        if (lane == 0) {
            ic.evaluate_batch(sim, 64, outcomes);
        }
        Rational c = alternative_coefficient(ic.circuit.fault_sites()[site].kind);
        const InjectionOutcome &o = outcomes[lane];
        r.faults++;
        switch (o.stage) {
            case InjectionStage::REJECTED_STAGE1:
                r.c_reject_stage1 += c;
                break;
            case InjectionStage::REJECTED_STAGE2:
                r.c_reject_stage2 += c;
                break;
            case InjectionStage::ACCEPTED:
                if (o.logical_z_error) {
                    r.c_z += c;
                }
                if (o.logical_x_error) {
                    r.c_x += c;
                }
                break;
        }
    });
    return r;
}

OracleResult oracle_leading_coefficients(Variant variant, int d) {
    return oracle_leading_coefficients(build_injection_circuit(variant, d));
}

double InjectionEstimate::sigma_acceptance() const {
    return binomial_sigma(accepted, shots);
}

double InjectionEstimate::sigma_z() const {
    return binomial_sigma(logical_z, accepted);
}

InjectionEstimate run_injection_experiment(int d, double p, uint64_t shots, Variant variant, uint64_t seed,
                                           int threads) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    if (!(p >= 0 && p <= 0.1)) {
        throw std::invalid_argument("physical error rate must lie in [0, 0.1]");
    }
    InjectionCircuit ic = build_injection_circuit(variant, d);
    constexpr uint64_t CHUNK = 4096;
    size_t n_chunks = (size_t)((shots + CHUNK - 1) / CHUNK);
    std::vector<std::array<uint64_t, 5>> counts(n_chunks, {0, 0, 0, 0, 0});
    parallel_for(n_chunks, threads, [&](size_t chunk) {
        FrameSimulator sim(ic.circuit);
        std::vector<FaultEvent> events;
        std::vector<InjectionOutcome> outcomes;
        uint64_t begin = chunk * CHUNK;
        uint64_t end = std::min(shots, begin + CHUNK);
        auto &c = counts[chunk];
        for (uint64_t b = begin; b < end; b += 64) {
            uint8_t lanes = (uint8_t)std::min<uint64_t>(64, end - b);
            events.clear();
            for (uint8_t lane = 0; lane < lanes; lane++) {
                std::mt19937_64 rng = shot_stream(seed, b + lane);
                sample_fault_events(ic.circuit, p, rng, lane, events);
            }
            std::sort(events.begin(), events.end());
            sim.run(events);
            ic.evaluate_batch(sim, lanes, outcomes);
            for (const InjectionOutcome &o : outcomes) {
                c[0] += o.stage == InjectionStage::ACCEPTED;
                c[1] += o.stage == InjectionStage::REJECTED_STAGE1;
                c[2] += o.stage == InjectionStage::REJECTED_STAGE2;
                c[3] += o.logical_z_error;
                c[4] += o.logical_x_error;
            }
        }
    });
    InjectionEstimate est;
    est.d = d;
    est.p = p;
    est.variant = variant;
    est.shots = shots;
    for (const auto &c : counts) {
        est.accepted += c[0];
        est.rejected_stage1 += c[1];
        est.rejected_stage2 += c[2];
        est.logical_z += c[3];
        est.logical_x += c[4];
    }
    return est;
}

}  // namespace star
