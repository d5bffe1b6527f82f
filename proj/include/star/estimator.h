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

#ifndef STAR_ESTIMATOR_H
#define STAR_ESTIMATOR_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace star {

/// P_L(d, p) = C (p / p_th)^((d+1)/2) for one error type.
struct ScalingFit {
    double c = 0;
    double p_th = 0;
    double sigma_c = 0;
    double sigma_p_th = 0;

    double evaluate(int d, double p) const;
};

struct FitResult {
    ScalingFit z;
    ScalingFit x;
};

/// Reference parameters fitted to large-distance simulations:
/// C_Z = 0.0679(76), p_th,Z = 0.00385(10), C_X = 0.0819(97), p_th,X = 0.00416(12).
FitResult reference_fit();

struct ScalingPoint {
    int d;
    double p;
    double rate;
    double sigma;
};

/// Weighted least squares for (ln C, ln p_th) on ln P - k ln p = ln C - k ln p_th with
/// k = (d+1)/2 and weights (P / sigma)^2. Points with zero rate are skipped. Uncertainties come
/// from the parameter covariance. Throws std::invalid_argument with fewer than two distinct d.
ScalingFit fit_scaling(const std::vector<ScalingPoint> &points);

struct CliffordBudget {
    double p_round;
    double n_clifford;
};

/// Per-round logical error P_Z + P_X and the resulting Clifford budget 1 / P / divisor.
CliffordBudget clifford_budget(const FitResult &fit, int d, double p, double divisor = 1);

enum class LayoutScheme : uint8_t {
    SCHEME_4N,
    SCHEME_3N,
    SCHEME_2N,
    /// 1.5n + 5 patches.
    COMPACT,
    /// 2n + 6 patches.
    INTERMEDIATE,
};

const char *scheme_name(LayoutScheme s);
/// Accepts "4n", "3n", "2n", "compact" and "intermediate". Throws std::invalid_argument.
LayoutScheme parse_scheme(std::string_view name);
/// Patches needed for n logical data qubits.
double scheme_patches(LayoutScheme s, int64_t n);

/// Each patch takes about 2 d^2 physical qubits.
int64_t patches_available(double n_phys, int d);
/// Largest n whose patch count fits into the device.
int64_t max_logical_qubits(double n_phys, int d, LayoutScheme scheme);

struct RotationBudget {
    double p_rotation = 0;
    int64_t n_rotation = 0;
    bool unbounded = false;
    double pec_overhead = 1;
};

/// Rotation error c_z p, the budget floor(1 / (2 c_z p)) and the PEC overhead for that many
/// rotations.
RotationBudget rotation_budget(double p, double c_z);

struct QuantumVolume {
    int64_t m_nisq = 0;
    bool nisq_unbounded = false;
    int64_t m_star = 0;
    bool star_unbounded = false;
    int64_t log2_vq_star = 0;
};

/// Largest square circuit width m with m^2 (1.29 sqrt(m) - 0.78) p < 1 for an uncorrected
/// device; for the partially corrected one, each SU(4) block costs 15 analog rotations (half
/// of them on one qubit), so m^2 (15/2) eps < 1 with eps the per-rotation error.
QuantumVolume quantum_volume(double p, int64_t n_logical, double rotation_error);

enum class FtqcBlock : uint8_t { FAST, INTERMEDIATE, COMPACT };

const char *ftqc_block_name(FtqcBlock b);
/// Patches of the data block for n qubits: 2n + sqrt(8n) + 1, 2n + 4 or 1.5n + 3.
double ftqc_block_patches(FtqcBlock b, int64_t n);
/// Clocks spent per T gate by each block.
int64_t ftqc_clocks_per_t(FtqcBlock b);

inline constexpr int64_t FACTORY_PATCHES = 11;
inline constexpr int64_t FACTORY_CLOCKS = 11;
inline constexpr int64_t STAR_CLOCKS_PER_ROTATION = 18;

struct FtqcRow {
    std::string architecture;
    int64_t logical_qubits = 0;
    int64_t clocks_per_rotation = 0;
    int64_t factory_blocks = 0;
    int64_t factory_patches = 0;
};

struct FtqcComparison {
    double injected_error = 0;
    double distilled_error = 0;
    double delta = 0;
    int64_t t_count = 0;
    std::vector<FtqcRow> rows;
};

/// T gates needed to approximate a rotation to accuracy delta: ceil(3 log2(1/delta)).
int64_t t_count(double delta);

/// Partially corrected compact layout against three distillation-based layouts of the same
/// device. delta = 2 c_z p is the rotation accuracy to match.
FtqcComparison ftqc_comparison(double n_phys, double p, int d, double c_z);

struct HubbardSizing {
    int64_t sites = 0;
    int64_t rotations_per_step = 0;
    int64_t trotter_steps = 0;
};

struct QaoaSizing {
    int64_t nodes = 0;
    int64_t rotations_per_layer = 0;
    int64_t depth = 0;
};

struct ApplicationSizing {
    HubbardSizing hubbard;
    QaoaSizing qaoa;
};

/// Two spin orbitals per site and 5N - 2 rotations per Trotter step; N + N(N-1)/2 rotations
/// per QAOA layer on N nodes.
ApplicationSizing application_sizing(int64_t n_logical, int64_t n_rotation);

/// Injection attempts available during one RUS step.
int64_t injection_repeats(int d);
double effective_injection_failure(double f_single, int64_t repeats);

struct ResourceReport {
    double n_phys = 0;
    double p = 0;
    int d = 0;
    LayoutScheme scheme = LayoutScheme::COMPACT;
    double c_z = 0;
    int64_t patches = 0;
    int64_t n_logical = 0;
    CliffordBudget clifford{};
    RotationBudget rotation{};
    QuantumVolume qv{};
    FtqcComparison ftqc{};
    ApplicationSizing apps{};

    std::string to_json() const;
};

ResourceReport build_report(const FitResult &fit, double n_phys, double p, int d, LayoutScheme scheme, double c_z,
                            double clifford_divisor = 1);

}  // namespace star

#endif
