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

#include "star/estimator.h"

#include "gtest/gtest.h"
#include "json.hpp"

using namespace star;

namespace {

constexpr double C_Z_DIRECT = 2.0 / 15.0;

}  // namespace

TEST(estimator, fit_recovers_synthetic_parameters) {
    ScalingFit truth{0.05, 0.004, 0, 0};
    std::vector<ScalingPoint> pts;
    for (int d : {3, 5, 7}) {
        for (double p : {1e-3, 2e-3, 3e-3}) {
            double r = truth.evaluate(d, p);
            pts.push_back({d, p, r, 0.01 * r});
        }
    }
    ScalingFit fit = fit_scaling(pts);
    EXPECT_NEAR(fit.c, 0.05, 1e-9);
    EXPECT_NEAR(fit.p_th, 0.004, 1e-12);
    EXPECT_GT(fit.sigma_p_th, 0);
}

TEST(estimator, fit_needs_two_distances) {
    std::vector<ScalingPoint> pts{{3, 1e-3, 1e-3, 1e-4}, {3, 2e-3, 4e-3, 1e-4}};
    EXPECT_THROW(fit_scaling(pts), std::invalid_argument);
}

TEST(estimator, per_round_error_and_clifford_budget) {
    FitResult fit = reference_fit();
    CliffordBudget b7 = clifford_budget(fit, 7, 1e-4);
    CliffordBudget b9 = clifford_budget(fit, 9, 1e-4);
    EXPECT_NEAR(b7.p_round, 5.82e-8, 0.01e-8);
    EXPECT_NEAR(b9.p_round, 1.46e-9, 0.01e-9);
    EXPECT_NEAR(b7.n_clifford, 1.72e7, 0.005e7);
    EXPECT_NEAR(b9.n_clifford, 6.85e8, 0.005e8);
    EXPECT_NEAR(clifford_budget(fit, 7, 1e-4, 2).n_clifford, b7.n_clifford / 2, 1);
}

TEST(estimator, logical_qubit_counts) {
    EXPECT_EQ(patches_available(1e4, 7), 102);
    EXPECT_EQ(patches_available(1e4, 9), 61);
    EXPECT_EQ(max_logical_qubits(1e4, 7, LayoutScheme::COMPACT), 64);
    EXPECT_EQ(max_logical_qubits(1e4, 9, LayoutScheme::COMPACT), 37);
    EXPECT_EQ(max_logical_qubits(1e4, 7, LayoutScheme::SCHEME_2N), 51);
    EXPECT_EQ(max_logical_qubits(1e4, 7, LayoutScheme::INTERMEDIATE), 48);
    EXPECT_EQ(max_logical_qubits(1e4, 7, LayoutScheme::SCHEME_4N), 25);
    EXPECT_EQ(max_logical_qubits(100, 7, LayoutScheme::COMPACT), 0);
    for (LayoutScheme s : {LayoutScheme::SCHEME_4N, LayoutScheme::SCHEME_3N, LayoutScheme::SCHEME_2N,
                           LayoutScheme::COMPACT, LayoutScheme::INTERMEDIATE}) {
        EXPECT_EQ(parse_scheme(scheme_name(s)), s);
        // The answer is the largest n that fits.
        int64_t n = max_logical_qubits(1e5, 9, s);
        double budget = (double)patches_available(1e5, 9);
        EXPECT_LE(scheme_patches(s, n), budget);
        EXPECT_GT(scheme_patches(s, n + 1), budget);
    }
    EXPECT_THROW(parse_scheme("5n"), std::invalid_argument);
}

TEST(estimator, rotation_budget) {
    RotationBudget b = rotation_budget(1e-4, C_Z_DIRECT);
    EXPECT_EQ(b.n_rotation, 37500);
    EXPECT_NEAR(b.pec_overhead, 54.6, 0.1);
    EXPECT_FALSE(b.unbounded);
    EXPECT_TRUE(rotation_budget(0, C_Z_DIRECT).unbounded);
}

TEST(estimator, quantum_volume) {
    QuantumVolume exact = quantum_volume(1e-4, 64, 2 * C_Z_DIRECT * 1e-4);
    EXPECT_EQ(exact.m_nisq, 37);
    EXPECT_EQ(exact.m_star, 70);
    EXPECT_EQ(exact.log2_vq_star, 64);
    QuantumVolume quoted = quantum_volume(1e-4, 64, 2.6e-5);
    EXPECT_EQ(quoted.m_star, 71);
    EXPECT_EQ(quoted.log2_vq_star, 64);
    QuantumVolume limited = quantum_volume(1e-4, 37, 2 * C_Z_DIRECT * 1e-4);
    EXPECT_EQ(limited.log2_vq_star, 37);
    EXPECT_TRUE(quantum_volume(0, 10, 0).nisq_unbounded);
    EXPECT_TRUE(quantum_volume(0, 10, 0).star_unbounded);
}

TEST(estimator, ftqc_comparison_table) {
    FtqcComparison cmp = ftqc_comparison(1e4, 1e-4, 7, C_Z_DIRECT);
    EXPECT_EQ(cmp.t_count, 46);
    ASSERT_EQ(cmp.rows.size(), 4u);
    std::vector<std::pair<int64_t, int64_t>> expected{{64, 18}, {0, 46}, {32, 230}, {51, 414}};
    for (size_t k = 0; k < 4; k++) {
        EXPECT_EQ(cmp.rows[k].logical_qubits, expected[k].first) << cmp.rows[k].architecture;
        EXPECT_EQ(cmp.rows[k].clocks_per_rotation, expected[k].second) << cmp.rows[k].architecture;
    }
    EXPECT_EQ(cmp.rows[0].architecture, "STAR Compact");
    EXPECT_EQ(cmp.rows[1].architecture, "FTQC Fast");
    EXPECT_THROW(t_count(0), std::invalid_argument);
}

TEST(estimator, application_sizing) {
    ApplicationSizing a7 = application_sizing(64, 37500);
    EXPECT_EQ(a7.hubbard.sites, 32);
    EXPECT_EQ(a7.hubbard.rotations_per_step, 158);
    EXPECT_EQ(a7.hubbard.trotter_steps, 237);
    EXPECT_EQ(a7.qaoa.nodes, 64);
    EXPECT_EQ(a7.qaoa.depth, 18);
    ApplicationSizing a9 = application_sizing(37, 37500);
    EXPECT_EQ(a9.hubbard.sites, 18);
    EXPECT_EQ(a9.hubbard.rotations_per_step, 88);
    EXPECT_EQ(a9.hubbard.trotter_steps, 426);
    EXPECT_EQ(a9.qaoa.nodes, 37);
    EXPECT_EQ(a9.qaoa.depth, 53);
    ApplicationSizing none = application_sizing(1, 37500);
    EXPECT_EQ(none.hubbard.trotter_steps, 0);
}

TEST(estimator, injection_repeats) {
    EXPECT_EQ(injection_repeats(7), 3);
    EXPECT_EQ(injection_repeats(9), 4);
    EXPECT_NEAR(effective_injection_failure(0.1, 4), 1e-4, 1e-15);
    EXPECT_THROW(effective_injection_failure(0.1, -1), std::invalid_argument);
}

TEST(estimator, report_json) {
    ResourceReport r = build_report(reference_fit(), 1e4, 1e-4, 9, LayoutScheme::COMPACT, C_Z_DIRECT);
    auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(j["n_logical"], 37);
    EXPECT_EQ(j["n_rotation"], 37500);
    EXPECT_EQ(j["qv_nisq"], 37);
    EXPECT_EQ(j["qv_star"], 37);
    EXPECT_EQ(j["ftqc"].size(), 4u);
    EXPECT_EQ(j["hubbard"]["trotter_steps"], 426);
}
