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

#include <Eigen/Dense>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "star/rotation.h"

namespace star {

namespace {

// Guards floors and ceilings of values that are integers in exact arithmetic.
constexpr double ROUNDING_SLACK = 1e-9;

int64_t floor_exact(double v) {
    return (int64_t)std::floor(v + ROUNDING_SLACK);
}

int64_t ceil_exact(double v) {
    return (int64_t)std::ceil(v - ROUNDING_SLACK);
}

}  // namespace

double ScalingFit::evaluate(int d, double p) const {
    return c * std::pow(p / p_th, (d + 1) / 2.0);
}

FitResult reference_fit() {
    return {{0.0679, 0.00385, 0.0076, 0.00010}, {0.0819, 0.00416, 0.0097, 0.00012}};
}

ScalingFit fit_scaling(const std::vector<ScalingPoint> &points) {
    std::vector<const ScalingPoint *> used;
    std::set<int> distances;
    for (const ScalingPoint &pt : points) {
        if (pt.rate > 0 && pt.p > 0) {
            used.push_back(&pt);
            distances.insert(pt.d);
        }
    }
    if (distances.size() < 2) {
        throw std::invalid_argument("C and p_th are not identifiable from fewer than two code distances");
    }
    Eigen::MatrixXd a((Eigen::Index)used.size(), 2);
    Eigen::VectorXd y((Eigen::Index)used.size());
    Eigen::VectorXd w((Eigen::Index)used.size());
    for (size_t i = 0; i < used.size(); i++) {
        const ScalingPoint &pt = *used[i];
        double k = (pt.d + 1) / 2.0;
        a((Eigen::Index)i, 0) = 1;
        a((Eigen::Index)i, 1) = -k;
        y((Eigen::Index)i) = std::log(pt.rate) - k * std::log(pt.p);
        double rel = pt.sigma > 0 ? pt.sigma / pt.rate : 1;
        w((Eigen::Index)i) = 1 / (rel * rel);
    }
    Eigen::MatrixXd normal = a.transpose() * w.asDiagonal() * a;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(normal);
    if (ldlt.info() != Eigen::Success || std::abs(normal.determinant()) < 1e-300) {
        throw std::invalid_argument("degenerate design matrix");
    }
    Eigen::VectorXd beta = ldlt.solve(a.transpose() * w.asDiagonal() * y);
    Eigen::MatrixXd cov = ldlt.solve(Eigen::MatrixXd::Identity(2, 2));
    ScalingFit fit;
    fit.c = std::exp(beta(0));
    fit.p_th = std::exp(beta(1));
    fit.sigma_c = fit.c * std::sqrt(cov(0, 0));
    fit.sigma_p_th = fit.p_th * std::sqrt(cov(1, 1));
    return fit;
}

CliffordBudget clifford_budget(const FitResult &fit, int d, double p, double divisor) {
    double round = fit.z.evaluate(d, p) + fit.x.evaluate(d, p);
    return {round, 1 / round / divisor};
}

const char *scheme_name(LayoutScheme s) {
    switch (s) {
        case LayoutScheme::SCHEME_4N:
            return "4n";
        case LayoutScheme::SCHEME_3N:
            return "3n";
        case LayoutScheme::SCHEME_2N:
            return "2n";
        case LayoutScheme::COMPACT:
            return "compact";
        case LayoutScheme::INTERMEDIATE:
            return "intermediate";
    }
    return "?";
}

LayoutScheme parse_scheme(std::string_view name) {
    for (LayoutScheme s : {LayoutScheme::SCHEME_4N, LayoutScheme::SCHEME_3N, LayoutScheme::SCHEME_2N,
                           LayoutScheme::COMPACT, LayoutScheme::INTERMEDIATE}) {
        if (name == scheme_name(s)) {
            return s;
        }
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) +
                                "' (expected 4n, 3n, 2n, compact or intermediate)");
}

double scheme_patches(LayoutScheme s, int64_t n) {
    switch (s) {
        case LayoutScheme::SCHEME_4N:
            return 4.0 * n;
        case LayoutScheme::SCHEME_3N:
            return 3.0 * n;
        case LayoutScheme::SCHEME_2N:
            return 2.0 * n;
        case LayoutScheme::COMPACT:
            return 1.5 * n + 5;
        case LayoutScheme::INTERMEDIATE:
            return 2.0 * n + 6;
    }
    return 0;
}

int64_t patches_available(double n_phys, int d) {
    if (d < 1 || n_phys < 0) {
        throw std::invalid_argument("need d >= 1 and a non-negative qubit count");
    }
    return floor_exact(n_phys / (2.0 * d * d));
}

namespace {

// Largest n >= 0 with patches(n) <= budget, or 0 when even n = 1 does not fit.
template <typename F>
int64_t invert_patches(const F &patches, double budget) {
    if (patches(1) > budget + ROUNDING_SLACK) {
        return 0;
    }
    int64_t lo = 1, hi = 2;
    while (patches(hi) <= budget + ROUNDING_SLACK) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        int64_t mid = lo + (hi - lo) / 2;
        if (patches(mid) <= budget + ROUNDING_SLACK) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

int64_t max_logical_qubits(double n_phys, int d, LayoutScheme scheme) {
    double budget = (double)patches_available(n_phys, d);
    return invert_patches([&](int64_t n) { return scheme_patches(scheme, n); }, budget);
}

RotationBudget rotation_budget(double p, double c_z) {
    RotationBudget b;
    b.p_rotation = c_z * p;
    if (!(b.p_rotation > 0)) {
        b.unbounded = true;
        return b;
    }
    b.n_rotation = floor_exact(1 / (2 * b.p_rotation));
    b.pec_overhead = sampling_overhead(b.p_rotation, (double)b.n_rotation).exact;
    return b;
}

QuantumVolume quantum_volume(double p, int64_t n_logical, double rotation_error) {
    QuantumVolume qv;
    auto nisq_ok = [&](int64_t m) { return (double)m * m * (1.29 * std::sqrt((double)m) - 0.78) * p < 1; };
    auto star_ok = [&](int64_t m) { return (double)m * m * 7.5 * rotation_error < 1; };
    // Both conditions are monotone in m, so gallop then bisect.
    auto largest = [](const auto &ok) {
        if (!ok(1)) {
            return int64_t{0};
        }
        int64_t lo = 1, hi = 2;
        while (ok(hi)) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            int64_t mid = lo + (hi - lo) / 2;
            (ok(mid) ? lo : hi) = mid;
        }
        return lo;
    };
    if (p > 0) {
        qv.m_nisq = largest(nisq_ok);
    } else {
        qv.nisq_unbounded = true;
    }
    if (rotation_error > 0) {
        qv.m_star = largest(star_ok);
        qv.log2_vq_star = std::min(qv.m_star, n_logical);
    } else {
        qv.star_unbounded = true;
        qv.log2_vq_star = n_logical;
    }
    return qv;
}

const char *ftqc_block_name(FtqcBlock b) {
    switch (b) {
        case FtqcBlock::FAST:
            return "FTQC Fast";
        case FtqcBlock::INTERMEDIATE:
            return "FTQC Intermediate";
        case FtqcBlock::COMPACT:
            return "FTQC Compact";
    }
    return "?";
}

double ftqc_block_patches(FtqcBlock b, int64_t n) {
    switch (b) {
        case FtqcBlock::FAST:
            return 2.0 * n + std::sqrt(8.0 * n) + 1;
        case FtqcBlock::INTERMEDIATE:
            return 2.0 * n + 4;
        case FtqcBlock::COMPACT:
            return 1.5 * n + 3;
    }
    return 0;
}

int64_t ftqc_clocks_per_t(FtqcBlock b) {
    switch (b) {
        case FtqcBlock::FAST:
            return 1;
        case FtqcBlock::INTERMEDIATE:
            return 5;
        case FtqcBlock::COMPACT:
            return 9;
    }
    return 0;
}

int64_t t_count(double delta) {
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("rotation accuracy must lie in (0, 1)");
    }
    return ceil_exact(3 * std::log2(1 / delta));
}

FtqcComparison ftqc_comparison(double n_phys, double p, int d, double c_z) {
    FtqcComparison cmp;
    cmp.injected_error = 46 * p / 15;
    cmp.distilled_error = 35 * std::pow(cmp.injected_error, 3);
    cmp.delta = 2 * c_z * p;
    cmp.t_count = t_count(cmp.delta);
    int64_t patches = patches_available(n_phys, d);

    FtqcRow star;
    star.architecture = "STAR Compact";
    star.logical_qubits = max_logical_qubits(n_phys, d, LayoutScheme::COMPACT);
    star.clocks_per_rotation = STAR_CLOCKS_PER_ROTATION;
    cmp.rows.push_back(star);

    for (FtqcBlock b : {FtqcBlock::FAST, FtqcBlock::INTERMEDIATE, FtqcBlock::COMPACT}) {
        FtqcRow row;
        row.architecture = ftqc_block_name(b);
        int64_t per_t = ftqc_clocks_per_t(b);
        row.clocks_per_rotation = cmp.t_count * per_t;
        // Enough factories to supply one magic state per T-gate slot.
        row.factory_blocks = ceil_exact((double)FACTORY_CLOCKS / (double)per_t);
        row.factory_patches = FACTORY_PATCHES * row.factory_blocks;
        double remaining = (double)(patches - row.factory_patches);
        row.logical_qubits = invert_patches([&](int64_t n) { return ftqc_block_patches(b, n); }, remaining);
        cmp.rows.push_back(row);
    }
    return cmp;
}

ApplicationSizing application_sizing(int64_t n_logical, int64_t n_rotation) {
    ApplicationSizing a;
    a.hubbard.sites = n_logical / 2;
    a.hubbard.rotations_per_step = a.hubbard.sites > 0 ? 5 * a.hubbard.sites - 2 : 0;
    a.hubbard.trotter_steps = a.hubbard.rotations_per_step > 0 ? n_rotation / a.hubbard.rotations_per_step : 0;
    a.qaoa.nodes = n_logical;
    a.qaoa.rotations_per_layer = n_logical + n_logical * (n_logical - 1) / 2;
    a.qaoa.depth = a.qaoa.rotations_per_layer > 0 ? n_rotation / a.qaoa.rotations_per_layer : 0;
    return a;
}

int64_t injection_repeats(int d) {
    return (2 * d) / 4;
}

double effective_injection_failure(double f_single, int64_t repeats) {
    if (repeats < 0) {
        throw std::invalid_argument("repeats must be non-negative");
    }
    return std::pow(f_single, (double)repeats);
}

ResourceReport build_report(const FitResult &fit, double n_phys, double p, int d, LayoutScheme scheme, double c_z,
                            double clifford_divisor) {
    ResourceReport r;
    r.n_phys = n_phys;
    r.p = p;
    r.d = d;
    r.scheme = scheme;
    r.c_z = c_z;
    r.patches = patches_available(n_phys, d);
    r.n_logical = max_logical_qubits(n_phys, d, scheme);
    r.clifford = clifford_budget(fit, d, p, clifford_divisor);
    r.rotation = rotation_budget(p, c_z);
    r.qv = quantum_volume(p, r.n_logical, 2 * c_z * p);
    if (c_z > 0) {
        r.ftqc = ftqc_comparison(n_phys, p, d, c_z);
    }
    r.apps = application_sizing(r.n_logical, r.rotation.n_rotation);
    return r;
}

std::string ResourceReport::to_json() const {
    nlohmann::ordered_json j;
    j["n_phys"] = n_phys;
    j["p"] = p;
    j["d"] = d;
    j["scheme"] = scheme_name(scheme);
    j["c_z"] = c_z;
    j["patches"] = patches;
    j["n_logical"] = n_logical;
    j["p_round"] = clifford.p_round;
    j["n_clifford"] = clifford.n_clifford;
    j["p_rotation"] = rotation.p_rotation;
    j["n_rotation"] = rotation.n_rotation;
    j["rotation_unbounded"] = rotation.unbounded;
    j["pec_overhead"] = rotation.pec_overhead;
    j["qv_nisq"] = qv.m_nisq;
    j["qv_nisq_unbounded"] = qv.nisq_unbounded;
    j["qv_star_width"] = qv.m_star;
    j["qv_star"] = qv.log2_vq_star;
    auto &rows = j["ftqc"] = nlohmann::ordered_json::array();
    for (const FtqcRow &row : ftqc.rows) {
        rows.push_back({{"architecture", row.architecture},
                        {"logical_qubits", row.logical_qubits},
                        {"clocks_per_rotation", row.clocks_per_rotation}});
    }
    j["hubbard"] = {{"sites", apps.hubbard.sites},
                    {"rotations_per_step", apps.hubbard.rotations_per_step},
                    {"trotter_steps", apps.hubbard.trotter_steps}};
    j["qaoa"] = {{"nodes", apps.qaoa.nodes}, {"depth", apps.qaoa.depth}};
    return j.dump(2);
}

}  // namespace star
