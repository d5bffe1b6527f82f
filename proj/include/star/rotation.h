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

#ifndef STAR_ROTATION_H
#define STAR_ROTATION_H

#include <cstdint>
#include <functional>
#include <random>

namespace star {

/// Repeat-until-success analog rotation: each attempt succeeds with probability 1/2 and
/// applies a phase flip with probability p_z1.
struct RusModel {
    double p_success = 0.5;
    double p_z1 = 0;
};

struct RusSample {
    uint32_t steps;
    bool z_flip;
};

/// Expected number of attempts, sum over k of k / 2^k.
double rus_mean_steps();
RusSample simulate_rus(const RusModel &model, std::mt19937_64 &rng);

/// Probability of an odd number of flips in n attempts with per-attempt flip probability x.
double rus_error_terms(double p_z1, int n);
/// Phase-flip probability of the whole RUS process, averaging over the attempt count. The
/// series is summed directly up to 64 attempts; the neglected tail is below 2^-64.
double rus_error_exact(double p_z1);

/// Quasi-probability weight 1 / (1 - 2P) for cancelling a phase flip of probability P.
/// Throws std::domain_error unless 0 <= P < 1/2.
double pec_gamma(double p);

struct PecEstimate {
    double mean = 0;
    double sigma = 0;
    double variance = 0;
    uint64_t samples = 0;
};

/// Draws a +1/-1 outcome of the noisy circuit, with an extra Z applied after the noise when
/// `apply_z` is set.
using PecSampler = std::function<int(bool apply_z, std::mt19937_64 &rng)>;

/// Sign-sampling estimate of the noiseless expectation value: with probability 1 - P draw
/// from the noisy circuit with weight +gamma, otherwise from the Z-corrected circuit with
/// weight -gamma.
PecEstimate pec_mitigate(const PecSampler &sampler, double p, uint64_t samples, std::mt19937_64 &rng);

/// Plain average of the noisy circuit, for comparison.
PecEstimate sample_noisy(const PecSampler &sampler, uint64_t samples, std::mt19937_64 &rng);

/// Measuring X on a state with <X> = ideal after a phase flip of probability p.
struct PhaseFlipModel {
    double ideal = 0.8;
    double p = 0.1;

    double noisy_mean() const { return ideal * (1 - 2 * p); }
    int sample(bool apply_z, std::mt19937_64 &rng) const;
    PecSampler sampler() const;
};

struct SamplingOverhead {
    /// gamma^(2N) with gamma evaluated from the exact RUS error.
    double exact;
    /// exp(8 p_z1 N).
    double approx;
};

SamplingOverhead sampling_overhead(double p_z1, double n);

}  // namespace star

#endif
