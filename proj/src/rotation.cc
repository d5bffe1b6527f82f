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

#include "star/rotation.h"

#include <cmath>
#include <stdexcept>

namespace star {

double rus_mean_steps() {
    double total = 0;
    for (int k = 1; k <= 64; k++) {
        total += k * std::ldexp(1.0, -k);
    }
    return total;
}

RusSample simulate_rus(const RusModel &model, std::mt19937_64 &rng) {
    std::bernoulli_distribution success(model.p_success);
    std::bernoulli_distribution flip(model.p_z1);
    RusSample s{0, false};
    while (true) {
        s.steps++;
        s.z_flip ^= flip(rng);
        if (success(rng)) {
            return s;
        }
    }
}

double rus_error_terms(double x, int n) {
    double total = 0;
    double binom = 1;  // C(n, k)
    for (int k = 0; k <= n; k++) {
        if (k % 2 == 1) {
            total += binom * std::pow(x, k) * std::pow(1 - x, n - k);
        }
        binom = binom * (n - k) / (k + 1);
    }
    return total;
}

double rus_error_exact(double p_z1) {
    double total = 0;
    for (int n = 1; n <= 64; n++) {
        total += std::ldexp(rus_error_terms(p_z1, n), -n);
    }
    return total;
}

double pec_gamma(double p) {
    if (!(p >= 0 && p < 0.5)) {
        throw std::domain_error("phase-flip probability must lie in [0, 1/2)");
    }
    return 1 / (1 - 2 * p);
}

namespace {

PecEstimate summarize(double sum, double sum_sq, uint64_t n) {
    PecEstimate e;
    e.samples = n;
    if (n == 0) {
        return e;
    }
    e.mean = sum / (double)n;
    e.variance = n > 1 ? (sum_sq - sum * e.mean) / (double)(n - 1) : 0;
    e.sigma = std::sqrt(e.variance / (double)n);
    return e;
}

}  // namespace

PecEstimate pec_mitigate(const PecSampler &sampler, double p, uint64_t samples, std::mt19937_64 &rng) {
    double gamma = pec_gamma(p);
    std::bernoulli_distribution corrected(p);
    double sum = 0, sum_sq = 0;
    for (uint64_t k = 0; k < samples; k++) {
        bool z = corrected(rng);
        double v = (z ? -gamma : gamma) * sampler(z, rng);
        sum += v;
        sum_sq += v * v;
    }
    return summarize(sum, sum_sq, samples);
}

PecEstimate sample_noisy(const PecSampler &sampler, uint64_t samples, std::mt19937_64 &rng) {
    double sum = 0, sum_sq = 0;
    for (uint64_t k = 0; k < samples; k++) {
        double v = sampler(false, rng);
        sum += v;
        sum_sq += v * v;
    }
    return summarize(sum, sum_sq, samples);
}

int PhaseFlipModel::sample(bool apply_z, std::mt19937_64 &rng) const {
    double mean = apply_z ? -noisy_mean() : noisy_mean();
    std::bernoulli_distribution plus((1 + mean) / 2);
    return plus(rng) ? 1 : -1;
}

PecSampler PhaseFlipModel::sampler() const {
    PhaseFlipModel copy = *this;
    return [copy](bool apply_z, std::mt19937_64 &rng) { return copy.sample(apply_z, rng); };
}

SamplingOverhead sampling_overhead(double p_z1, double n) {
    double gamma = pec_gamma(rus_error_exact(p_z1));
    return {std::exp(2 * n * std::log(gamma)), std::exp(8 * p_z1 * n)};
}

}  // namespace star
