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

#ifndef STAR_RATIONAL_H
#define STAR_RATIONAL_H

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace star {

/// Exact fraction with a positive denominator, always kept in lowest terms.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(int64_t n) : num(n), den(1) {}
    Rational(int64_t n, int64_t d) : num(n), den(d) {
        if (d == 0) {
            throw std::domain_error("zero denominator");
        }
        normalize();
    }

    Rational &operator+=(const Rational &o) {
        int64_t g = std::gcd(den, o.den);
        num = num * (o.den / g) + o.num * (den / g);
        den = den / g * o.den;
        normalize();
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        num *= o.num;
        den *= o.den;
        normalize();
        return *this;
    }
    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    bool operator==(const Rational &) const = default;

    double to_double() const { return (double)num / (double)den; }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

   private:
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

inline std::ostream &operator<<(std::ostream &out, const Rational &r) { return out << r.str(); }

}  // namespace star

#endif
