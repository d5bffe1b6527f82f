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

#include "star/pauli.h"

#include <complex>
#include <random>

#include "gtest/gtest.h"

using namespace star;

namespace {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

// Dense reference: qubit 0 is the least significant bit of the basis index.

Matrix multiply(const Matrix &a, const Matrix &b) {
    size_t n = a.size();
    Matrix c(n, std::vector<Complex>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            if (a[i][k] == Complex(0)) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

Matrix adjoint(const Matrix &a) {
    size_t n = a.size();
    Matrix c(n, std::vector<Complex>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            c[i][j] = std::conj(a[j][i]);
        }
    }
    return c;
}

Matrix pauli_matrix(const PauliString &p) {
    size_t n = p.num_qubits();
    size_t dim = size_t{1} << n;
    Matrix m(dim, std::vector<Complex>(dim));
    for (size_t col = 0; col < dim; col++) {
        size_t row = col;
        Complex amp = p.negative() ? -1 : 1;
        for (size_t q = 0; q < n; q++) {
            bool bit = (col >> q) & 1;
            bool x = p.x(q);
            bool z = p.z(q);
            if (z && bit) {
                amp = -amp;
            }
            if (x) {
                row ^= size_t{1} << q;
                if (z) {
                    amp *= Complex(0, 1);
                }
            }
        }
        m[row][col] = amp;
    }
    return m;
}

Matrix gate_matrix(const Gate &g, size_t n) {
    size_t dim = size_t{1} << n;
    Matrix m(dim, std::vector<Complex>(dim));
    double s = 1 / std::sqrt(2.0);
    for (size_t col = 0; col < dim; col++) {
        if (g.type == GateType::H) {
            size_t b = (col >> g.q0) & 1;
            size_t flipped = col ^ (size_t{1} << g.q0);
            m[col][col] += b ? -s : s;
            m[flipped][col] += s;
        } else if (g.type == GateType::CNOT) {
            size_t row = col;
            if ((col >> g.q0) & 1) {
                row ^= size_t{1} << g.q1;
            }
            m[row][col] = 1;
        } else {
            m[col][col] = 1;
        }
    }
    return m;
}

bool near(const Matrix &a, const Matrix &b) {
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a.size(); j++) {
            if (std::abs(a[i][j] - b[i][j]) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, "_XYZ"[rng() % 4]);
    }
    p.set_negative(rng() & 1);
    return p;
}

}  // namespace

TEST(pauli, from_str_round_trip) {
    PauliString p = PauliString::from_str("-XZ_Y");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_TRUE(p.negative());
    EXPECT_EQ(p.pauli(0), 'X');
    EXPECT_EQ(p.pauli(1), 'Z');
    EXPECT_EQ(p.pauli(2), '_');
    EXPECT_EQ(p.pauli(3), 'Y');
    EXPECT_EQ(p.str(), "-XZ_Y");
    EXPECT_EQ(PauliString::from_str("+XI").str(), "+X_");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support(), (std::vector<uint32_t>{0, 1, 3}));
    EXPECT_THROW(PauliString::from_str("XQ"), std::invalid_argument);
}

TEST(pauli, commutation) {
    EXPECT_TRUE(PauliString::from_str("XX").commutes(PauliString::from_str("ZZ")));
    EXPECT_FALSE(PauliString::from_str("X_").commutes(PauliString::from_str("Z_")));
    EXPECT_FALSE(PauliString::from_str("XY").commutes(PauliString::from_str("XX")));
    EXPECT_TRUE(PauliString::from_str("Y").commutes(PauliString::from_str("Y")));
}

TEST(pauli, product_matches_dense) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        PauliString a = random_pauli(3, rng);
        PauliString b = random_pauli(3, rng);
        PauliString c = a;
        uint8_t log_i = c.inplace_right_mul_returning_log_i(b);
        Matrix expected = multiply(pauli_matrix(a), pauli_matrix(b));
        Matrix got = pauli_matrix(c);
        if (log_i) {
            for (auto &row : got) {
                for (auto &v : row) {
                    v *= Complex(0, 1);
                }
            }
        }
        ASSERT_TRUE(near(got, expected)) << a.str() << " * " << b.str();
        ASSERT_EQ(log_i == 0, a.commutes(b));
    }
}

TEST(pauli, anticommuting_product_rejected) {
    PauliString a = PauliString::from_str("X");
    EXPECT_THROW(a *= PauliString::from_str("Z"), std::invalid_argument);
    EXPECT_EQ((PauliString::from_str("XZ") * PauliString::from_str("ZX")).str(), "+YY");
}

TEST(pauli, product_associative) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; trial++) {
        PauliString a = random_pauli(4, rng);
        PauliString b = random_pauli(4, rng);
        PauliString c = random_pauli(4, rng);
        PauliString left = a;
        uint8_t l1 = left.inplace_right_mul_returning_log_i(b);
        uint8_t l2 = left.inplace_right_mul_returning_log_i(c);
        PauliString bc = b;
        uint8_t r1 = bc.inplace_right_mul_returning_log_i(c);
        PauliString right = a;
        uint8_t r2 = right.inplace_right_mul_returning_log_i(bc);
        // Equal up to the tracked factors of i.
        Matrix lm = pauli_matrix(left);
        Matrix rm = pauli_matrix(right);
        Complex lf = std::pow(Complex(0, 1), (int)(l1 + l2));
        Complex rf = std::pow(Complex(0, 1), (int)(r1 + r2));
        for (auto &row : lm) {
            for (auto &v : row) {
                v *= lf;
            }
        }
        for (auto &row : rm) {
            for (auto &v : row) {
                v *= rf;
            }
        }
        ASSERT_TRUE(near(lm, rm));
    }
}

TEST(pauli, conjugate_examples) {
    EXPECT_EQ(conjugate(H(0), PauliString::from_str("X")).str(), "+Z");
    EXPECT_EQ(conjugate(H(0), PauliString::from_str("Z")).str(), "+X");
    EXPECT_EQ(conjugate(H(0), PauliString::from_str("Y")).str(), "-Y");
    EXPECT_EQ(conjugate(CNOT(0, 1), PauliString::from_str("X_")).str(), "+XX");
    EXPECT_EQ(conjugate(CNOT(0, 1), PauliString::from_str("_Z")).str(), "+ZZ");
    EXPECT_EQ(conjugate(CNOT(0, 1), PauliString::from_str("Z_")).str(), "+Z_");
    EXPECT_EQ(conjugate(CNOT(0, 1), PauliString::from_str("_X")).str(), "+_X");
    EXPECT_EQ(conjugate(CNOT(0, 1), PauliString::from_str("XZ")).str(), "-YY");
    EXPECT_EQ(conjugate(CNOT(0, 1), PauliString::from_str("YY")).str(), "-XZ");
}

TEST(pauli, conjugate_matches_dense) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 3;
        uint32_t a = rng() % n;
        uint32_t b = (a + 1 + rng() % (n - 1)) % n;
        Gate g = (rng() & 1) ? H(a) : CNOT(a, b);
        PauliString p = random_pauli(n, rng);
        Matrix u = gate_matrix(g, n);
        Matrix expected = multiply(multiply(u, pauli_matrix(p)), adjoint(u));
        ASSERT_TRUE(near(pauli_matrix(conjugate(g, p)), expected)) << g.str() << " " << p.str();
    }
}

TEST(pauli, conjugate_errors) {
    PauliString p = PauliString::from_str("XX");
    EXPECT_THROW(conjugate(H(2), p), std::out_of_range);
    EXPECT_THROW(conjugate(CNOT(0, 5), p), std::out_of_range);
    EXPECT_THROW(conjugate(MEASURE_Z(0), p), std::invalid_argument);
    EXPECT_THROW(conjugate(INIT_X(0), p), std::invalid_argument);
}

TEST(pauli, gate_traits) {
    EXPECT_TRUE(is_two_qubit(GateType::CNOT));
    EXPECT_TRUE(is_two_qubit(GateType::ROT_ZZ));
    EXPECT_FALSE(is_two_qubit(GateType::H));
    EXPECT_TRUE(is_unitary(GateType::CNOT));
    EXPECT_FALSE(is_unitary(GateType::MEASURE_X));
    EXPECT_STREQ(gate_name(GateType::MEASURE_Z), "MEASURE_Z");
}
