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

#ifndef STAR_PAULI_H
#define STAR_PAULI_H

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace star {

inline constexpr uint32_t NO_QUBIT = std::numeric_limits<uint32_t>::max();

/// A Hermitian multi-qubit Pauli operator with a +1/-1 sign.
///
/// Each qubit carries an (x, z) bit pair: I = (0,0), X = (1,0), Y = (1,1), Z = (0,1).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses strings like "+XZ_Y", "-XX" or "IXYZ". '_' and 'I' both mean identity.
    static PauliString from_str(std::string_view text);
    /// Single-qubit Paulis on an otherwise identity string.
    static PauliString single(size_t num_qubits, uint32_t qubit, char pauli);

    size_t num_qubits() const { return xs_.size(); }
    bool x(size_t q) const { return xs_[q]; }
    bool z(size_t q) const { return zs_[q]; }
    bool negative() const { return negative_; }
    void set_negative(bool negative) { negative_ = negative; }

    char pauli(size_t q) const;
    void set(size_t q, char pauli);
    void set(size_t q, bool x, bool z) {
        xs_[q] = x;
        zs_[q] = z;
    }
    void flip_x(size_t q) { xs_[q] = !xs_[q]; }
    void flip_z(size_t q) { zs_[q] = !zs_[q]; }
    void flip_sign() { negative_ = !negative_; }

    bool is_identity() const;
    size_t weight() const;
    std::vector<uint32_t> support() const;

    bool commutes(const PauliString &other) const;

    /// Replaces *this with (*this) * rhs and returns the leftover power of i (0..3) that
    /// could not be folded into the sign. The result is 0 exactly when the factors commute.
    uint8_t inplace_right_mul_returning_log_i(const PauliString &rhs);

    /// Product of commuting Pauli strings. Throws std::invalid_argument if they anticommute.
    PauliString &operator*=(const PauliString &rhs);

    bool operator==(const PauliString &other) const = default;

    std::string str() const;

   private:
    std::vector<bool> xs_;
    std::vector<bool> zs_;
    bool negative_ = false;
};

PauliString operator*(PauliString lhs, const PauliString &rhs);

enum class GateType : uint8_t {
    H,
    CNOT,
    INIT_Z,
    INIT_X,
    MEASURE_Z,
    MEASURE_X,
    IDLE,
    /// exp(-i theta/2 Z Z) on two qubits, simulated at theta = 0 (identity plus noise).
    ROT_ZZ,
    /// exp(-i theta/2 Z) on one qubit, simulated at theta = 0 (identity plus noise).
    ROT_Z,
};

const char *gate_name(GateType type);
bool is_two_qubit(GateType type);
bool is_unitary(GateType type);

struct Gate {
    GateType type;
    uint32_t q0;
    uint32_t q1 = NO_QUBIT;

    bool operator==(const Gate &) const = default;
    std::string str() const;
};

inline Gate H(uint32_t q) { return {GateType::H, q}; }
inline Gate CNOT(uint32_t control, uint32_t target) { return {GateType::CNOT, control, target}; }
inline Gate INIT_Z(uint32_t q) { return {GateType::INIT_Z, q}; }
inline Gate INIT_X(uint32_t q) { return {GateType::INIT_X, q}; }
inline Gate MEASURE_Z(uint32_t q) { return {GateType::MEASURE_Z, q}; }
inline Gate MEASURE_X(uint32_t q) { return {GateType::MEASURE_X, q}; }
inline Gate IDLE(uint32_t q) { return {GateType::IDLE, q}; }
inline Gate ROT_ZZ(uint32_t q0, uint32_t q1) { return {GateType::ROT_ZZ, q0, q1}; }
inline Gate ROT_Z(uint32_t q) { return {GateType::ROT_Z, q}; }

/// Returns g P g^dagger, tracking the sign.
///
/// Only unitary gates are accepted (the analog rotations count as identity at theta = 0).
/// Throws std::out_of_range for qubits outside the string and std::invalid_argument for
/// initialization or measurement gates.
PauliString conjugate(const Gate &gate, PauliString pauli);

}  // namespace star

#endif
