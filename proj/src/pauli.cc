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

#include <stdexcept>

namespace star {

PauliString::PauliString(size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {}

PauliString PauliString::from_str(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        result.set(k, text[k]);
    }
    result.negative_ = negative;
    return result;
}

PauliString PauliString::single(size_t num_qubits, uint32_t qubit, char pauli) {
    PauliString result(num_qubits);
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " outside a string of " +
                                std::to_string(num_qubits) + " qubits");
    }
    result.set(qubit, pauli);
    return result;
}

char PauliString::pauli(size_t q) const {
    static constexpr char names[4] = {'_', 'X', 'Z', 'Y'};
    return names[xs_[q] + 2 * zs_[q]];
}

void PauliString::set(size_t q, char pauli) {
    switch (pauli) {
        case '_':
        case 'I':
            set(q, false, false);
            break;
        case 'X':
            set(q, true, false);
            break;
        case 'Y':
            set(q, true, true);
            break;
        case 'Z':
            set(q, false, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli: '") + pauli + "'");
    }
}

bool PauliString::is_identity() const {
    return weight() == 0;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t q = 0; q < xs_.size(); q++) {
        w += xs_[q] || zs_[q];
    }
    return w;
}

std::vector<uint32_t> PauliString::support() const {
    std::vector<uint32_t> result;
    for (size_t q = 0; q < xs_.size(); q++) {
        if (xs_[q] || zs_[q]) {
            result.push_back((uint32_t)q);
        }
    }
    return result;
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("commutes: size mismatch");
    }
    bool anti = false;
    for (size_t q = 0; q < xs_.size(); q++) {
        anti ^= (xs_[q] && other.zs_[q]) ^ (zs_[q] && other.xs_[q]);
    }
    return !anti;
}

uint8_t PauliString::inplace_right_mul_returning_log_i(const PauliString &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("multiply: size mismatch");
    }
    // Power of i picked up by each single-qubit product, with Y stored as (1,1).
    int log_i = 0;
    for (size_t q = 0; q < xs_.size(); q++) {
        int x1 = xs_[q], z1 = zs_[q], x2 = rhs.xs_[q], z2 = rhs.zs_[q];
        if (x1 && z1) {
            log_i += z2 - x2;
        } else if (x1) {
            log_i += z2 * (2 * x2 - 1);
        } else if (z1) {
            log_i += x2 * (1 - 2 * z2);
        }
        xs_[q] = x1 ^ x2;
        zs_[q] = z1 ^ z2;
    }
    log_i &= 3;
    negative_ ^= rhs.negative_;
    if (log_i & 2) {
        negative_ = !negative_;
    }
    return (uint8_t)(log_i & 1);
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (inplace_right_mul_returning_log_i(rhs)) {
        throw std::invalid_argument("product of anticommuting Pauli strings is not Hermitian");
    }
    return *this;
}

PauliString operator*(PauliString lhs, const PauliString &rhs) {
    lhs *= rhs;
    return lhs;
}

std::string PauliString::str() const {
    std::string result(1, negative_ ? '-' : '+');
    for (size_t q = 0; q < xs_.size(); q++) {
        result.push_back(pauli(q));
    }
    return result;
}

const char *gate_name(GateType type) {
    switch (type) {
        case GateType::H:
            return "H";
        case GateType::CNOT:
            return "CNOT";
        case GateType::INIT_Z:
            return "INIT_Z";
        case GateType::INIT_X:
            return "INIT_X";
        case GateType::MEASURE_Z:
            return "MEASURE_Z";
        case GateType::MEASURE_X:
            return "MEASURE_X";
        case GateType::IDLE:
            return "IDLE";
        case GateType::ROT_ZZ:
            return "ROT_ZZ";
        case GateType::ROT_Z:
            return "ROT_Z";
    }
    return "?";
}

bool is_two_qubit(GateType type) {
    return type == GateType::CNOT || type == GateType::ROT_ZZ;
}

bool is_unitary(GateType type) {
    switch (type) {
        case GateType::INIT_Z:
        case GateType::INIT_X:
        case GateType::MEASURE_Z:
        case GateType::MEASURE_X:
            return false;
        default:
            return true;
    }
}

std::string Gate::str() const {
    std::string result = gate_name(type);
    result += " " + std::to_string(q0);
    if (is_two_qubit(type)) {
        result += " " + std::to_string(q1);
    }
    return result;
}

PauliString conjugate(const Gate &gate, PauliString pauli) {
    size_t n = pauli.num_qubits();
    if (gate.q0 >= n || (is_two_qubit(gate.type) && gate.q1 >= n)) {
        throw std::out_of_range("gate '" + gate.str() + "' outside a string of " + std::to_string(n) +
                                " qubits");
    }
    if (is_two_qubit(gate.type) && gate.q0 == gate.q1) {
        throw std::invalid_argument("gate '" + gate.str() + "' repeats a qubit");
    }
    switch (gate.type) {
        case GateType::H: {
            bool x = pauli.x(gate.q0), z = pauli.z(gate.q0);
            if (x && z) {
                pauli.flip_sign();
            }
            pauli.set(gate.q0, z, x);
            break;
        }
        case GateType::CNOT: {
            uint32_t c = gate.q0, t = gate.q1;
            bool xc = pauli.x(c), zc = pauli.z(c), xt = pauli.x(t), zt = pauli.z(t);
            if (xc && zt && !(xt ^ zc)) {
                pauli.flip_sign();
            }
            pauli.set(t, xt ^ xc, zt);
            pauli.set(c, xc, zc ^ zt);
            break;
        }
        case GateType::IDLE:
        case GateType::ROT_ZZ:
        case GateType::ROT_Z:
            break;
        default:
            throw std::invalid_argument("cannot conjugate through non-unitary gate '" + gate.str() + "'");
    }
    return pauli;
}

}  // namespace star
