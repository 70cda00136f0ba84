// Test-only dense-matrix reference for the statevector engine. Gates are
// embedded into full 2^n x 2^n unitaries by explicit bit bookkeeping and
// multiplied out, a route entirely independent of the amplitude-pair update
// kernels under test.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qkge/circuit.hpp"
#include "qkge/rng.hpp"
#include "qkge/statevector.hpp"

namespace oracle {

using qkge::complexd;
using Matrix = std::vector<std::vector<complexd>>;

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<complexd>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t dim = a.size();
    Matrix c(dim, std::vector<complexd>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            if (a[i][k] == complexd{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < dim; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

inline Matrix dagger(const Matrix& a) {
    const std::size_t dim = a.size();
    Matrix c(dim, std::vector<complexd>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) c[i][j] = std::conj(a[j][i]);
    }
    return c;
}

inline std::vector<complexd> apply(const Matrix& a, const std::vector<complexd>& v) {
    std::vector<complexd> out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    }
    return out;
}

// Small unitary of a primitive gate over its own qubit list (first listed
// qubit = least significant bit of the local index).
inline Matrix primitive_matrix(const qkge::Gate& g) {
    using qkge::GateKind;
    const double half = g.angle / 2.0;
    const complexd c{std::cos(half), 0.0};
    const complexd s{std::sin(half), 0.0};
    const complexd i_unit{0.0, 1.0};
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
    case GateKind::H: return {{{r, 0}, {r, 0}}, {{r, 0}, {-r, 0}}};
    case GateKind::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::RX: return {{c, -i_unit * s}, {-i_unit * s, c}};
    case GateKind::RY: return {{c, -s}, {s, c}};
    case GateKind::RZ:
        return {{std::exp(-i_unit * half), 0.0}, {0.0, std::exp(i_unit * half)}};
    case GateKind::CNOT: // local order (target, control)
        return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    case GateKind::SWAP:
        return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    case GateKind::CSWAP: { // local order (a, b, control)
        Matrix m = identity(8);
        std::swap(m[5], m[6]); // |control=1, b=0? a=1| <-> |control=1, b=1, a=0|
        return m;
    }
    default: throw std::logic_error("no primitive matrix for this kind");
    }
}

// Embeds a primitive acting on `qubits` (local LSB first) into n qubits.
inline Matrix embed(const Matrix& local, const std::vector<int>& qubits, int n_qubits) {
    const std::size_t dim = 1ULL << n_qubits;
    std::uint64_t mask = 0;
    for (int q : qubits) mask |= 1ULL << q;

    Matrix full(dim, std::vector<complexd>(dim, 0.0));
    for (std::uint64_t row = 0; row < dim; ++row) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            if ((row & ~mask) != (col & ~mask)) continue;
            std::size_t local_row = 0, local_col = 0;
            for (std::size_t k = 0; k < qubits.size(); ++k) {
                local_row |= ((row >> qubits[k]) & 1ULL) << k;
                local_col |= ((col >> qubits[k]) & 1ULL) << k;
            }
            full[row][col] = local[local_row][local_col];
        }
    }
    return full;
}

// Control projection: U_full = P0 (x) I + P1 (x) U_body (control value 1),
// or the reverse for anti-control.
inline Matrix controlled_matrix(const Matrix& body, int control, bool on_one, int n_qubits) {
    const std::size_t dim = 1ULL << n_qubits;
    const std::uint64_t cbit = 1ULL << control;
    Matrix full(dim, std::vector<complexd>(dim, 0.0));
    for (std::uint64_t row = 0; row < dim; ++row) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            const bool row_active = ((row & cbit) != 0) == on_one;
            const bool col_active = ((col & cbit) != 0) == on_one;
            if (row_active != col_active) continue;
            if (!row_active) {
                full[row][col] = row == col ? 1.0 : 0.0;
            } else {
                full[row][col] = body[row & ~cbit][col & ~cbit];
            }
        }
    }
    return full;
}

inline Matrix gate_matrix(const qkge::Gate& g, int n_qubits);

inline Matrix circuit_matrix(const qkge::Circuit& c, int n_qubits) {
    Matrix u = identity(1ULL << n_qubits);
    for (const qkge::Gate& g : c.gates) {
        u = multiply(gate_matrix(g, n_qubits), u);
    }
    return u;
}

inline Matrix gate_matrix(const qkge::Gate& g, int n_qubits) {
    using qkge::GateKind;
    switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        return embed(primitive_matrix(g), {g.targets[0]}, n_qubits);
    case GateKind::CNOT:
        return embed(primitive_matrix(g), {g.targets[0], g.controls[0]}, n_qubits);
    case GateKind::SWAP:
        return embed(primitive_matrix(g), {g.targets[0], g.targets[1]}, n_qubits);
    case GateKind::CSWAP:
        return embed(primitive_matrix(g), {g.targets[0], g.targets[1], g.controls[0]}, n_qubits);
    case GateKind::Controlled:
    case GateKind::AntiControlled: {
        // Body matrix over n-1 qubits; the index compression in
        // controlled_matrix assumes the control is the top qubit, which is
        // the layout every scoring circuit uses.
        if (g.controls[0] != n_qubits - 1) {
            throw std::logic_error("oracle expects the control on the top qubit");
        }
        const Matrix body = circuit_matrix(*g.body, n_qubits - 1);
        return controlled_matrix(body, g.controls[0], g.kind == GateKind::Controlled, n_qubits);
    }
    }
    throw std::logic_error("unhandled kind");
}

// Random helpers shared by several suites.
inline qkge::Statevector random_state(int n_qubits, std::uint64_t seed) {
    qkge::Statevector s = qkge::Statevector::zero_state(n_qubits);
    qkge::Rng rng(seed);
    double norm = 0.0;
    for (auto& a : s.amplitudes) {
        a = complexd{rng.next_double() - 0.5, rng.next_double() - 0.5};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : s.amplitudes) a /= norm;
    return s;
}

inline qkge::Circuit random_circuit(int n_qubits, int n_gates, std::uint64_t seed) {
    qkge::Circuit c(n_qubits);
    qkge::Rng rng(seed);
    for (int i = 0; i < n_gates; ++i) {
        const int pick = static_cast<int>(rng.next_index(n_qubits > 1 ? 8 : 5));
        const int q = static_cast<int>(rng.next_index(static_cast<std::size_t>(n_qubits)));
        int other = q;
        if (n_qubits > 1) {
            while (other == q) {
                other = static_cast<int>(rng.next_index(static_cast<std::size_t>(n_qubits)));
            }
        }
        switch (pick) {
        case 0: c.add(qkge::Gate::h(q)); break;
        case 1: c.add(qkge::Gate::x(q)); break;
        case 2: c.add(qkge::Gate::rx(q, rng.next_angle())); break;
        case 3: c.add(qkge::Gate::ry(q, rng.next_angle())); break;
        case 4: c.add(qkge::Gate::rz(q, rng.next_angle())); break;
        case 5: c.add(qkge::Gate::cnot(q, other)); break;
        case 6: c.add(qkge::Gate::swap(q, other)); break;
        default: {
            if (n_qubits > 2) {
                int third = q;
                while (third == q || third == other) {
                    third = static_cast<int>(rng.next_index(static_cast<std::size_t>(n_qubits)));
                }
                c.add(qkge::Gate::cswap(third, q, other));
            } else {
                c.add(qkge::Gate::cnot(q, other));
            }
            break;
        }
        }
    }
    return c;
}

} // namespace oracle
