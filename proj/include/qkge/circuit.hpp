#pragma once

#include <memory>
#include <string>
#include <vector>

namespace qkge {

// Gate kinds. Controlled and AntiControlled wrap a whole sub-circuit: the
// body acts on qubits [0, body.n_qubits) of the enclosing circuit and is
// applied when the control qubit reads 1 (Controlled) or 0 (AntiControlled).
enum class GateKind {
    H,
    X,
    RX,
    RY,
    RZ,
    CNOT,
    SWAP,
    CSWAP,
    Controlled,
    AntiControlled,
};

struct Circuit;

struct Gate {
    GateKind kind;
    double angle = 0.0; // rotation kinds only
    std::vector<int> targets;
    std::vector<int> controls;
    std::shared_ptr<const Circuit> body; // Controlled / AntiControlled only

    static Gate h(int qubit);
    static Gate x(int qubit);
    static Gate rx(int qubit, double angle);
    static Gate ry(int qubit, double angle);
    static Gate rz(int qubit, double angle);
    static Gate cnot(int control, int target);
    static Gate swap(int a, int b);
    static Gate cswap(int control, int a, int b);
    static Gate controlled(Circuit body, int control);
    static Gate anti_controlled(Circuit body, int control);

    bool is_rotation() const {
        return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
    }

    bool operator==(const Gate& other) const;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int n);

    // Validates the gate against n_qubits before appending.
    void add(Gate gate);

    // Appends all gates of `other`; qubit counts must match.
    void append(const Circuit& other);

    // Longest dependency chain over shared qubits. Sub-circuit gates are
    // flattened with their control qubit attached to every body gate.
    int depth() const;

    bool operator==(const Circuit& other) const;
};

// Throws std::invalid_argument if the gate is malformed or touches qubits
// outside [0, n_qubits).
void validate_gate(const Gate& gate, int n_qubits);

// Copy of `circuit` acting on qubits [offset, offset + circuit.n_qubits) of a
// wider register.
Circuit shifted(const Circuit& circuit, int offset, int new_n_qubits);

std::string gate_name(GateKind kind);

} // namespace qkge
