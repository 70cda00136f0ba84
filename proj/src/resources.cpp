#include "qkge/resources.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qkge {

namespace {

const GateCost kSingle{1, 0, 1};
const GateCost kCnot{1, 1, 1};
const GateCost kSwap{3, 3, 3};
const GateCost kToffoli{15, 6, 11};
const GateCost kCswap{17, 8, 13};
const GateCost kControlledSingle{5, 2, 5};

struct Counter {
    long long total = 0;
    long long two_qubit = 0;
    std::vector<long long> chain; // per-qubit depth front

    explicit Counter(int n_qubits) : chain(static_cast<std::size_t>(n_qubits), 0) {}

    void record(const GateCost& cost, std::initializer_list<int> qubits) {
        total += cost.total_gates;
        two_qubit += cost.two_qubit_gates;
        long long level = 0;
        for (int q : qubits) level = std::max(level, chain[static_cast<std::size_t>(q)]);
        level += cost.depth;
        for (int q : qubits) chain[static_cast<std::size_t>(q)] = level;
    }

    long long depth() const {
        long long d = 0;
        for (long long c : chain) d = std::max(d, c);
        return d;
    }
};

// Walks the circuit, rewriting each gate per the table. `control` is the
// ancilla a Controlled/AntiControlled wrapper attached, or -1 at top level.
void count_gate(const Gate& gate, int control, Counter& counter) {
    const bool controlled = control >= 0;
    switch (gate.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        if (controlled) {
            counter.record(kControlledSingle, {gate.targets[0], control});
        } else {
            counter.record(kSingle, {gate.targets[0]});
        }
        return;
    case GateKind::CNOT:
        if (controlled) {
            counter.record(kToffoli, {gate.targets[0], gate.controls[0], control});
        } else {
            counter.record(kCnot, {gate.targets[0], gate.controls[0]});
        }
        return;
    case GateKind::SWAP:
        if (controlled) {
            counter.record(kCswap, {gate.targets[0], gate.targets[1], control});
        } else {
            counter.record(kSwap, {gate.targets[0], gate.targets[1]});
        }
        return;
    case GateKind::CSWAP:
        if (controlled) {
            throw std::invalid_argument("the counting convention has no doubly controlled SWAP");
        }
        counter.record(kCswap, {gate.targets[0], gate.targets[1], gate.controls[0]});
        return;
    case GateKind::Controlled:
    case GateKind::AntiControlled:
        if (controlled) {
            throw std::invalid_argument("the counting convention has no nested controls");
        }
        if (gate.kind == GateKind::AntiControlled) {
            counter.record(kSingle, {gate.controls[0]});
        }
        for (const Gate& inner : gate.body->gates) {
            count_gate(inner, gate.controls[0], counter);
        }
        if (gate.kind == GateKind::AntiControlled) {
            counter.record(kSingle, {gate.controls[0]});
        }
        return;
    }
    throw std::logic_error("unhandled gate kind");
}

} // namespace

std::map<std::string, GateCost> decomposition_table() {
    return {
        {"single-qubit", kSingle},
        {"cnot", kCnot},
        {"swap", kSwap},
        {"toffoli", kToffoli},
        {"cswap", kCswap},
        {"controlled-single-qubit", kControlledSingle},
    };
}

ResourceReport count_circuit_resources(const Circuit& circuit) {
    Counter counter(circuit.n_qubits);
    for (const Gate& gate : circuit.gates) {
        count_gate(gate, -1, counter);
    }
    ResourceReport report;
    report.n_qubits_logical = circuit.n_qubits;
    report.total_gates = counter.total;
    report.two_qubit_gates = counter.two_qubit;
    report.depth = counter.depth();
    return report;
}

ResourceReport estimate_resources(ScoreScheme scheme, const AnsatzSpec& spec) {
    const ParamVector zeros(static_cast<std::size_t>(param_count(spec)), 0.0);
    const Circuit circuit = build_score_circuit(scheme, spec, zeros, zeros, zeros);
    ResourceReport report = count_circuit_resources(circuit);
    report.scheme = scheme;
    return report;
}

} // namespace qkge
