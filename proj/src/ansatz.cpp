#include "qkge/ansatz.hpp"

#include <stdexcept>

namespace qkge {

namespace {

void check_spec(const AnsatzSpec& spec) {
    if (spec.n_qubits <= 0) throw std::invalid_argument("ansatz needs a positive qubit count");
    if (spec.n_layers <= 0) throw std::invalid_argument("ansatz needs a positive layer count");
}

void append_layers(Circuit& circuit, const AnsatzSpec& spec, const ParamVector& theta) {
    if (static_cast<int>(theta.size()) != param_count(spec)) {
        throw std::invalid_argument("parameter vector length does not match the ansatz");
    }
    const int n = spec.n_qubits;
    for (int layer = 0; layer < spec.n_layers; ++layer) {
        for (int q = 0; q < n; ++q) {
            const std::size_t base = static_cast<std::size_t>(2 * (layer * n + q));
            circuit.add(Gate::ry(q, theta[base]));
            circuit.add(Gate::rz(q, theta[base + 1]));
        }
        if (n > 1) {
            for (int q = 0; q < n; ++q) {
                circuit.add(Gate::cnot(q, (q + 1) % n));
            }
        }
    }
}

} // namespace

int param_count(const AnsatzSpec& spec) {
    check_spec(spec);
    return 2 * spec.n_qubits * spec.n_layers;
}

Circuit entity_state_circuit(const AnsatzSpec& spec, const ParamVector& theta) {
    check_spec(spec);
    Circuit circuit(spec.n_qubits);
    for (int q = 0; q < spec.n_qubits; ++q) {
        circuit.add(Gate::h(q));
    }
    append_layers(circuit, spec, theta);
    return circuit;
}

Circuit relation_unitary_circuit(const AnsatzSpec& spec, const ParamVector& theta) {
    check_spec(spec);
    Circuit circuit(spec.n_qubits);
    append_layers(circuit, spec, theta);
    return circuit;
}

Circuit adjoint(const Circuit& circuit) {
    Circuit out(circuit.n_qubits);
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        Gate g = *it;
        if (g.is_rotation()) {
            g.angle = -g.angle;
        } else if (g.kind == GateKind::Controlled || g.kind == GateKind::AntiControlled) {
            g.body = std::make_shared<const Circuit>(adjoint(*g.body));
        }
        out.add(std::move(g));
    }
    return out;
}

} // namespace qkge
