#pragma once

#include <vector>

#include "qkge/circuit.hpp"

namespace qkge {

using ParamVector = std::vector<double>;

// Layered hardware-efficient ansatz. Each layer applies RY then RZ to every
// qubit, followed by a CNOT ring (control i -> target (i+1) mod n; omitted
// when n = 1). Depth is linear in the qubit count for a fixed layer count.
//
// Parameter ordering is layer-major, then qubit, RY angle before RZ angle:
//   index(layer, qubit, rot) = 2 * (layer * n_qubits + qubit) + rot
// with rot = 0 for RY and 1 for RZ. Checkpoints rely on this order.
struct AnsatzSpec {
    int n_qubits = 1;
    int n_layers = 2;

    bool operator==(const AnsatzSpec&) const = default;
};

// 2 * n_qubits * n_layers.
int param_count(const AnsatzSpec& spec);

// Entity state preparation |e> = V(theta) H^(x)n |0>: a Hadamard wall
// followed by the layered ansatz.
Circuit entity_state_circuit(const AnsatzSpec& spec, const ParamVector& theta);

// Relation unitary U(theta): the layered ansatz alone, no Hadamard wall.
Circuit relation_unitary_circuit(const AnsatzSpec& spec, const ParamVector& theta);

// Gate-by-gate adjoint: order reversed, rotation angles negated. H, X, CNOT,
// SWAP and CSWAP are self-adjoint; controlled sub-circuits recurse into their
// bodies.
Circuit adjoint(const Circuit& circuit);

} // namespace qkge
