#include "qkge/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkge {

namespace {

Gate make_simple(GateKind kind, std::vector<int> targets, std::vector<int> controls) {
    Gate g;
    g.kind = kind;
    g.targets = std::move(targets);
    g.controls = std::move(controls);
    return g;
}

Gate make_rotation(GateKind kind, int qubit, double angle) {
    Gate g;
    g.kind = kind;
    g.angle = angle;
    g.targets = {qubit};
    return g;
}

} // namespace

Gate Gate::h(int qubit) { return make_simple(GateKind::H, {qubit}, {}); }
Gate Gate::x(int qubit) { return make_simple(GateKind::X, {qubit}, {}); }
Gate Gate::rx(int qubit, double angle) { return make_rotation(GateKind::RX, qubit, angle); }
Gate Gate::ry(int qubit, double angle) { return make_rotation(GateKind::RY, qubit, angle); }
Gate Gate::rz(int qubit, double angle) { return make_rotation(GateKind::RZ, qubit, angle); }
Gate Gate::cnot(int control, int target) { return make_simple(GateKind::CNOT, {target}, {control}); }
Gate Gate::swap(int a, int b) { return make_simple(GateKind::SWAP, {a, b}, {}); }
Gate Gate::cswap(int control, int a, int b) { return make_simple(GateKind::CSWAP, {a, b}, {control}); }

Gate Gate::controlled(Circuit body, int control) {
    Gate g;
    g.kind = GateKind::Controlled;
    g.controls = {control};
    g.body = std::make_shared<const Circuit>(std::move(body));
    return g;
}

Gate Gate::anti_controlled(Circuit body, int control) {
    Gate g = controlled(Circuit{}, control);
    g.kind = GateKind::AntiControlled;
    g.body = std::make_shared<const Circuit>(std::move(body));
    return g;
}

bool Gate::operator==(const Gate& other) const {
    if (kind != other.kind || angle != other.angle || targets != other.targets ||
        controls != other.controls) {
        return false;
    }
    if (!body && !other.body) return true;
    if (!body || !other.body) return false;
    return *body == *other.body;
}

Circuit::Circuit(int n) : n_qubits(n) {
    if (n <= 0) throw std::invalid_argument("circuit needs a positive qubit count");
}

void Circuit::add(Gate gate) {
    validate_gate(gate, n_qubits);
    gates.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
    if (other.n_qubits != n_qubits) {
        throw std::invalid_argument("cannot append a circuit with a different qubit count");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

bool Circuit::operator==(const Circuit& other) const {
    return n_qubits == other.n_qubits && gates == other.gates;
}

void validate_gate(const Gate& gate, int n_qubits) {
    auto in_range = [n_qubits](int q) { return q >= 0 && q < n_qubits; };

    std::size_t expected_targets = 1;
    std::size_t expected_controls = 0;
    switch (gate.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        break;
    case GateKind::CNOT:
        expected_controls = 1;
        break;
    case GateKind::SWAP:
        expected_targets = 2;
        break;
    case GateKind::CSWAP:
        expected_targets = 2;
        expected_controls = 1;
        break;
    case GateKind::Controlled:
    case GateKind::AntiControlled:
        expected_targets = 0;
        expected_controls = 1;
        break;
    }

    if (gate.targets.size() != expected_targets || gate.controls.size() != expected_controls) {
        throw std::invalid_argument("gate " + gate_name(gate.kind) + " has malformed qubit lists");
    }
    for (int q : gate.targets) {
        if (!in_range(q)) throw std::invalid_argument("gate target index out of range");
    }
    for (int q : gate.controls) {
        if (!in_range(q)) throw std::invalid_argument("gate control index out of range");
    }
    for (int c : gate.controls) {
        if (std::find(gate.targets.begin(), gate.targets.end(), c) != gate.targets.end()) {
            throw std::invalid_argument("control and target qubits must be disjoint");
        }
    }
    if (gate.targets.size() == 2 && gate.targets[0] == gate.targets[1]) {
        throw std::invalid_argument("swap targets must differ");
    }

    if (gate.kind == GateKind::Controlled || gate.kind == GateKind::AntiControlled) {
        if (!gate.body) throw std::invalid_argument("controlled sub-circuit gate has no body");
        if (gate.body->n_qubits > n_qubits) {
            throw std::invalid_argument("sub-circuit body wider than the enclosing circuit");
        }
        if (gate.controls[0] < gate.body->n_qubits) {
            throw std::invalid_argument("control qubit must lie outside the body register");
        }
    } else if (gate.body) {
        throw std::invalid_argument("only controlled sub-circuit gates carry a body");
    }

    if (!gate.is_rotation() && gate.angle != 0.0) {
        throw std::invalid_argument("non-rotation gates carry no angle");
    }
}

namespace {

// Depth accumulation over per-qubit chain lengths. `weight` is the cost of
// one flattened gate; body gates inherit the enclosing control qubit.
void accumulate_depth(const Gate& gate, const std::vector<int>& extra_qubits,
                      std::vector<int>& chain) {
    if (gate.kind == GateKind::Controlled || gate.kind == GateKind::AntiControlled) {
        std::vector<int> extended = extra_qubits;
        extended.push_back(gate.controls[0]);
        for (const Gate& inner : gate.body->gates) {
            accumulate_depth(inner, extended, chain);
        }
        return;
    }
    int level = 0;
    auto bump = [&](int q) { level = std::max(level, chain[static_cast<std::size_t>(q)]); };
    for (int q : gate.targets) bump(q);
    for (int q : gate.controls) bump(q);
    for (int q : extra_qubits) bump(q);
    ++level;
    for (int q : gate.targets) chain[static_cast<std::size_t>(q)] = level;
    for (int q : gate.controls) chain[static_cast<std::size_t>(q)] = level;
    for (int q : extra_qubits) chain[static_cast<std::size_t>(q)] = level;
}

void shift_gate(Gate& gate, int offset) {
    for (int& q : gate.targets) q += offset;
    for (int& q : gate.controls) q += offset;
    if (gate.body) {
        // Bodies are indexed relative to the enclosing circuit, so they shift
        // together with their gate.
        Circuit body = *gate.body;
        for (Gate& inner : body.gates) shift_gate(inner, offset);
        body.n_qubits += offset;
        gate.body = std::make_shared<const Circuit>(std::move(body));
    }
}

} // namespace

int Circuit::depth() const {
    std::vector<int> chain(static_cast<std::size_t>(n_qubits), 0);
    for (const Gate& gate : gates) {
        accumulate_depth(gate, {}, chain);
    }
    int d = 0;
    for (int c : chain) d = std::max(d, c);
    return d;
}

Circuit shifted(const Circuit& circuit, int offset, int new_n_qubits) {
    if (offset < 0 || circuit.n_qubits + offset > new_n_qubits) {
        throw std::invalid_argument("shifted circuit does not fit the new register");
    }
    Circuit out(new_n_qubits);
    for (Gate gate : circuit.gates) {
        shift_gate(gate, offset);
        out.add(std::move(gate));
    }
    return out;
}

std::string gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CSWAP: return "CSWAP";
    case GateKind::Controlled: return "Controlled";
    case GateKind::AntiControlled: return "AntiControlled";
    }
    return "?";
}

} // namespace qkge
