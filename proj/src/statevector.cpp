#include "qkge/statevector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "qkge/rng.hpp"

namespace qkge {

namespace {

using Matrix2 = std::array<complexd, 4>; // row-major [u00 u01; u10 u11]

Matrix2 single_qubit_matrix(const Gate& gate) {
    const double half = gate.angle / 2.0;
    const double c = std::cos(half);
    const double s = std::sin(half);
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (gate.kind) {
    case GateKind::H:
        return {complexd(inv_sqrt2, 0), complexd(inv_sqrt2, 0), complexd(inv_sqrt2, 0),
                complexd(-inv_sqrt2, 0)};
    case GateKind::X:
        return {complexd(0, 0), complexd(1, 0), complexd(1, 0), complexd(0, 0)};
    case GateKind::RX:
        return {complexd(c, 0), complexd(0, -s), complexd(0, -s), complexd(c, 0)};
    case GateKind::RY:
        return {complexd(c, 0), complexd(-s, 0), complexd(s, 0), complexd(c, 0)};
    case GateKind::RZ:
        return {std::exp(complexd(0, -half)), complexd(0, 0), complexd(0, 0),
                std::exp(complexd(0, half))};
    default:
        throw std::logic_error("not a single-qubit gate");
    }
}

// Applies a 2x2 unitary to `qubit`, restricted to basis states where all
// `one_mask` bits read 1 and all `zero_mask` bits read 0.
void apply_single(std::vector<complexd>& amps, int qubit, const Matrix2& u,
                  std::uint64_t one_mask, std::uint64_t zero_mask) {
    const std::uint64_t dim = amps.size();
    const std::uint64_t qbit = 1ULL << qubit;
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & qbit) continue;
        if ((i & one_mask) != one_mask || (i & zero_mask) != 0) continue;
        const std::uint64_t j = i | qbit;
        const complexd a = amps[i];
        const complexd b = amps[j];
        amps[i] = u[0] * a + u[1] * b;
        amps[j] = u[2] * a + u[3] * b;
    }
}

void apply_swap(std::vector<complexd>& amps, int qa, int qb, std::uint64_t one_mask,
                std::uint64_t zero_mask) {
    const std::uint64_t dim = amps.size();
    const std::uint64_t abit = 1ULL << qa;
    const std::uint64_t bbit = 1ULL << qb;
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & abit) == 0 || (i & bbit) != 0) continue; // visit a=1,b=0 once
        if ((i & one_mask) != one_mask || (i & zero_mask) != 0) continue;
        std::swap(amps[i], amps[(i ^ abit) | bbit]);
    }
}

void apply_masked(std::vector<complexd>& amps, const Gate& gate, std::uint64_t one_mask,
                  std::uint64_t zero_mask) {
    switch (gate.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        apply_single(amps, gate.targets[0], single_qubit_matrix(gate), one_mask, zero_mask);
        return;
    case GateKind::CNOT: {
        Gate x = Gate::x(gate.targets[0]);
        apply_single(amps, gate.targets[0], single_qubit_matrix(x),
                     one_mask | (1ULL << gate.controls[0]), zero_mask);
        return;
    }
    case GateKind::SWAP:
        apply_swap(amps, gate.targets[0], gate.targets[1], one_mask, zero_mask);
        return;
    case GateKind::CSWAP:
        apply_swap(amps, gate.targets[0], gate.targets[1],
                   one_mask | (1ULL << gate.controls[0]), zero_mask);
        return;
    case GateKind::Controlled:
        for (const Gate& inner : gate.body->gates) {
            apply_masked(amps, inner, one_mask | (1ULL << gate.controls[0]), zero_mask);
        }
        return;
    case GateKind::AntiControlled:
        for (const Gate& inner : gate.body->gates) {
            apply_masked(amps, inner, one_mask, zero_mask | (1ULL << gate.controls[0]));
        }
        return;
    }
    throw std::logic_error("unhandled gate kind");
}

} // namespace

Statevector Statevector::zero_state(int n_qubits) {
    if (n_qubits <= 0 || n_qubits > 26) {
        throw std::invalid_argument("qubit count must be in [1, 26]");
    }
    Statevector s;
    s.n_qubits = n_qubits;
    s.amplitudes.assign(1ULL << n_qubits, complexd(0, 0));
    s.amplitudes[0] = complexd(1, 0);
    return s;
}

double Statevector::norm() const {
    double total = 0.0;
    for (const complexd& a : amplitudes) total += std::norm(a);
    return std::sqrt(total);
}

Statevector apply_gate(const Statevector& state, const Gate& gate) {
    validate_gate(gate, state.n_qubits);
    Statevector out = state;
    apply_masked(out.amplitudes, gate, 0, 0);
    return out;
}

Statevector apply_circuit(const Statevector& state, const Circuit& circuit) {
    if (circuit.n_qubits != state.n_qubits) {
        throw std::invalid_argument("circuit and state qubit counts differ");
    }
    Statevector out = state;
    for (const Gate& gate : circuit.gates) {
        apply_masked(out.amplitudes, gate, 0, 0);
    }
    return out;
}

Statevector run_circuit(const Circuit& circuit) {
    return apply_circuit(Statevector::zero_state(circuit.n_qubits), circuit);
}

double probability_of(const Statevector& state, const std::string& outcome) {
    if (static_cast<int>(outcome.size()) != state.n_qubits) {
        throw std::invalid_argument("outcome length does not match qubit count");
    }
    return std::norm(state.amplitudes[outcome_index(outcome)]);
}

double marginal_probability(const Statevector& state, int qubit, int value) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    if (value != 0 && value != 1) {
        throw std::invalid_argument("bit value must be 0 or 1");
    }
    const std::uint64_t qbit = 1ULL << qubit;
    const std::uint64_t want = value ? qbit : 0;
    double total = 0.0;
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        if ((i & qbit) == want) total += std::norm(state.amplitudes[i]);
    }
    return total;
}

std::vector<double> outcome_probabilities(const Statevector& state) {
    std::vector<double> probs(state.dimension());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = std::norm(state.amplitudes[i]);
    }
    return probs;
}

std::vector<std::uint64_t> sample_distribution(const std::vector<double>& probabilities,
                                               std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shot count must be positive");
    if (probabilities.empty()) throw std::invalid_argument("empty distribution");

    std::vector<double> cumulative(probabilities.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        running += probabilities[i];
        cumulative[i] = running;
    }
    // Guard the tail against rounding so every draw lands on a bucket.
    cumulative.back() = std::max(cumulative.back(), 1.0);

    std::vector<std::uint64_t> counts(probabilities.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * running;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t idx = std::min<std::size_t>(
            static_cast<std::size_t>(it - cumulative.begin()), counts.size() - 1);
        ++counts[idx];
    }
    return counts;
}

std::vector<std::uint64_t> sample(const Statevector& state, std::uint64_t shots,
                                  std::uint64_t seed) {
    return sample_distribution(outcome_probabilities(state), shots, seed);
}

complexd inner_product(const Statevector& a, const Statevector& b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    complexd total(0, 0);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        total += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return total;
}

std::uint64_t outcome_index(const std::string& outcome) {
    std::uint64_t index = 0;
    for (char c : outcome) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("outcome strings contain only '0' and '1'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

std::string outcome_string(std::uint64_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index & (1ULL << q)) s[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
    }
    return s;
}

} // namespace qkge
