#include "qkge/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkge {

namespace {

// U1 = U(theta_r) V(theta_h) H^(x)n as an n-qubit circuit.
Circuit head_side_circuit(const AnsatzSpec& spec, const ParamVector& theta_h,
                          const std::optional<ParamVector>& theta_r) {
    Circuit circuit = entity_state_circuit(spec, theta_h);
    if (theta_r) {
        circuit.append(relation_unitary_circuit(spec, *theta_r));
    }
    return circuit;
}

double clamp_to_range(double value, ScoreScheme scheme) {
    return std::clamp(value, score_range_min(scheme), score_range_max(scheme));
}

double score_from_p0(ScoreScheme scheme, double p0) {
    return scheme == ScoreScheme::ComputeUncompute ? p0 : 2.0 * p0 - 1.0;
}

} // namespace

std::string scheme_name(ScoreScheme scheme) {
    switch (scheme) {
    case ScoreScheme::Switch: return "switch";
    case ScoreScheme::Swap: return "swap";
    case ScoreScheme::ComputeUncompute: return "compute-uncompute";
    }
    return "?";
}

ScoreScheme scheme_from_name(const std::string& name) {
    if (name == "switch") return ScoreScheme::Switch;
    if (name == "swap") return ScoreScheme::Swap;
    if (name == "compute-uncompute" || name == "cu") return ScoreScheme::ComputeUncompute;
    throw std::invalid_argument("unknown scheme '" + name +
                                "' (expected switch, swap or compute-uncompute)");
}

double score_range_min(ScoreScheme scheme) {
    return scheme == ScoreScheme::Switch ? -1.0 : 0.0;
}

double score_range_max(ScoreScheme) { return 1.0; }

Circuit build_switch_circuit(const AnsatzSpec& spec, const ParamVector& theta_h,
                             const std::optional<ParamVector>& theta_r,
                             const ParamVector& theta_t) {
    const int n = spec.n_qubits;
    const int ancilla = n;
    Circuit circuit(n + 1);
    circuit.add(Gate::h(ancilla));
    circuit.add(Gate::controlled(head_side_circuit(spec, theta_h, theta_r), ancilla));
    circuit.add(Gate::anti_controlled(entity_state_circuit(spec, theta_t), ancilla));
    circuit.add(Gate::h(ancilla));
    return circuit;
}

Circuit build_swap_circuit(const AnsatzSpec& spec, const ParamVector& theta_h,
                           const std::optional<ParamVector>& theta_r,
                           const ParamVector& theta_t) {
    const int n = spec.n_qubits;
    const int ancilla = 2 * n;
    Circuit circuit(2 * n + 1);
    circuit.append(shifted(head_side_circuit(spec, theta_h, theta_r), 0, 2 * n + 1));
    circuit.append(shifted(entity_state_circuit(spec, theta_t), n, 2 * n + 1));
    circuit.add(Gate::h(ancilla));
    for (int q = 0; q < n; ++q) {
        circuit.add(Gate::cswap(ancilla, q, n + q));
    }
    circuit.add(Gate::h(ancilla));
    return circuit;
}

Circuit build_cu_circuit(const AnsatzSpec& spec, const ParamVector& theta_h,
                         const std::optional<ParamVector>& theta_r,
                         const ParamVector& theta_t) {
    Circuit circuit = head_side_circuit(spec, theta_h, theta_r);
    circuit.append(adjoint(entity_state_circuit(spec, theta_t)));
    return circuit;
}

Circuit build_score_circuit(ScoreScheme scheme, const AnsatzSpec& spec,
                            const ParamVector& theta_h,
                            const std::optional<ParamVector>& theta_r,
                            const ParamVector& theta_t) {
    switch (scheme) {
    case ScoreScheme::Switch: return build_switch_circuit(spec, theta_h, theta_r, theta_t);
    case ScoreScheme::Swap: return build_swap_circuit(spec, theta_h, theta_r, theta_t);
    case ScoreScheme::ComputeUncompute: return build_cu_circuit(spec, theta_h, theta_r, theta_t);
    }
    throw std::logic_error("unhandled scheme");
}

ScoreResult exact_score(ScoreScheme scheme, const AnsatzSpec& spec, const ParamVector& theta_h,
                        const std::optional<ParamVector>& theta_r, const ParamVector& theta_t) {
    const Circuit circuit = build_score_circuit(scheme, spec, theta_h, theta_r, theta_t);
    const Statevector state = run_circuit(circuit);
    double p0 = 0.0;
    if (scheme == ScoreScheme::ComputeUncompute) {
        p0 = std::norm(state.amplitudes[0]);
    } else {
        p0 = marginal_probability(state, circuit.n_qubits - 1, 0);
    }
    ScoreResult result;
    result.value = clamp_to_range(score_from_p0(scheme, p0), scheme);
    result.scheme = scheme;
    result.mode = ScoreMode::Exact;
    return result;
}

ScoreResult estimate_score(ScoreScheme scheme, const AnsatzSpec& spec,
                           const ParamVector& theta_h, const std::optional<ParamVector>& theta_r,
                           const ParamVector& theta_t, std::uint64_t shots, std::uint64_t seed) {
    const Circuit circuit = build_score_circuit(scheme, spec, theta_h, theta_r, theta_t);
    const Statevector state = run_circuit(circuit);
    const std::vector<std::uint64_t> counts = sample(state, shots, seed);

    std::uint64_t hits = 0;
    if (scheme == ScoreScheme::ComputeUncompute) {
        hits = counts[0];
    } else {
        const std::uint64_t ancilla_bit = 1ULL << (circuit.n_qubits - 1);
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if ((i & ancilla_bit) == 0) hits += counts[i];
        }
    }
    const double p0 = static_cast<double>(hits) / static_cast<double>(shots);

    // A finite-shot swap estimate 2p - 1 can dip below the scheme's [0, 1]
    // range; clamp into range and keep the raw value.
    const double raw = score_from_p0(scheme, p0);
    ScoreResult result;
    result.value = clamp_to_range(raw, scheme);
    if (result.value != raw) result.raw_value = raw;
    result.scheme = scheme;
    result.mode = ScoreMode::Sampled;
    result.shots = shots;
    result.seed = seed;
    return result;
}

complexd oracle_inner_product(const AnsatzSpec& spec, const ParamVector& theta_h,
                              const std::optional<ParamVector>& theta_r,
                              const ParamVector& theta_t) {
    Statevector head = run_circuit(entity_state_circuit(spec, theta_h));
    if (theta_r) {
        head = apply_circuit(head, relation_unitary_circuit(spec, *theta_r));
    }
    const Statevector tail = run_circuit(entity_state_circuit(spec, theta_t));
    return inner_product(tail, head);
}

double oracle_score(ScoreScheme scheme, const AnsatzSpec& spec, const ParamVector& theta_h,
                    const std::optional<ParamVector>& theta_r, const ParamVector& theta_t) {
    const complexd overlap = oracle_inner_product(spec, theta_h, theta_r, theta_t);
    return scheme == ScoreScheme::Switch ? overlap.real() : std::norm(overlap);
}

std::uint64_t shots_for_precision(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("precision must lie in (0, 1)");
    }
    return static_cast<std::uint64_t>(std::ceil(1.0 / (epsilon * epsilon)));
}

} // namespace qkge
