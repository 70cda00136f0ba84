#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qkge/circuit.hpp"

namespace qkge {

using complexd = std::complex<double>;

// Dense n-qubit pure state. Qubit 0 is the least-significant bit of the
// basis-state index. Outcome bitstrings are written most-significant qubit
// first, matching ket notation: "10" is the two-qubit state with qubit 1 set
// and qubit 0 clear, i.e. basis index 2.
struct Statevector {
    int n_qubits = 0;
    std::vector<complexd> amplitudes;

    static Statevector zero_state(int n_qubits);

    std::size_t dimension() const { return amplitudes.size(); }
    double norm() const;
};

// Pure gate application: returns the transformed state, input untouched.
Statevector apply_gate(const Statevector& state, const Gate& gate);

// Applies every gate of `circuit` in order to `state`.
Statevector apply_circuit(const Statevector& state, const Circuit& circuit);

// Applies `circuit` to |0...0>.
Statevector run_circuit(const Circuit& circuit);

// |<outcome|state>|^2 for a full computational-basis outcome.
double probability_of(const Statevector& state, const std::string& outcome);

// Probability that measuring `qubit` yields `value` (0 or 1).
double marginal_probability(const Statevector& state, int qubit, int value);

// |amplitude|^2 for every basis state, indexed by basis index.
std::vector<double> outcome_probabilities(const Statevector& state);

// `shots` independent draws from the outcome distribution; counts indexed by
// basis index. Identical (state, shots, seed) triples yield identical counts.
std::vector<std::uint64_t> sample(const Statevector& state, std::uint64_t shots,
                                  std::uint64_t seed);

// Same sampler over an explicit distribution (used by the noise layer, and by
// `sample` itself so both paths draw identically for a given seed).
std::vector<std::uint64_t> sample_distribution(const std::vector<double>& probabilities,
                                               std::uint64_t shots, std::uint64_t seed);

// <a|b>, conjugate-linear in the first argument.
complexd inner_product(const Statevector& a, const Statevector& b);

// Bitstring <-> basis-index conversions under the convention above.
std::uint64_t outcome_index(const std::string& outcome);
std::string outcome_string(std::uint64_t index, int n_qubits);

} // namespace qkge
