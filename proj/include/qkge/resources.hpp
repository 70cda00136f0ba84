#pragma once

#include <map>
#include <string>

#include "qkge/ansatz.hpp"
#include "qkge/scoring.hpp"

namespace qkge {

// Counting convention: every gate is rewritten over {CNOT, single-qubit}
// before counting. The table is a convention, not physics; its name is
// stamped into every report so comparisons stay like-for-like.
//
//   single-qubit                 1 gate,  0 two-qubit, depth 1
//   CNOT                         1 gate,  1 two-qubit, depth 1
//   SWAP                3 CNOT = 3 gates, 3 two-qubit, depth 3
//   Toffoli      6 CNOT + 9 1q = 15 gates, 6 two-qubit, depth 11
//   CSWAP     2 CNOT + Toffoli = 17 gates, 8 two-qubit, depth 13
//   controlled 1q  2 CNOT + 3 1q = 5 gates, 2 two-qubit, depth 5
//   controlled CNOT = Toffoli
//
// Controlling a whole ansatz on an ancilla rewrites every contained gate per
// this table; an anti-control adds an X conjugation pair on the control.
inline constexpr const char* kDecompositionName = "cnot-basis-v1";

struct GateCost {
    int total_gates = 0;
    int two_qubit_gates = 0;
    int depth = 0;
};

// The fixed table above, keyed by decomposed primitive name.
std::map<std::string, GateCost> decomposition_table();

struct ResourceReport {
    ScoreScheme scheme = ScoreScheme::ComputeUncompute;
    int n_qubits_logical = 0;
    long long total_gates = 0;
    long long two_qubit_gates = 0;
    long long depth = 0;
    std::string decomposition = kDecompositionName;
};

// Costs of an explicit circuit under the table.
ResourceReport count_circuit_resources(const Circuit& circuit);

// Builds the scheme's scoring circuit symbolically and counts it.
ResourceReport estimate_resources(ScoreScheme scheme, const AnsatzSpec& spec);

} // namespace qkge
