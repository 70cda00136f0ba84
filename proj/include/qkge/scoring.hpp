#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "qkge/ansatz.hpp"
#include "qkge/statevector.hpp"

namespace qkge {

enum class ScoreScheme { Switch, Swap, ComputeUncompute };

enum class ScoreMode { Exact, Sampled };

std::string scheme_name(ScoreScheme scheme);
ScoreScheme scheme_from_name(const std::string& name);

// Switch scores live in [-1, 1]; swap and compute-uncompute in [0, 1].
double score_range_min(ScoreScheme scheme);
double score_range_max(ScoreScheme scheme);

struct ScoreResult {
    double value = 0.0;
    ScoreScheme scheme = ScoreScheme::ComputeUncompute;
    ScoreMode mode = ScoreMode::Exact;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    // Pre-clamp value, present only when clamping moved the result (noise).
    std::optional<double> raw_value;
};

// The three scoring circuits. theta_r may be absent, meaning the identity
// relation; tests and the noise analysis use that for perfect-overlap cases.
//
// Switch (n+1 qubits, ancilla = qubit n): H on the ancilla, U1 controlled on
// ancilla=1, U2 applied when ancilla=0, H on the ancilla.
// Swap (2n+1 qubits, ancilla = qubit 2n): U1 on qubits [0,n), U2 on [n,2n),
// H on the ancilla, one ancilla-controlled SWAP per qubit pair, H again.
// Compute-uncompute (n qubits): U1 followed by the adjoint of U2.
//
// Throughout, U1 prepares U(theta_r) V(theta_h) H^(x)n |0> and U2 prepares
// V(theta_t) H^(x)n |0>.
Circuit build_switch_circuit(const AnsatzSpec& spec, const ParamVector& theta_h,
                             const std::optional<ParamVector>& theta_r,
                             const ParamVector& theta_t);
Circuit build_swap_circuit(const AnsatzSpec& spec, const ParamVector& theta_h,
                           const std::optional<ParamVector>& theta_r,
                           const ParamVector& theta_t);
Circuit build_cu_circuit(const AnsatzSpec& spec, const ParamVector& theta_h,
                         const std::optional<ParamVector>& theta_r,
                         const ParamVector& theta_t);
Circuit build_score_circuit(ScoreScheme scheme, const AnsatzSpec& spec,
                            const ParamVector& theta_h,
                            const std::optional<ParamVector>& theta_r,
                            const ParamVector& theta_t);

// Measured quantity and score map, fixed here once: the ancilla tests measure
// P(ancilla = 0) and report 2P - 1; compute-uncompute measures the all-zero
// probability and reports it directly.
//   switch:            2P - 1 = Re<t|U_r|h>
//   swap:              2P - 1 = |<t|U_r|h>|^2
//   compute-uncompute:      P = |<t|U_r|h>|^2
ScoreResult exact_score(ScoreScheme scheme, const AnsatzSpec& spec, const ParamVector& theta_h,
                        const std::optional<ParamVector>& theta_r, const ParamVector& theta_t);

// Same maps applied to empirical frequencies from seeded sampling.
ScoreResult estimate_score(ScoreScheme scheme, const AnsatzSpec& spec,
                           const ParamVector& theta_h, const std::optional<ParamVector>& theta_r,
                           const ParamVector& theta_t, std::uint64_t shots, std::uint64_t seed);

// Direct statevector route: prepares |h>, U_r|h> and |t> with no ancilla and
// no scoring circuit, then evaluates the inner product. This is the
// independent reference the circuit implementations are tested against.
complexd oracle_inner_product(const AnsatzSpec& spec, const ParamVector& theta_h,
                              const std::optional<ParamVector>& theta_r,
                              const ParamVector& theta_t);
double oracle_score(ScoreScheme scheme, const AnsatzSpec& spec, const ParamVector& theta_h,
                    const std::optional<ParamVector>& theta_r, const ParamVector& theta_t);

// ceil(1 / epsilon^2) measurement shots for score precision epsilon.
std::uint64_t shots_for_precision(double epsilon);

} // namespace qkge
