#pragma once

#include <cstdint>
#include <vector>

#include "qkge/ansatz.hpp"
#include "qkge/scoring.hpp"

namespace qkge {

// Measurement-level noise: symmetric per-qubit readout confusion plus a
// depolarizing weight per two-qubit gate. Two-qubit counts come from the
// resource estimator's decomposition, so controlled-SWAP-heavy circuits pay
// proportionally.
struct NoiseModel {
    double readout_fidelity = 1.0; // F in (0.5, 1]
    double two_qubit_error = 0.0;  // p2 in [0, 1)

    void validate() const;
};

// Flips each measured bit independently with probability 1 - F (symmetric
// confusion). `probabilities` is a distribution over 2^n_measured outcomes.
std::vector<double> apply_readout_error(const std::vector<double>& probabilities,
                                        int n_measured, const NoiseModel& model);

// Noisy score pipeline: exact outcome distribution -> per-two-qubit-gate
// depolarizing (weight (1-p2)^G kept, remainder uniform) -> readout confusion
// on the measured qubits (all n for compute-uncompute, the ancilla only for
// the switch and swap tests) -> sampling -> score map, clamped to the
// scheme's range with the raw value retained.
//
// shots = 0 evaluates the exact noisy distribution instead of sampling; with
// F = 1 and p2 = 0 the sampled path reproduces estimate_score bit for bit.
ScoreResult noisy_score(ScoreScheme scheme, const AnsatzSpec& spec, const ParamVector& theta_h,
                        const std::optional<ParamVector>& theta_r, const ParamVector& theta_t,
                        const NoiseModel& model, std::uint64_t shots, std::uint64_t seed);

enum class ThetaPolicy {
    Random,         // independent head / relation / tail draws
    PerfectOverlap, // theta_h = theta_t, identity relation: exact score 1
};

struct SweepConfig {
    int n_min = 1;
    int n_max = 4;
    int n_layers = 2;
    int trials = 20;
    ThetaPolicy policy = ThetaPolicy::Random;
    std::uint64_t shots = 0; // 0 = exact noisy distribution
    std::uint64_t seed = 0;
};

struct SweepRow {
    ScoreScheme scheme;
    int n = 0;
    double f_read = 1.0;
    double p2 = 0.0;
    std::uint64_t shots = 0;
    double mean_abs_bias = 0.0;
    double std_bias = 0.0;
    double mean_exact = 0.0;
    double mean_noisy = 0.0;
};

// |noisy - exact| statistics per (scheme, n) over matched parameter draws.
// Rows are ordered by (scheme, n) with schemes in declaration order.
std::vector<SweepRow> scheme_bias_sweep(const SweepConfig& config, const NoiseModel& model);

} // namespace qkge
