#include "qkge/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qkge/resources.hpp"
#include "qkge/rng.hpp"
#include "qkge/statevector.hpp"

namespace qkge {

namespace {

void check_distribution(const std::vector<double>& probabilities) {
    if (probabilities.empty() || (probabilities.size() & (probabilities.size() - 1)) != 0) {
        throw std::invalid_argument("distribution size must be a power of two");
    }
    double total = 0.0;
    for (double p : probabilities) {
        if (p < -1e-12) throw std::invalid_argument("negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::invalid_argument("distribution does not sum to 1");
    }
}

// Symmetric confusion of one bit of the outcome index.
void confuse_bit(std::vector<double>& probabilities, int bit, double fidelity) {
    const std::uint64_t mask = 1ULL << bit;
    const double flip = 1.0 - fidelity;
    for (std::uint64_t i = 0; i < probabilities.size(); ++i) {
        if (i & mask) continue;
        const std::uint64_t j = i | mask;
        const double p0 = probabilities[i];
        const double p1 = probabilities[j];
        probabilities[i] = fidelity * p0 + flip * p1;
        probabilities[j] = flip * p0 + fidelity * p1;
    }
}

void depolarize(std::vector<double>& probabilities, long long two_qubit_gates, double p2) {
    if (p2 <= 0.0 || two_qubit_gates <= 0) return;
    const double survival = std::pow(1.0 - p2, static_cast<double>(two_qubit_gates));
    const double uniform = (1.0 - survival) / static_cast<double>(probabilities.size());
    for (double& p : probabilities) p = survival * p + uniform;
}

} // namespace

void NoiseModel::validate() const {
    if (!(readout_fidelity > 0.5 && readout_fidelity <= 1.0)) {
        throw std::invalid_argument("readout fidelity must lie in (0.5, 1]");
    }
    if (!(two_qubit_error >= 0.0 && two_qubit_error < 1.0)) {
        throw std::invalid_argument("two-qubit error must lie in [0, 1)");
    }
}

std::vector<double> apply_readout_error(const std::vector<double>& probabilities,
                                        int n_measured, const NoiseModel& model) {
    model.validate();
    check_distribution(probabilities);
    if (n_measured < 0 || (1ULL << n_measured) > probabilities.size()) {
        throw std::invalid_argument("measured qubit count exceeds the distribution");
    }
    std::vector<double> out = probabilities;
    for (int bit = 0; bit < n_measured; ++bit) {
        confuse_bit(out, bit, model.readout_fidelity);
    }
    return out;
}

ScoreResult noisy_score(ScoreScheme scheme, const AnsatzSpec& spec, const ParamVector& theta_h,
                        const std::optional<ParamVector>& theta_r, const ParamVector& theta_t,
                        const NoiseModel& model, std::uint64_t shots, std::uint64_t seed) {
    model.validate();
    const Circuit circuit = build_score_circuit(scheme, spec, theta_h, theta_r, theta_t);
    std::vector<double> distribution = outcome_probabilities(run_circuit(circuit));

    // Decomposed two-qubit count of the circuit actually run, so an identity
    // relation is not billed for a relation stack.
    const long long two_qubit = count_circuit_resources(circuit).two_qubit_gates;
    depolarize(distribution, two_qubit, model.two_qubit_error);

    if (scheme == ScoreScheme::ComputeUncompute) {
        for (int bit = 0; bit < circuit.n_qubits; ++bit) {
            confuse_bit(distribution, bit, model.readout_fidelity);
        }
    } else {
        confuse_bit(distribution, circuit.n_qubits - 1, model.readout_fidelity);
    }

    double p0 = 0.0;
    if (shots == 0) {
        if (scheme == ScoreScheme::ComputeUncompute) {
            p0 = distribution[0];
        } else {
            const std::uint64_t ancilla_bit = 1ULL << (circuit.n_qubits - 1);
            for (std::uint64_t i = 0; i < distribution.size(); ++i) {
                if ((i & ancilla_bit) == 0) p0 += distribution[i];
            }
        }
    } else {
        const std::vector<std::uint64_t> counts = sample_distribution(distribution, shots, seed);
        std::uint64_t hits = 0;
        if (scheme == ScoreScheme::ComputeUncompute) {
            hits = counts[0];
        } else {
            const std::uint64_t ancilla_bit = 1ULL << (circuit.n_qubits - 1);
            for (std::size_t i = 0; i < counts.size(); ++i) {
                if ((i & ancilla_bit) == 0) hits += counts[i];
            }
        }
        p0 = static_cast<double>(hits) / static_cast<double>(shots);
    }

    const double raw = scheme == ScoreScheme::ComputeUncompute ? p0 : 2.0 * p0 - 1.0;
    ScoreResult result;
    result.scheme = scheme;
    result.mode = shots == 0 ? ScoreMode::Exact : ScoreMode::Sampled;
    if (shots > 0) {
        result.shots = shots;
        result.seed = seed;
    }
    result.value = std::clamp(raw, score_range_min(scheme), score_range_max(scheme));
    if (result.value != raw) result.raw_value = raw;
    return result;
}

std::vector<SweepRow> scheme_bias_sweep(const SweepConfig& config, const NoiseModel& model) {
    model.validate();
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw std::invalid_argument("bad qubit range");
    }
    if (config.trials < 1) throw std::invalid_argument("trial count must be positive");

    std::vector<SweepRow> rows;
    for (ScoreScheme scheme :
         {ScoreScheme::Switch, ScoreScheme::Swap, ScoreScheme::ComputeUncompute}) {
        for (int n = config.n_min; n <= config.n_max; ++n) {
            const AnsatzSpec spec{n, config.n_layers};
            const int count = param_count(spec);

            double bias_sum = 0.0;
            double bias_sq_sum = 0.0;
            double abs_sum = 0.0;
            double exact_sum = 0.0;
            double noisy_sum = 0.0;
            for (int trial = 0; trial < config.trials; ++trial) {
                // Matched draws: every scheme at a given (n, trial) sees the
                // same parameters.
                Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(trial)));
                ParamVector theta_h(static_cast<std::size_t>(count));
                for (double& x : theta_h) x = rng.next_angle();
                ParamVector theta_t;
                std::optional<ParamVector> theta_r;
                if (config.policy == ThetaPolicy::PerfectOverlap) {
                    theta_t = theta_h;
                } else {
                    theta_r.emplace(static_cast<std::size_t>(count));
                    for (double& x : *theta_r) x = rng.next_angle();
                    theta_t.resize(static_cast<std::size_t>(count));
                    for (double& x : theta_t) x = rng.next_angle();
                }

                const double exact = exact_score(scheme, spec, theta_h, theta_r, theta_t).value;
                const std::uint64_t shot_seed =
                    mix_seed(config.seed, static_cast<std::uint64_t>(trial),
                             static_cast<std::uint64_t>(scheme) * 64 + static_cast<std::uint64_t>(n));
                const double noisy = noisy_score(scheme, spec, theta_h, theta_r, theta_t, model,
                                                 config.shots, shot_seed)
                                         .value;
                const double bias = noisy - exact;
                bias_sum += bias;
                bias_sq_sum += bias * bias;
                abs_sum += std::abs(bias);
                exact_sum += exact;
                noisy_sum += noisy;
            }

            const double trials = static_cast<double>(config.trials);
            SweepRow row;
            row.scheme = scheme;
            row.n = n;
            row.f_read = model.readout_fidelity;
            row.p2 = model.two_qubit_error;
            row.shots = config.shots;
            row.mean_abs_bias = abs_sum / trials;
            const double mean_bias = bias_sum / trials;
            row.std_bias = std::sqrt(std::max(0.0, bias_sq_sum / trials - mean_bias * mean_bias));
            row.mean_exact = exact_sum / trials;
            row.mean_noisy = noisy_sum / trials;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace qkge
