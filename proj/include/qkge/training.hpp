#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qkge/ansatz.hpp"
#include "qkge/kg.hpp"
#include "qkge/scoring.hpp"

namespace qkge {

enum class GradientMethod { ParameterShift, Spsa };
enum class OptimizerKind { Sgd, Adam };

// Trainable embedding set: one angle vector per entity and per relation.
struct ParameterStore {
    AnsatzSpec spec;
    std::vector<ParamVector> entity_params;
    std::vector<ParamVector> relation_params;

    // Independent uniform draws from [-pi, pi), seeded.
    static ParameterStore random_init(const AnsatzSpec& spec, int n_entities, int n_relations,
                                      std::uint64_t seed);

    std::size_t flat_size() const;
};

// Address of one trainable coordinate.
struct ParamCoord {
    enum class Kind { Entity, Relation };
    Kind kind = Kind::Entity;
    int owner = 0;
    int offset = 0;
};

double get_param(const ParameterStore& params, const ParamCoord& coord);

// Sampled scoring configuration. Per-triple seeds are derived as
// mix_seed(base_seed, triple_index), so scoring order never matters.
struct SampledMode {
    std::uint64_t shots = 1024;
    std::uint64_t base_seed = 0;
};

struct TrainConfig {
    AnsatzSpec ansatz;
    ScoreScheme scheme = ScoreScheme::ComputeUncompute;
    double learning_rate = 0.01;
    int epochs = 100;
    int batch_size = 0; // 0 = full batch
    int negatives_per_positive = 1;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots; // engaged = sampled mode
    GradientMethod gradient_method = GradientMethod::ParameterShift;
    OptimizerKind optimizer = OptimizerKind::Adam;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    double spsa_perturbation = 0.1;

    void validate() const;
};

// Score of one training element under the store's parameters. `triple_index`
// feeds the per-triple seed derivation in sampled mode.
double dataset_score(const ParameterStore& params, const LabeledTriple& t, ScoreScheme scheme,
                     const std::optional<SampledMode>& mode = std::nullopt,
                     std::size_t triple_index = 0);

// For each positive triple, `k` corruptions (head or tail replaced by a
// random entity, coin-flip which side) that are absent from the graph,
// labeled 0. Deterministic per seed. Throws if a positive admits no
// corruption at all.
std::vector<LabeledTriple> negative_sample(const KnowledgeGraph& kg, int k, std::uint64_t seed);

// Mean squared error (1/|D|) sum (score - label)^2.
double mse_loss(const ParameterStore& params, std::span<const LabeledTriple> data,
                ScoreScheme scheme, const std::optional<SampledMode>& mode = std::nullopt);

// d(loss)/d(coordinate) from exact scores via two-point shift rules, applied
// per occurrence of the coordinate in each triple's score:
//   swap / compute-uncompute:  d = [s(x + pi/2) - s(x - pi/2)] / 2
//   switch:                    d = [s(x + pi) - s(x - pi)] / 4
// The overlap-squared scores vary with angular frequency 1 in every rotation
// angle, so the standard +-pi/2 rule is exact for them. The switch score is
// linear in each prepared state and varies with frequency 1/2, which makes
// the +-pi shift with divisor 4 the exact two-point rule. Both are validated
// against central finite differences in the test suites.
double gradient_parameter_shift(const ParameterStore& params,
                                std::span<const LabeledTriple> batch, ScoreScheme scheme,
                                const ParamCoord& coord);

// Simultaneous-perturbation estimate over the full flattened parameter
// vector (entities first, then relations, each owner-major): one symmetric
// +-c Bernoulli perturbation, two loss evaluations. Deterministic per seed.
std::vector<double> gradient_spsa(const ParameterStore& params,
                                  std::span<const LabeledTriple> batch, ScoreScheme scheme,
                                  const std::optional<SampledMode>& mode, std::uint64_t seed,
                                  double perturbation);

struct TrainResult {
    ParameterStore params;
    std::vector<double> loss_history; // end-of-epoch loss, one entry per epoch
};

// Hybrid loop over a fixed labeled dataset: score, loss, gradient, classical
// update. `init` overrides the seeded random initialization when present.
TrainResult train_on(std::span<const LabeledTriple> data, int n_entities, int n_relations,
                     const TrainConfig& config,
                     const std::optional<ParameterStore>& init = std::nullopt);

// Full pipeline on a knowledge graph: negatives are resampled every epoch
// with seeds derived from config.seed, then optimized as in train_on.
TrainResult train(const KnowledgeGraph& kg, const TrainConfig& config);

} // namespace qkge
