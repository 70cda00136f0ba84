#include "qkge/training.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qkge/rng.hpp"

namespace qkge {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Seed-stream tags so the init, sampling and scoring streams never collide.
constexpr std::uint64_t kInitTag = 0x696e6974;
constexpr std::uint64_t kNegativeTag = 0x6e656773;
constexpr std::uint64_t kShuffleTag = 0x73687566;
constexpr std::uint64_t kScoreTag = 0x73636f72;
constexpr std::uint64_t kSpsaTag = 0x73707361;

ParamVector random_param_vector(int count, Rng& rng) {
    ParamVector v(static_cast<std::size_t>(count));
    for (double& x : v) x = rng.next_angle();
    return v;
}

std::optional<SampledMode> epoch_mode(const TrainConfig& config, int epoch) {
    if (!config.shots) return std::nullopt;
    return SampledMode{*config.shots, mix_seed(config.seed, kScoreTag, static_cast<std::uint64_t>(epoch))};
}

double scheme_shift(ScoreScheme scheme) {
    return scheme == ScoreScheme::Switch ? kPi : kPi / 2.0;
}

double scheme_divisor(ScoreScheme scheme) {
    return scheme == ScoreScheme::Switch ? 4.0 : 2.0;
}

// Score with one occurrence of a coordinate shifted. Which occurrence is
// shifted matters when the same entity plays head and tail in one triple.
enum class Occurrence { Head, Relation, Tail };

double shifted_score(const ParameterStore& params, const LabeledTriple& t, ScoreScheme scheme,
                     Occurrence occ, int offset, double delta) {
    ParamVector head = params.entity_params[static_cast<std::size_t>(t.head)];
    ParamVector relation = params.relation_params[static_cast<std::size_t>(t.relation)];
    ParamVector tail = params.entity_params[static_cast<std::size_t>(t.tail)];
    switch (occ) {
    case Occurrence::Head: head[static_cast<std::size_t>(offset)] += delta; break;
    case Occurrence::Relation: relation[static_cast<std::size_t>(offset)] += delta; break;
    case Occurrence::Tail: tail[static_cast<std::size_t>(offset)] += delta; break;
    }
    return exact_score(scheme, params.spec, head, relation, tail).value;
}

// Flat layout: entity vectors first, then relation vectors, owner-major.
struct FlatIndexer {
    std::size_t params_each;
    std::size_t n_entities;

    std::size_t index(const ParamCoord& c) const {
        const std::size_t base = c.kind == ParamCoord::Kind::Entity
                                     ? static_cast<std::size_t>(c.owner) * params_each
                                     : (n_entities + static_cast<std::size_t>(c.owner)) * params_each;
        return base + static_cast<std::size_t>(c.offset);
    }
};

std::vector<double> flatten(const ParameterStore& params) {
    std::vector<double> flat;
    flat.reserve(params.flat_size());
    for (const ParamVector& v : params.entity_params) flat.insert(flat.end(), v.begin(), v.end());
    for (const ParamVector& v : params.relation_params) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

void unflatten(const std::vector<double>& flat, ParameterStore& params) {
    std::size_t i = 0;
    for (ParamVector& v : params.entity_params) {
        for (double& x : v) x = flat[i++];
    }
    for (ParamVector& v : params.relation_params) {
        for (double& x : v) x = flat[i++];
    }
}

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    long long t = 0;

    explicit AdamState(std::size_t size) : m(size, 0.0), v(size, 0.0) {}
};

// Coordinates whose owners appear in the batch; canonical order so gradient
// accumulation never depends on evaluation order.
std::vector<ParamCoord> touched_coords(const ParameterStore& params,
                                       std::span<const LabeledTriple> batch) {
    const int params_each = param_count(params.spec);
    std::vector<bool> entity_hit(params.entity_params.size(), false);
    std::vector<bool> relation_hit(params.relation_params.size(), false);
    for (const LabeledTriple& t : batch) {
        entity_hit[static_cast<std::size_t>(t.head)] = true;
        entity_hit[static_cast<std::size_t>(t.tail)] = true;
        relation_hit[static_cast<std::size_t>(t.relation)] = true;
    }
    std::vector<ParamCoord> coords;
    for (std::size_t e = 0; e < entity_hit.size(); ++e) {
        if (!entity_hit[e]) continue;
        for (int off = 0; off < params_each; ++off) {
            coords.push_back({ParamCoord::Kind::Entity, static_cast<int>(e), off});
        }
    }
    for (std::size_t r = 0; r < relation_hit.size(); ++r) {
        if (!relation_hit[r]) continue;
        for (int off = 0; off < params_each; ++off) {
            coords.push_back({ParamCoord::Kind::Relation, static_cast<int>(r), off});
        }
    }
    return coords;
}

void check_batch(const ParameterStore& params, std::span<const LabeledTriple> batch) {
    for (const LabeledTriple& t : batch) {
        if (t.head < 0 || static_cast<std::size_t>(t.head) >= params.entity_params.size() ||
            t.tail < 0 || static_cast<std::size_t>(t.tail) >= params.entity_params.size() ||
            t.relation < 0 ||
            static_cast<std::size_t>(t.relation) >= params.relation_params.size()) {
            throw std::invalid_argument("triple indices outside the parameter store");
        }
        if (t.label != 0 && t.label != 1) {
            throw std::invalid_argument("labels must be 0 or 1");
        }
    }
}

// One optimizer step on one batch. Returns nothing; updates params in place.
void optimizer_step(ParameterStore& params, std::span<const LabeledTriple> batch,
                    const TrainConfig& config, AdamState& adam, int epoch, int batch_index) {
    std::vector<double> flat = flatten(params);
    std::vector<double> grad(flat.size(), 0.0);
    const FlatIndexer indexer{static_cast<std::size_t>(param_count(params.spec)),
                              params.entity_params.size()};

    if (config.gradient_method == GradientMethod::ParameterShift) {
        for (const ParamCoord& coord : touched_coords(params, batch)) {
            grad[indexer.index(coord)] = gradient_parameter_shift(params, batch, config.scheme, coord);
        }
    } else {
        const std::uint64_t seed = mix_seed(mix_seed(config.seed, kSpsaTag),
                                            static_cast<std::uint64_t>(epoch),
                                            static_cast<std::uint64_t>(batch_index));
        grad = gradient_spsa(params, batch, config.scheme, epoch_mode(config, epoch), seed,
                             config.spsa_perturbation);
    }

    if (config.optimizer == OptimizerKind::Sgd) {
        for (std::size_t i = 0; i < flat.size(); ++i) flat[i] -= config.learning_rate * grad[i];
    } else {
        ++adam.t;
        const double b1 = config.adam_beta1;
        const double b2 = config.adam_beta2;
        const double correction1 = 1.0 - std::pow(b1, static_cast<double>(adam.t));
        const double correction2 = 1.0 - std::pow(b2, static_cast<double>(adam.t));
        for (std::size_t i = 0; i < flat.size(); ++i) {
            adam.m[i] = b1 * adam.m[i] + (1.0 - b1) * grad[i];
            adam.v[i] = b2 * adam.v[i] + (1.0 - b2) * grad[i] * grad[i];
            const double mhat = adam.m[i] / correction1;
            const double vhat = adam.v[i] / correction2;
            flat[i] -= config.learning_rate * mhat / (std::sqrt(vhat) + config.adam_epsilon);
        }
    }
    unflatten(flat, params);
}

void run_epoch(ParameterStore& params, std::span<const LabeledTriple> data,
               const TrainConfig& config, AdamState& adam, int epoch) {
    const std::size_t n = data.size();
    const std::size_t batch_size =
        (config.batch_size <= 0 || static_cast<std::size_t>(config.batch_size) >= n)
            ? n
            : static_cast<std::size_t>(config.batch_size);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (batch_size < n) {
        Rng rng(mix_seed(config.seed, kShuffleTag, static_cast<std::uint64_t>(epoch)));
        for (std::size_t i = n - 1; i > 0; --i) {
            std::swap(order[i], order[rng.next_index(i + 1)]);
        }
    }

    int batch_index = 0;
    for (std::size_t start = 0; start < n; start += batch_size) {
        const std::size_t stop = std::min(n, start + batch_size);
        std::vector<LabeledTriple> batch;
        batch.reserve(stop - start);
        for (std::size_t i = start; i < stop; ++i) batch.push_back(data[order[i]]);
        optimizer_step(params, batch, config, adam, epoch, batch_index++);
    }
}

TrainResult run_training(std::span<const LabeledTriple> fixed_data, const KnowledgeGraph* kg,
                         int n_entities, int n_relations, const TrainConfig& config,
                         const std::optional<ParameterStore>& init) {
    config.validate();
    ParameterStore params = init ? *init
                                 : ParameterStore::random_init(config.ansatz, n_entities,
                                                               n_relations,
                                                               mix_seed(config.seed, kInitTag));
    if (param_count(params.spec) != param_count(config.ansatz)) {
        throw std::invalid_argument("initial parameters do not match the configured ansatz");
    }
    AdamState adam(params.flat_size());

    TrainResult result;
    result.loss_history.reserve(static_cast<std::size_t>(config.epochs));
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        std::vector<LabeledTriple> sampled;
        std::span<const LabeledTriple> data = fixed_data;
        if (kg) {
            sampled = negative_sample(*kg, config.negatives_per_positive,
                                      mix_seed(config.seed, kNegativeTag,
                                               static_cast<std::uint64_t>(epoch)));
            data = sampled;
        }
        check_batch(params, data);
        run_epoch(params, data, config, adam, epoch);
        const double loss = mse_loss(params, data, config.scheme, epoch_mode(config, epoch));
        if (!std::isfinite(loss)) {
            throw std::runtime_error("non-finite loss during training");
        }
        result.loss_history.push_back(loss);
    }
    result.params = std::move(params);
    return result;
}

} // namespace

ParameterStore ParameterStore::random_init(const AnsatzSpec& spec, int n_entities,
                                           int n_relations, std::uint64_t seed) {
    if (n_entities <= 0 || n_relations <= 0) {
        throw std::invalid_argument("parameter store needs at least one entity and relation");
    }
    const int count = param_count(spec);
    ParameterStore store;
    store.spec = spec;
    Rng rng(seed);
    store.entity_params.reserve(static_cast<std::size_t>(n_entities));
    for (int e = 0; e < n_entities; ++e) store.entity_params.push_back(random_param_vector(count, rng));
    store.relation_params.reserve(static_cast<std::size_t>(n_relations));
    for (int r = 0; r < n_relations; ++r) store.relation_params.push_back(random_param_vector(count, rng));
    return store;
}

std::size_t ParameterStore::flat_size() const {
    return static_cast<std::size_t>(param_count(spec)) *
           (entity_params.size() + relation_params.size());
}

double get_param(const ParameterStore& params, const ParamCoord& coord) {
    const auto& vectors =
        coord.kind == ParamCoord::Kind::Entity ? params.entity_params : params.relation_params;
    if (coord.owner < 0 || static_cast<std::size_t>(coord.owner) >= vectors.size()) {
        throw std::invalid_argument("coordinate owner out of range");
    }
    const ParamVector& v = vectors[static_cast<std::size_t>(coord.owner)];
    if (coord.offset < 0 || static_cast<std::size_t>(coord.offset) >= v.size()) {
        throw std::invalid_argument("coordinate offset out of range");
    }
    return v[static_cast<std::size_t>(coord.offset)];
}

void TrainConfig::validate() const {
    if (learning_rate <= 0.0) throw std::invalid_argument("learning rate must be positive");
    if (epochs <= 0) throw std::invalid_argument("epoch count must be positive");
    if (negatives_per_positive <= 0) {
        throw std::invalid_argument("negatives per positive must be positive");
    }
    if (shots && *shots == 0) throw std::invalid_argument("shot count must be positive");
    if (gradient_method == GradientMethod::ParameterShift && shots) {
        throw std::invalid_argument("parameter-shift gradients require exact mode; use SPSA");
    }
    if (gradient_method == GradientMethod::Spsa && spsa_perturbation <= 0.0) {
        throw std::invalid_argument("SPSA perturbation magnitude must be positive");
    }
    param_count(ansatz); // rejects bad qubit/layer counts
}

double dataset_score(const ParameterStore& params, const LabeledTriple& t, ScoreScheme scheme,
                     const std::optional<SampledMode>& mode, std::size_t triple_index) {
    const ParamVector& head = params.entity_params.at(static_cast<std::size_t>(t.head));
    const ParamVector& relation = params.relation_params.at(static_cast<std::size_t>(t.relation));
    const ParamVector& tail = params.entity_params.at(static_cast<std::size_t>(t.tail));
    if (!mode) {
        return exact_score(scheme, params.spec, head, relation, tail).value;
    }
    const std::uint64_t seed = mix_seed(mode->base_seed, triple_index);
    return estimate_score(scheme, params.spec, head, relation, tail, mode->shots, seed).value;
}

std::vector<LabeledTriple> negative_sample(const KnowledgeGraph& kg, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("negatives per positive must be at least 1");
    if (kg.triples().empty()) throw std::invalid_argument("knowledge graph has no triples");

    const int n_entities = kg.n_entities();
    Rng rng(seed);
    std::vector<LabeledTriple> data;
    data.reserve(kg.triples().size() * static_cast<std::size_t>(k + 1));

    for (const Triple& positive : kg.triples()) {
        data.push_back({positive.head, positive.relation, positive.tail, 1});
        for (int i = 0; i < k; ++i) {
            const int max_tries = 50 + 10 * n_entities;
            bool found = false;
            for (int attempt = 0; attempt < max_tries && !found; ++attempt) {
                Triple corrupted = positive;
                const bool corrupt_head = rng.next_bernoulli(0.5);
                const int replacement = static_cast<int>(rng.next_index(
                    static_cast<std::size_t>(n_entities)));
                (corrupt_head ? corrupted.head : corrupted.tail) = replacement;
                if (!kg.contains(corrupted)) {
                    data.push_back({corrupted.head, corrupted.relation, corrupted.tail, 0});
                    found = true;
                }
            }
            if (found) continue;
            // Rejection sampling exhausted; fall back to scanning every
            // candidate corruption in a seeded-rotation order.
            const std::size_t candidates = 2 * static_cast<std::size_t>(n_entities);
            const std::size_t rotation = rng.next_index(candidates);
            for (std::size_t c = 0; c < candidates && !found; ++c) {
                const std::size_t pick = (c + rotation) % candidates;
                Triple corrupted = positive;
                (pick < static_cast<std::size_t>(n_entities)
                     ? corrupted.head
                     : corrupted.tail) = static_cast<int>(pick % static_cast<std::size_t>(n_entities));
                if (!kg.contains(corrupted)) {
                    data.push_back({corrupted.head, corrupted.relation, corrupted.tail, 0});
                    found = true;
                }
            }
            if (!found) {
                throw std::runtime_error("no negative exists for a positive triple; the graph is "
                                         "fully connected");
            }
        }
    }
    return data;
}

double mse_loss(const ParameterStore& params, std::span<const LabeledTriple> data,
                ScoreScheme scheme, const std::optional<SampledMode>& mode) {
    if (data.empty()) throw std::invalid_argument("loss of an empty dataset");
    check_batch(params, data);
    double total = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double diff = dataset_score(params, data[i], scheme, mode, i) -
                            static_cast<double>(data[i].label);
        total += diff * diff;
    }
    return total / static_cast<double>(data.size());
}

double gradient_parameter_shift(const ParameterStore& params,
                                std::span<const LabeledTriple> batch, ScoreScheme scheme,
                                const ParamCoord& coord) {
    if (batch.empty()) throw std::invalid_argument("gradient of an empty batch");
    check_batch(params, batch);
    get_param(params, coord); // validates the coordinate

    const double shift = scheme_shift(scheme);
    const double divisor = scheme_divisor(scheme);

    double grad = 0.0;
    for (const LabeledTriple& t : batch) {
        std::vector<Occurrence> occurrences;
        if (coord.kind == ParamCoord::Kind::Entity) {
            if (t.head == coord.owner) occurrences.push_back(Occurrence::Head);
            if (t.tail == coord.owner) occurrences.push_back(Occurrence::Tail);
        } else if (t.relation == coord.owner) {
            occurrences.push_back(Occurrence::Relation);
        }
        if (occurrences.empty()) continue;

        double score_derivative = 0.0;
        for (Occurrence occ : occurrences) {
            const double plus = shifted_score(params, t, scheme, occ, coord.offset, shift);
            const double minus = shifted_score(params, t, scheme, occ, coord.offset, -shift);
            score_derivative += (plus - minus) / divisor;
        }
        const double score = dataset_score(params, t, scheme);
        grad += 2.0 * (score - static_cast<double>(t.label)) * score_derivative;
    }
    return grad / static_cast<double>(batch.size());
}

std::vector<double> gradient_spsa(const ParameterStore& params,
                                  std::span<const LabeledTriple> batch, ScoreScheme scheme,
                                  const std::optional<SampledMode>& mode, std::uint64_t seed,
                                  double perturbation) {
    if (batch.empty()) throw std::invalid_argument("gradient of an empty batch");
    if (perturbation <= 0.0) {
        throw std::invalid_argument("SPSA perturbation magnitude must be positive");
    }
    check_batch(params, batch);

    Rng rng(seed);
    std::vector<double> direction(params.flat_size());
    for (double& d : direction) d = rng.next_bernoulli(0.5) ? 1.0 : -1.0;

    ParameterStore shifted_store = params;
    std::vector<double> flat = flatten(params);
    std::vector<double> moved(flat.size());

    for (std::size_t i = 0; i < flat.size(); ++i) moved[i] = flat[i] + perturbation * direction[i];
    unflatten(moved, shifted_store);
    const double loss_plus = mse_loss(shifted_store, batch, scheme, mode);

    for (std::size_t i = 0; i < flat.size(); ++i) moved[i] = flat[i] - perturbation * direction[i];
    unflatten(moved, shifted_store);
    const double loss_minus = mse_loss(shifted_store, batch, scheme, mode);

    const double scale = (loss_plus - loss_minus) / (2.0 * perturbation);
    std::vector<double> grad(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) grad[i] = scale * direction[i];
    return grad;
}

TrainResult train_on(std::span<const LabeledTriple> data, int n_entities, int n_relations,
                     const TrainConfig& config, const std::optional<ParameterStore>& init) {
    if (data.empty()) throw std::invalid_argument("training on an empty dataset");
    return run_training(data, nullptr, n_entities, n_relations, config, init);
}

TrainResult train(const KnowledgeGraph& kg, const TrainConfig& config) {
    if (kg.triples().empty()) throw std::invalid_argument("knowledge graph has no triples");
    return run_training({}, &kg, kg.n_entities(), kg.n_relations(), config, std::nullopt);
}

} // namespace qkge
