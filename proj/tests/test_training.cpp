#include <doctest.h>

#include <cmath>
#include <vector>

#include "qkge/rng.hpp"
#include "qkge/training.hpp"

using namespace qkge;

namespace {

constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kSixthPi = 0.52359877559829887308;

// Independent gradient reference: central finite differences on the loss.
double fd_gradient(const ParameterStore& params, std::span<const LabeledTriple> batch,
                   ScoreScheme scheme, const ParamCoord& coord, double step = 1e-5) {
    ParameterStore moved = params;
    auto& vec = coord.kind == ParamCoord::Kind::Entity
                    ? moved.entity_params[static_cast<std::size_t>(coord.owner)]
                    : moved.relation_params[static_cast<std::size_t>(coord.owner)];
    vec[static_cast<std::size_t>(coord.offset)] += step;
    const double up = mse_loss(moved, batch, scheme);
    vec[static_cast<std::size_t>(coord.offset)] -= 2.0 * step;
    const double down = mse_loss(moved, batch, scheme);
    return (up - down) / (2.0 * step);
}

void check_gradient(double shift_value, double fd_value) {
    const double diff = std::abs(shift_value - fd_value);
    const bool ok = diff <= 1e-7 || diff <= 1e-5 * std::abs(fd_value);
    CAPTURE(shift_value);
    CAPTURE(fd_value);
    CHECK(ok);
}

KnowledgeGraph toy_graph() {
    KnowledgeGraph kg;
    kg.add_entity("alice");
    kg.add_entity("bob");
    kg.add_relation("knows");
    kg.add_triple({0, 0, 1});
    return kg;
}

std::vector<LabeledTriple> random_dataset(int n_entities, int n_relations, std::size_t size,
                                          std::uint64_t seed) {
    Rng rng(seed);
    std::vector<LabeledTriple> data;
    for (std::size_t i = 0; i < size; ++i) {
        data.push_back({static_cast<int>(rng.next_index(static_cast<std::size_t>(n_entities))),
                        static_cast<int>(rng.next_index(static_cast<std::size_t>(n_relations))),
                        static_cast<int>(rng.next_index(static_cast<std::size_t>(n_entities))),
                        static_cast<int>(rng.next_index(2))});
    }
    return data;
}

bool same_dataset(const std::vector<LabeledTriple>& a, const std::vector<LabeledTriple>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].head != b[i].head || a[i].relation != b[i].relation || a[i].tail != b[i].tail ||
            a[i].label != b[i].label) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("negative sampling contract on the toy graph") {
    const KnowledgeGraph kg = toy_graph();
    const auto data = negative_sample(kg, 2, 7);
    REQUIRE(data.size() == 3); // 1 positive + 2 negatives
    CHECK(data[0].label == 1);
    for (std::size_t i = 1; i < data.size(); ++i) {
        CHECK(data[i].label == 0);
        CHECK(!kg.contains(data[i].triple()));
    }
    CHECK(same_dataset(data, negative_sample(kg, 2, 7)));
}

TEST_CASE("negative sampling rejects graphs with no possible corruption") {
    KnowledgeGraph kg;
    kg.add_entity("only");
    kg.add_relation("self");
    kg.add_triple({0, 0, 0});
    CHECK_THROWS_AS(negative_sample(kg, 1, 0), std::runtime_error);
}

TEST_CASE("negative sampling never emits known positives on a denser graph") {
    KnowledgeGraph kg;
    for (const char* name : {"a", "b", "c", "d"}) kg.add_entity(name);
    kg.add_relation("r");
    kg.add_triple({0, 0, 1});
    kg.add_triple({1, 0, 2});
    kg.add_triple({2, 0, 3});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (const LabeledTriple& t : negative_sample(kg, 3, seed)) {
            if (t.label == 0) CHECK(!kg.contains(t.triple()));
        }
    }
}

TEST_CASE("mse loss arithmetic") {
    // n = 1, one layer: RY(-pi/2) after the Hadamard gives |0>, RY(pi/6)
    // gives amplitude 1/2 on |0>, so the overlap-squared score is exactly 1/4.
    const AnsatzSpec spec{1, 1};
    ParameterStore store;
    store.spec = spec;
    store.entity_params = {{-kHalfPi, 0.0}, {kSixthPi, 0.0}};
    store.relation_params = {{0.0, 0.0}}; // identity at n = 1

    const std::vector<LabeledTriple> quarter{{1, 0, 0, 1}};
    CHECK(mse_loss(store, quarter, ScoreScheme::ComputeUncompute) ==
          doctest::Approx(0.5625).epsilon(1e-12));

    // score equals label exactly -> zero loss
    const std::vector<LabeledTriple> perfect{{0, 0, 0, 1}};
    ParameterStore same = store;
    same.entity_params[1] = same.entity_params[0];
    CHECK(mse_loss(same, perfect, ScoreScheme::ComputeUncompute) ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(mse_loss(store, std::vector<LabeledTriple>{}, ScoreScheme::Swap),
                    std::invalid_argument);
}

TEST_CASE("loss bounds per scheme") {
    const AnsatzSpec spec{2, 2};
    const auto data = random_dataset(3, 2, 6, 11);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ParameterStore store = ParameterStore::random_init(spec, 3, 2, seed);
        const double swap_loss = mse_loss(store, data, ScoreScheme::Swap);
        const double cu_loss = mse_loss(store, data, ScoreScheme::ComputeUncompute);
        const double switch_loss = mse_loss(store, data, ScoreScheme::Switch);
        CHECK(swap_loss >= 0.0);
        CHECK(swap_loss <= 1.0);
        CHECK(cu_loss >= 0.0);
        CHECK(cu_loss <= 1.0);
        CHECK(switch_loss >= 0.0);
        CHECK(switch_loss <= 4.0);
    }
}

TEST_CASE("parameter-shift gradients match finite differences") {
    for (int n = 1; n <= 3; ++n) {
        const AnsatzSpec spec{n, 2};
        const ParameterStore store =
            ParameterStore::random_init(spec, 3, 2, 50 + static_cast<std::uint64_t>(n));
        const auto data = random_dataset(3, 2, 4, 60 + static_cast<std::uint64_t>(n));
        const int count = param_count(spec);

        for (ScoreScheme scheme :
             {ScoreScheme::Switch, ScoreScheme::Swap, ScoreScheme::ComputeUncompute}) {
            CAPTURE(scheme_name(scheme));
            CAPTURE(n);
            Rng rng(500 + static_cast<std::uint64_t>(n));
            for (int probe = 0; probe < 6; ++probe) {
                ParamCoord coord;
                coord.kind = rng.next_bernoulli(0.5) ? ParamCoord::Kind::Entity
                                                     : ParamCoord::Kind::Relation;
                coord.owner = static_cast<int>(
                    rng.next_index(coord.kind == ParamCoord::Kind::Entity ? 3 : 2));
                coord.offset = static_cast<int>(rng.next_index(static_cast<std::size_t>(count)));
                const double shift = gradient_parameter_shift(store, data, scheme, coord);
                check_gradient(shift, fd_gradient(store, data, scheme, coord));
            }
        }
    }
}

TEST_CASE("parameter-shift handles an entity on both sides of a triple") {
    const AnsatzSpec spec{2, 2};
    const ParameterStore store = ParameterStore::random_init(spec, 2, 1, 77);
    const std::vector<LabeledTriple> loop{{0, 0, 0, 0}}; // self-loop, label 0
    for (ScoreScheme scheme :
         {ScoreScheme::Switch, ScoreScheme::Swap, ScoreScheme::ComputeUncompute}) {
        CAPTURE(scheme_name(scheme));
        for (int offset = 0; offset < param_count(spec); ++offset) {
            const ParamCoord coord{ParamCoord::Kind::Entity, 0, offset};
            const double shift = gradient_parameter_shift(store, loop, scheme, coord);
            check_gradient(shift, fd_gradient(store, loop, scheme, coord));
        }
    }
}

TEST_CASE("gradient vanishes at an exact minimum") {
    // Equal head and tail vectors with a true identity relation at n = 1:
    // the score is exactly 1 and the label matches.
    const AnsatzSpec spec{1, 2};
    ParameterStore store;
    store.spec = spec;
    store.entity_params = {{0.3, -0.8, 1.1, 0.2}, {0.3, -0.8, 1.1, 0.2}};
    store.relation_params = {{0.0, 0.0, 0.0, 0.0}};
    const std::vector<LabeledTriple> data{{0, 0, 1, 1}};

    for (ScoreScheme scheme : {ScoreScheme::Swap, ScoreScheme::ComputeUncompute}) {
        for (int offset = 0; offset < param_count(spec); ++offset) {
            const double g = gradient_parameter_shift(store, data, scheme,
                                                      {ParamCoord::Kind::Entity, 0, offset});
            CHECK(std::abs(g) < 1e-8);
        }
    }
}

TEST_CASE("gradient of an untouched entity is zero") {
    const AnsatzSpec spec{2, 2};
    const ParameterStore store = ParameterStore::random_init(spec, 3, 1, 5);
    const std::vector<LabeledTriple> data{{0, 0, 1, 1}};
    for (int offset = 0; offset < param_count(spec); ++offset) {
        CHECK(gradient_parameter_shift(store, data, ScoreScheme::ComputeUncompute,
                                       {ParamCoord::Kind::Entity, 2, offset}) == 0.0);
    }
}

TEST_CASE("spsa estimates align with the parameter-shift gradient") {
    const AnsatzSpec spec{2, 2};
    const ParameterStore store = ParameterStore::random_init(spec, 3, 1, 13);
    const auto data = random_dataset(3, 1, 4, 29);
    const ScoreScheme scheme = ScoreScheme::ComputeUncompute;

    std::vector<double> reference;
    for (std::size_t e = 0; e < 3; ++e) {
        for (int off = 0; off < param_count(spec); ++off) {
            reference.push_back(gradient_parameter_shift(
                store, data, scheme, {ParamCoord::Kind::Entity, static_cast<int>(e), off}));
        }
    }
    for (int off = 0; off < param_count(spec); ++off) {
        reference.push_back(
            gradient_parameter_shift(store, data, scheme, {ParamCoord::Kind::Relation, 0, off}));
    }

    std::vector<double> averaged(reference.size(), 0.0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto estimate = gradient_spsa(store, data, scheme, std::nullopt, seed, 0.1);
        for (std::size_t i = 0; i < averaged.size(); ++i) averaged[i] += estimate[i];
    }

    double dot = 0, norm_a = 0, norm_b = 0;
    for (std::size_t i = 0; i < averaged.size(); ++i) {
        dot += averaged[i] * reference[i];
        norm_a += averaged[i] * averaged[i];
        norm_b += reference[i] * reference[i];
    }
    const double cosine = dot / std::sqrt(norm_a * norm_b);
    CHECK(cosine > 0.5);

    CHECK(gradient_spsa(store, data, scheme, std::nullopt, 3, 0.1) ==
          gradient_spsa(store, data, scheme, std::nullopt, 3, 0.1));
    CHECK_THROWS_AS(gradient_spsa(store, data, scheme, std::nullopt, 3, 0.0),
                    std::invalid_argument);
}

TEST_CASE("toy training converges in exact mode") {
    const KnowledgeGraph kg = toy_graph();
    TrainConfig config;
    config.ansatz = {1, 2};
    config.scheme = ScoreScheme::ComputeUncompute;
    config.epochs = 500;
    config.seed = 0;

    const TrainResult result = train(kg, config);
    REQUIRE(result.loss_history.size() == 500);
    for (double loss : result.loss_history) CHECK(std::isfinite(loss));
    CHECK(result.loss_history.back() < 0.01);
}

TEST_CASE("training is a pure function of graph and config") {
    const KnowledgeGraph kg = toy_graph();
    TrainConfig config;
    config.ansatz = {1, 2};
    config.epochs = 40;
    config.seed = 9;
    const TrainResult a = train(kg, config);
    const TrainResult b = train(kg, config);
    CHECK(a.loss_history == b.loss_history);
    CHECK(a.params.entity_params == b.params.entity_params);
    CHECK(a.params.relation_params == b.params.relation_params);
}

TEST_CASE("one small sgd step never increases the exact loss") {
    const AnsatzSpec spec{2, 2};
    for (std::uint64_t instance = 0; instance < 5; ++instance) {
        const auto data = random_dataset(3, 2, 5, 200 + instance);
        const ParameterStore init = ParameterStore::random_init(spec, 3, 2, 300 + instance);
        const double before = mse_loss(init, data, ScoreScheme::ComputeUncompute);

        TrainConfig config;
        config.ansatz = spec;
        config.scheme = ScoreScheme::ComputeUncompute;
        config.optimizer = OptimizerKind::Sgd;
        config.learning_rate = 1e-3;
        config.epochs = 1;
        const TrainResult stepped = train_on(data, 3, 2, config, init);
        CHECK(stepped.loss_history[0] <= before + 1e-9);
    }
}

TEST_CASE("train propagates negative-sampling failures") {
    KnowledgeGraph kg; // one entity, fully connected: no corruption exists
    kg.add_entity("only");
    kg.add_relation("self");
    kg.add_triple({0, 0, 0});
    TrainConfig config;
    config.ansatz = {1, 1};
    config.epochs = 3;
    CHECK_THROWS_AS(train(kg, config), std::runtime_error);
}

TEST_CASE("contradictory labels leave the irreducible loss floor") {
    // The same triple labeled 1 and 0: no score beats the midpoint, so the
    // loss cannot drop below ((d-1)^2 + d^2)/2 minimized at d = 1/2, i.e. 1/4.
    const std::vector<LabeledTriple> contradictory{{0, 0, 1, 1}, {0, 0, 1, 0}};
    TrainConfig config;
    config.ansatz = {1, 2};
    config.epochs = 200;
    config.learning_rate = 0.05;
    const TrainResult result = train_on(contradictory, 2, 1, config);
    CHECK(result.loss_history.back() >= 0.25 - 1e-9);
    CHECK(result.loss_history.back() < 0.30); // training still settles near it
}

TEST_CASE("mini-batch training runs and stays deterministic") {
    KnowledgeGraph kg;
    for (const char* name : {"a", "b", "c", "d"}) kg.add_entity(name);
    kg.add_relation("r");
    kg.add_triple({0, 0, 1});
    kg.add_triple({1, 0, 2});
    kg.add_triple({2, 0, 3});

    TrainConfig config;
    config.ansatz = {1, 2};
    config.epochs = 10;
    config.batch_size = 2;
    config.seed = 4;
    const TrainResult a = train(kg, config);
    const TrainResult b = train(kg, config);
    CHECK(a.loss_history == b.loss_history);
}

TEST_CASE("sampled-mode loss is deterministic per base seed") {
    const AnsatzSpec spec{1, 2};
    const ParameterStore store = ParameterStore::random_init(spec, 2, 1, 3);
    const std::vector<LabeledTriple> data{{0, 0, 1, 1}, {1, 0, 0, 0}};
    const SampledMode mode{512, 77};
    CHECK(mse_loss(store, data, ScoreScheme::Swap, mode) ==
          mse_loss(store, data, ScoreScheme::Swap, mode));
    CHECK(dataset_score(store, data[1], ScoreScheme::Swap, mode, 1) ==
          dataset_score(store, data[1], ScoreScheme::Swap, mode, 1));
}

TEST_CASE("config validation") {
    TrainConfig config;
    config.ansatz = {1, 1};

    TrainConfig bad = config;
    bad.learning_rate = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = config;
    bad.epochs = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = config;
    bad.shots = 128; // sampled mode with parameter-shift gradients
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = config;
    bad.shots = 128;
    bad.gradient_method = GradientMethod::Spsa;
    CHECK_NOTHROW(bad.validate());
}
