// qkge command line: train embeddings, evaluate link prediction, score
// single triples and compare the three scoring schemes.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qkge/checkpoint.hpp"
#include "qkge/evaluation.hpp"
#include "qkge/kg.hpp"
#include "qkge/noise.hpp"
#include "qkge/resources.hpp"
#include "qkge/rng.hpp"
#include "qkge/scoring.hpp"
#include "qkge/training.hpp"

namespace {

using nlohmann::json;
using namespace qkge;

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": malformed JSON: " + e.what());
    }
}

// JSON config supplies values for options not given on the command line;
// explicit flags win.
template <typename T>
void apply_json(const json& cfg, const char* key, const CLI::Option* opt, T& var) {
    if (opt != nullptr && opt->count() > 0) return;
    if (!cfg.contains(key)) return;
    cfg.at(key).get_to(var);
}

struct TrainCli {
    std::string data_path;
    std::string out_dir = "run";
    std::string config_path;
    std::string scheme = "compute-uncompute";
    int n_qubits = 2;
    int n_layers = 2;
    double learning_rate = 0.01;
    int epochs = 100;
    int batch_size = 0;
    int negatives = 1;
    std::uint64_t seed = 0;
    std::string mode = "exact";
    std::uint64_t shots = 1024;
    std::string gradient = "parameter-shift";
    std::string optimizer = "adam";
};

GradientMethod gradient_from_name(const std::string& name) {
    if (name == "parameter-shift") return GradientMethod::ParameterShift;
    if (name == "spsa") return GradientMethod::Spsa;
    throw std::invalid_argument("unknown gradient method '" + name + "'");
}

OptimizerKind optimizer_from_name(const std::string& name) {
    if (name == "adam") return OptimizerKind::Adam;
    if (name == "sgd") return OptimizerKind::Sgd;
    throw std::invalid_argument("unknown optimizer '" + name + "'");
}

EvalProtocol protocol_from_name(const std::string& name) {
    if (name == "raw") return EvalProtocol::Raw;
    if (name == "filtered") return EvalProtocol::Filtered;
    throw std::invalid_argument("unknown protocol '" + name + "'");
}

ScoreMode mode_from_name(const std::string& name, bool* sampled) {
    if (name == "exact") { *sampled = false; return ScoreMode::Exact; }
    if (name == "sampled") { *sampled = true; return ScoreMode::Sampled; }
    throw std::invalid_argument("unknown mode '" + name + "' (expected exact or sampled)");
}

json train_config_json(const TrainCli& cli) {
    return json{{"data", cli.data_path},
                {"scheme", cli.scheme},
                {"n_qubits", cli.n_qubits},
                {"n_layers", cli.n_layers},
                {"learning_rate", cli.learning_rate},
                {"epochs", cli.epochs},
                {"batch_size", cli.batch_size},
                {"negatives", cli.negatives},
                {"seed", cli.seed},
                {"mode", cli.mode},
                {"shots", cli.shots},
                {"gradient", cli.gradient},
                {"optimizer", cli.optimizer}};
}

int run_train(const TrainCli& cli) {
    if (cli.data_path.empty()) throw std::invalid_argument("--data is required");

    IngestReport ingest;
    const KnowledgeGraph kg = ingest_triples(cli.data_path, &ingest);
    if (ingest.n_duplicates > 0) {
        std::cerr << "warning: dropped " << ingest.n_duplicates << " duplicate triple(s)\n";
    }

    bool sampled = false;
    mode_from_name(cli.mode, &sampled);

    TrainConfig config;
    config.ansatz = {cli.n_qubits, cli.n_layers};
    config.scheme = scheme_from_name(cli.scheme);
    config.learning_rate = cli.learning_rate;
    config.epochs = cli.epochs;
    config.batch_size = cli.batch_size;
    config.negatives_per_positive = cli.negatives;
    config.seed = cli.seed;
    if (sampled) config.shots = cli.shots;
    config.gradient_method = gradient_from_name(cli.gradient);
    config.optimizer = optimizer_from_name(cli.optimizer);
    config.validate();

    const auto start = std::chrono::steady_clock::now();
    const TrainResult result = train(kg, config);
    const double wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const json config_record = train_config_json(cli);

    Checkpoint cp = make_checkpoint(kg, result.params);
    cp.config_hash = fnv1a_hex(config_record.dump());
    cp.epochs = cli.epochs;
    cp.final_loss = result.loss_history.back();
    cp.scheme = cli.scheme;
    cp.seed = cli.seed;

    std::ostringstream loss_csv;
    loss_csv << "epoch,loss\n";
    for (std::size_t e = 0; e < result.loss_history.size(); ++e) {
        loss_csv << e << "," << format_double(result.loss_history[e]) << "\n";
    }

    json meta = config_record;
    meta["final_loss"] = result.loss_history.back();
    meta["duplicate_triples_dropped"] = ingest.n_duplicates;
    meta["config_hash"] = cp.config_hash;
    meta["wall_time_seconds"] = wall_seconds;

    save_checkpoint(cp, cli.out_dir + "/checkpoint.json");
    atomic_write_file(cli.out_dir + "/loss.csv", loss_csv.str());
    atomic_write_file(cli.out_dir + "/run_meta.json", meta.dump(2) + "\n");

    std::cout << "trained " << kg.n_entities() << " entities, " << kg.n_relations()
              << " relations for " << cli.epochs << " epochs; final loss "
              << format_double(result.loss_history.back()) << "\n";
    return 0;
}

struct EvaluateCli {
    std::string checkpoint_path;
    std::string test_path;
    std::string data_path; // optional, extends the filter set
    std::string out_dir = "eval";
    std::string config_path;
    std::string protocol = "raw";
    std::string scheme = "compute-uncompute";
};

// Test triples resolved against the checkpoint dictionaries; unknown names
// are skipped with a warning.
std::vector<Triple> resolve_test_triples(const std::string& path, const KnowledgeGraph& dict,
                                         int* skipped) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read test file: " + path);
    std::vector<Triple> triples;
    std::string line;
    int line_number = 0;
    *skipped = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string head, relation, tail;
        if (!std::getline(fields, head, '\t') || !std::getline(fields, relation, '\t') ||
            !std::getline(fields, tail, '\t') || head.empty() || relation.empty() ||
            tail.empty()) {
            throw std::invalid_argument(path + ": line " + std::to_string(line_number) +
                                        ": expected 3 tab-separated fields");
        }
        const auto h = dict.entity_id(head);
        const auto r = dict.relation_id(relation);
        const auto t = dict.entity_id(tail);
        if (!h || !r || !t) {
            std::cerr << "warning: skipping test triple with unknown name at line "
                      << line_number << "\n";
            ++*skipped;
            continue;
        }
        triples.push_back({*h, *r, *t});
    }
    return triples;
}

int run_evaluate(const EvaluateCli& cli) {
    const Checkpoint cp = load_checkpoint(cli.checkpoint_path);
    const ParameterStore params = checkpoint_params(cp);
    KnowledgeGraph kg = checkpoint_dictionaries(cp);

    int skipped = 0;
    const std::vector<Triple> test = resolve_test_triples(cli.test_path, kg, &skipped);
    if (test.empty()) {
        throw std::invalid_argument("no usable test triples (all unknown or file empty)");
    }

    // Known positives for the filtered protocol: optional training file plus
    // the test set itself.
    if (!cli.data_path.empty()) {
        IngestReport ignore;
        const KnowledgeGraph train_kg = ingest_triples(cli.data_path, &ignore);
        for (const Triple& t : train_kg.triples()) {
            const auto h = kg.entity_id(train_kg.entities()[static_cast<std::size_t>(t.head)]);
            const auto r =
                kg.relation_id(train_kg.relations()[static_cast<std::size_t>(t.relation)]);
            const auto tl = kg.entity_id(train_kg.entities()[static_cast<std::size_t>(t.tail)]);
            if (h && r && tl) kg.add_triple({*h, *r, *tl});
        }
    }
    for (const Triple& t : test) kg.add_triple(t);

    const EvalProtocol protocol = protocol_from_name(cli.protocol);
    const ScoreScheme scheme = scheme_from_name(cli.scheme);
    const EvalReport report = evaluate(params, test, kg, protocol, scheme);

    json out;
    out["mrr"] = report.mrr;
    out["hits_at"] = {{"1", report.hits_at.at(1)}, {"3", report.hits_at.at(3)},
                      {"10", report.hits_at.at(10)}};
    out["protocol"] = protocol_name(protocol);
    out["scheme"] = scheme_name(scheme);
    out["n_queries"] = report.n_queries;
    out["skipped_test_triples"] = skipped;

    std::ostringstream csv;
    csv << "mrr,hits1,hits3,hits10,protocol,scheme,n_queries,skipped\n";
    csv << format_double(report.mrr) << "," << format_double(report.hits_at.at(1)) << ","
        << format_double(report.hits_at.at(3)) << "," << format_double(report.hits_at.at(10))
        << "," << protocol_name(protocol) << "," << scheme_name(scheme) << ","
        << report.n_queries << "," << skipped << "\n";

    atomic_write_file(cli.out_dir + "/eval.json", out.dump(2) + "\n");
    atomic_write_file(cli.out_dir + "/eval.csv", csv.str());

    std::cout << "mrr " << format_double(report.mrr) << " hits@1 "
              << format_double(report.hits_at.at(1)) << " over " << report.n_queries
              << " queries\n";
    return 0;
}

struct ScoreCli {
    std::string checkpoint_path;
    std::string head, relation, tail;
    std::string scheme = "compute-uncompute";
    std::string mode = "exact";
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
};

int run_score(const ScoreCli& cli) {
    const Checkpoint cp = load_checkpoint(cli.checkpoint_path);
    const ParameterStore params = checkpoint_params(cp);
    const KnowledgeGraph dict = checkpoint_dictionaries(cp);

    const auto h = dict.entity_id(cli.head);
    const auto r = dict.relation_id(cli.relation);
    const auto t = dict.entity_id(cli.tail);
    if (!h) throw std::invalid_argument("unknown entity '" + cli.head + "'");
    if (!r) throw std::invalid_argument("unknown relation '" + cli.relation + "'");
    if (!t) throw std::invalid_argument("unknown entity '" + cli.tail + "'");

    const ScoreScheme scheme = scheme_from_name(cli.scheme);
    bool sampled = false;
    mode_from_name(cli.mode, &sampled);

    const ParamVector& theta_h = params.entity_params[static_cast<std::size_t>(*h)];
    const ParamVector& theta_r = params.relation_params[static_cast<std::size_t>(*r)];
    const ParamVector& theta_t = params.entity_params[static_cast<std::size_t>(*t)];

    const ScoreResult result =
        sampled ? estimate_score(scheme, params.spec, theta_h, theta_r, theta_t, cli.shots,
                                 cli.seed)
                : exact_score(scheme, params.spec, theta_h, theta_r, theta_t);
    std::cout << format_double(result.value) << "\n";
    return 0;
}

struct CompareCli {
    std::string out_dir = "compare";
    std::string config_path;
    int n_qubits = 3; // resources.csv row size
    int n_min = 1;
    int n_max = 4;
    int n_layers = 2;
    int trials = 50;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::vector<double> readout_fidelities{0.95, 0.99};
    std::vector<double> two_qubit_errors{0.0, 0.005, 0.01};
};

void append_sweep_rows(std::ostringstream& csv, const std::vector<SweepRow>& rows) {
    for (const SweepRow& row : rows) {
        csv << scheme_name(row.scheme) << "," << row.n << "," << format_double(row.f_read) << ","
            << format_double(row.p2) << "," << row.shots << ","
            << format_double(row.mean_abs_bias) << "," << format_double(row.std_bias) << ","
            << format_double(row.mean_exact) << "," << format_double(row.mean_noisy) << "\n";
    }
}

int run_compare(const CompareCli& cli) {
    const auto start = std::chrono::steady_clock::now();

    // Scheme equivalence against the inner-product reference.
    std::ostringstream equivalence;
    equivalence << "n,trials,max_abs_swap_minus_cu,max_abs_swap_minus_oracle,"
                   "max_abs_cu_minus_oracle,max_abs_switch_minus_re_oracle\n";
    for (int n = cli.n_min; n <= cli.n_max; ++n) {
        const AnsatzSpec spec{n, cli.n_layers};
        const int count = param_count(spec);
        double max_swap_cu = 0, max_swap_oracle = 0, max_cu_oracle = 0, max_switch_oracle = 0;
        for (int trial = 0; trial < cli.trials; ++trial) {
            Rng rng(mix_seed(cli.seed, static_cast<std::uint64_t>(n),
                             static_cast<std::uint64_t>(trial)));
            ParamVector theta_h(static_cast<std::size_t>(count));
            ParamVector theta_t(static_cast<std::size_t>(count));
            ParamVector theta_r(static_cast<std::size_t>(count));
            for (double& x : theta_h) x = rng.next_angle();
            for (double& x : theta_r) x = rng.next_angle();
            for (double& x : theta_t) x = rng.next_angle();

            const complexd z = oracle_inner_product(spec, theta_h, theta_r, theta_t);
            const double swap = exact_score(ScoreScheme::Swap, spec, theta_h, theta_r, theta_t).value;
            const double cu =
                exact_score(ScoreScheme::ComputeUncompute, spec, theta_h, theta_r, theta_t).value;
            const double sw =
                exact_score(ScoreScheme::Switch, spec, theta_h, theta_r, theta_t).value;
            max_swap_cu = std::max(max_swap_cu, std::abs(swap - cu));
            max_swap_oracle = std::max(max_swap_oracle, std::abs(swap - std::norm(z)));
            max_cu_oracle = std::max(max_cu_oracle, std::abs(cu - std::norm(z)));
            max_switch_oracle = std::max(max_switch_oracle, std::abs(sw - z.real()));
        }
        equivalence << n << "," << cli.trials << "," << format_double(max_swap_cu) << ","
                    << format_double(max_swap_oracle) << "," << format_double(max_cu_oracle)
                    << "," << format_double(max_switch_oracle) << "\n";
    }

    std::ostringstream resources;
    resources << "scheme,n_qubits,total_gates,two_qubit_gates,depth,decomposition\n";
    for (ScoreScheme scheme :
         {ScoreScheme::Switch, ScoreScheme::Swap, ScoreScheme::ComputeUncompute}) {
        const ResourceReport report = estimate_resources(scheme, {cli.n_qubits, cli.n_layers});
        resources << scheme_name(scheme) << "," << report.n_qubits_logical << ","
                  << report.total_gates << "," << report.two_qubit_gates << "," << report.depth
                  << "," << report.decomposition << "\n";
    }

    // Noise sweep over the configured grid, then the perfect-overlap rows
    // whose compute-uncompute family follows the readout-fidelity power law.
    std::ostringstream noise;
    noise << "scheme,n,F_read,p2,shots,mean_abs_bias,std_bias,mean_exact,mean_noisy\n";
    SweepConfig sweep;
    sweep.n_min = cli.n_min;
    sweep.n_max = cli.n_max;
    sweep.n_layers = cli.n_layers;
    sweep.trials = cli.trials;
    sweep.seed = cli.seed;
    sweep.shots = cli.shots;
    for (double f : cli.readout_fidelities) {
        for (double p2 : cli.two_qubit_errors) {
            sweep.policy = ThetaPolicy::Random;
            append_sweep_rows(noise, scheme_bias_sweep(sweep, NoiseModel{f, p2}));
        }
    }
    for (double f : cli.readout_fidelities) {
        sweep.policy = ThetaPolicy::PerfectOverlap;
        append_sweep_rows(noise, scheme_bias_sweep(sweep, NoiseModel{f, 0.0}));
    }

    const double wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json meta{{"n_qubits", cli.n_qubits},
              {"n_min", cli.n_min},
              {"n_max", cli.n_max},
              {"n_layers", cli.n_layers},
              {"trials", cli.trials},
              {"seed", cli.seed},
              {"shots", cli.shots},
              {"readout_fidelities", cli.readout_fidelities},
              {"two_qubit_errors", cli.two_qubit_errors},
              {"decomposition", kDecompositionName},
              {"wall_time_seconds", wall_seconds}};

    atomic_write_file(cli.out_dir + "/equivalence.csv", equivalence.str());
    atomic_write_file(cli.out_dir + "/resources.csv", resources.str());
    atomic_write_file(cli.out_dir + "/noise.csv", noise.str());
    atomic_write_file(cli.out_dir + "/meta.json", meta.dump(2) + "\n");

    std::cout << "wrote equivalence.csv, resources.csv, noise.csv to " << cli.out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"variational quantum knowledge graph embeddings"};
    app.require_subcommand(1);

    TrainCli train_cli;
    EvaluateCli eval_cli;
    ScoreCli score_cli;
    CompareCli compare_cli;

    CLI::App* train_cmd = app.add_subcommand("train", "train embeddings on a triples file");
    auto* t_data = train_cmd->add_option("--data", train_cli.data_path, "tab-separated triples");
    auto* t_out = train_cmd->add_option("--out", train_cli.out_dir, "output directory");
    train_cmd->add_option("--config", train_cli.config_path, "JSON config (flags override)");
    auto* t_scheme = train_cmd->add_option("--scheme", train_cli.scheme,
                                           "switch | swap | compute-uncompute");
    auto* t_nq = train_cmd->add_option("--n-qubits", train_cli.n_qubits, "entity register size");
    auto* t_nl = train_cmd->add_option("--layers", train_cli.n_layers, "ansatz layers");
    auto* t_lr = train_cmd->add_option("--lr", train_cli.learning_rate, "learning rate");
    auto* t_ep = train_cmd->add_option("--epochs", train_cli.epochs, "training epochs");
    auto* t_bs = train_cmd->add_option("--batch-size", train_cli.batch_size, "0 = full batch");
    auto* t_neg = train_cmd->add_option("--negatives", train_cli.negatives,
                                        "corruptions per positive");
    auto* t_seed = train_cmd->add_option("--seed", train_cli.seed, "global seed");
    auto* t_mode = train_cmd->add_option("--mode", train_cli.mode, "exact | sampled");
    auto* t_shots = train_cmd->add_option("--shots", train_cli.shots, "shots in sampled mode");
    auto* t_grad = train_cmd->add_option("--gradient", train_cli.gradient,
                                         "parameter-shift | spsa");
    auto* t_opt = train_cmd->add_option("--optimizer", train_cli.optimizer, "adam | sgd");

    CLI::App* eval_cmd = app.add_subcommand("evaluate", "link-prediction metrics");
    eval_cmd->add_option("--checkpoint", eval_cli.checkpoint_path, "trained checkpoint")
        ->required();
    eval_cmd->add_option("--test", eval_cli.test_path, "test triples")->required();
    eval_cmd->add_option("--data", eval_cli.data_path,
                         "training triples (extends the filter set)");
    eval_cmd->add_option("--out", eval_cli.out_dir, "output directory");
    eval_cmd->add_option("--config", eval_cli.config_path, "JSON config (flags override)");
    auto* e_protocol = eval_cmd->add_option("--protocol", eval_cli.protocol, "raw | filtered");
    auto* e_scheme = eval_cmd->add_option("--scheme", eval_cli.scheme,
                                          "switch | swap | compute-uncompute");

    CLI::App* score_cmd = app.add_subcommand("score", "score one triple");
    score_cmd->add_option("--checkpoint", score_cli.checkpoint_path, "trained checkpoint")
        ->required();
    score_cmd->add_option("--head", score_cli.head, "head entity name")->required();
    score_cmd->add_option("--relation", score_cli.relation, "relation name")->required();
    score_cmd->add_option("--tail", score_cli.tail, "tail entity name")->required();
    score_cmd->add_option("--scheme", score_cli.scheme, "switch | swap | compute-uncompute");
    score_cmd->add_option("--mode", score_cli.mode, "exact | sampled");
    score_cmd->add_option("--shots", score_cli.shots, "shots in sampled mode");
    score_cmd->add_option("--seed", score_cli.seed, "sampling seed");

    CLI::App* compare_cmd =
        app.add_subcommand("compare-schemes", "equivalence, resources and noise analyses");
    compare_cmd->add_option("--out", compare_cli.out_dir, "output directory");
    compare_cmd->add_option("--config", compare_cli.config_path, "JSON config (flags override)");
    auto* c_nq = compare_cmd->add_option("--n-qubits", compare_cli.n_qubits,
                                         "register size for resources.csv");
    auto* c_nmin = compare_cmd->add_option("--n-min", compare_cli.n_min, "sweep range start");
    auto* c_nmax = compare_cmd->add_option("--n-max", compare_cli.n_max, "sweep range end");
    auto* c_nl = compare_cmd->add_option("--layers", compare_cli.n_layers, "ansatz layers");
    auto* c_trials = compare_cmd->add_option("--trials", compare_cli.trials, "draws per cell");
    auto* c_seed = compare_cmd->add_option("--seed", compare_cli.seed, "global seed");
    auto* c_shots = compare_cmd->add_option("--shots", compare_cli.shots,
                                            "noise sweep shots (0 = exact)");
    auto* c_f = compare_cmd->add_option("--readout-fidelities", compare_cli.readout_fidelities,
                                        "F_read grid");
    auto* c_p2 = compare_cmd->add_option("--two-qubit-errors", compare_cli.two_qubit_errors,
                                         "p2 grid");

    try {
        app.parse(argc, argv);

        if (train_cmd->parsed()) {
            if (!train_cli.config_path.empty()) {
                const json cfg = load_config_file(train_cli.config_path);
                apply_json(cfg, "data", t_data, train_cli.data_path);
                apply_json(cfg, "out", t_out, train_cli.out_dir);
                apply_json(cfg, "scheme", t_scheme, train_cli.scheme);
                apply_json(cfg, "n_qubits", t_nq, train_cli.n_qubits);
                apply_json(cfg, "n_layers", t_nl, train_cli.n_layers);
                apply_json(cfg, "learning_rate", t_lr, train_cli.learning_rate);
                apply_json(cfg, "epochs", t_ep, train_cli.epochs);
                apply_json(cfg, "batch_size", t_bs, train_cli.batch_size);
                apply_json(cfg, "negatives", t_neg, train_cli.negatives);
                apply_json(cfg, "seed", t_seed, train_cli.seed);
                apply_json(cfg, "mode", t_mode, train_cli.mode);
                apply_json(cfg, "shots", t_shots, train_cli.shots);
                apply_json(cfg, "gradient", t_grad, train_cli.gradient);
                apply_json(cfg, "optimizer", t_opt, train_cli.optimizer);
            }
            return run_train(train_cli);
        }
        if (eval_cmd->parsed()) {
            if (!eval_cli.config_path.empty()) {
                const json cfg = load_config_file(eval_cli.config_path);
                apply_json(cfg, "protocol", e_protocol, eval_cli.protocol);
                apply_json(cfg, "scheme", e_scheme, eval_cli.scheme);
            }
            return run_evaluate(eval_cli);
        }
        if (score_cmd->parsed()) return run_score(score_cli);
        if (compare_cmd->parsed()) {
            if (!compare_cli.config_path.empty()) {
                const json cfg = load_config_file(compare_cli.config_path);
                apply_json(cfg, "n_qubits", c_nq, compare_cli.n_qubits);
                apply_json(cfg, "n_min", c_nmin, compare_cli.n_min);
                apply_json(cfg, "n_max", c_nmax, compare_cli.n_max);
                apply_json(cfg, "n_layers", c_nl, compare_cli.n_layers);
                apply_json(cfg, "trials", c_trials, compare_cli.trials);
                apply_json(cfg, "seed", c_seed, compare_cli.seed);
                apply_json(cfg, "shots", c_shots, compare_cli.shots);
                apply_json(cfg, "readout_fidelities", c_f, compare_cli.readout_fidelities);
                apply_json(cfg, "two_qubit_errors", c_p2, compare_cli.two_qubit_errors);
            }
            return run_compare(compare_cli);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
