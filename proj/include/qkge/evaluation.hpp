#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qkge/kg.hpp"
#include "qkge/scoring.hpp"
#include "qkge/training.hpp"

namespace qkge {

enum class EvalProtocol { Raw, Filtered };

std::string protocol_name(EvalProtocol protocol);

struct EvalReport {
    double mrr = 0.0;
    std::map<int, double> hits_at; // keys 1, 3, 10
    EvalProtocol protocol = EvalProtocol::Raw;
    int n_queries = 0;
};

// Rank of `true_index` when candidates are ordered by descending score. Tied
// blocks receive the mean rank of the block, so the result may be
// fractional (four equal scores rank 2.5 each).
double rank_from_scores(std::span<const double> scores, std::size_t true_index);

// Rank of the true tail among all entities substituted as tail, scored in
// exact mode. The filtered protocol drops candidates that form other known
// positives of the graph.
double rank_tail(const ParameterStore& params, int head, int relation, int true_tail,
                 const KnowledgeGraph& kg, EvalProtocol protocol, ScoreScheme scheme);
double rank_head(const ParameterStore& params, int true_head, int relation, int tail,
                 const KnowledgeGraph& kg, EvalProtocol protocol, ScoreScheme scheme);

// MRR and hits@{1,3,10} over head- and tail-replacement queries (two queries
// per test triple).
EvalReport evaluate(const ParameterStore& params, std::span<const Triple> test_triples,
                    const KnowledgeGraph& kg, EvalProtocol protocol, ScoreScheme scheme);

enum class RelationPattern { Symmetric, Antisymmetric, Inverse, Composition };

std::string pattern_name(RelationPattern pattern);

// Fixed desk-scale fixture: a tiny graph whose training set teaches the
// pattern and whose held-out probes witness whether it transferred. Held-out
// triples never appear in the training data.
struct PatternCase {
    RelationPattern pattern = RelationPattern::Symmetric;
    KnowledgeGraph kg;
    std::vector<LabeledTriple> train_data; // positives plus explicit negatives
    std::vector<LabeledTriple> held_out;   // label 1 = expect high, 0 = expect low
};

PatternCase make_pattern_case(RelationPattern pattern);

struct ProbeScore {
    Triple triple;
    int expected_label = 1;
    bool held_out = true;
    double score = 0.0;
};

struct PatternCheckResult {
    double final_loss = 0.0;
    std::vector<ProbeScore> table; // held-out probes plus their trained counterparts
};

// Trains on the pattern fixture and scores the probe table in exact mode.
PatternCheckResult pattern_check(RelationPattern pattern, ScoreScheme scheme,
                                 const TrainConfig& config);

} // namespace qkge
