#include "qkge/evaluation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qkge {

namespace {

double query_rank(const ParameterStore& params, const Triple& query, bool replace_tail,
                  const KnowledgeGraph& kg, EvalProtocol protocol, ScoreScheme scheme) {
    const int n_entities = kg.n_entities();
    const int true_entity = replace_tail ? query.tail : query.head;

    std::vector<double> scores;
    scores.reserve(static_cast<std::size_t>(n_entities));
    std::size_t true_position = 0;
    for (int candidate = 0; candidate < n_entities; ++candidate) {
        Triple probe = query;
        (replace_tail ? probe.tail : probe.head) = candidate;
        if (protocol == EvalProtocol::Filtered && candidate != true_entity &&
            kg.contains(probe)) {
            continue; // a competing known positive
        }
        if (candidate == true_entity) true_position = scores.size();
        const LabeledTriple lt{probe.head, probe.relation, probe.tail, 1};
        scores.push_back(dataset_score(params, lt, scheme));
    }
    return rank_from_scores(scores, true_position);
}

void add_names(KnowledgeGraph& kg, std::initializer_list<const char*> entities,
               std::initializer_list<const char*> relations) {
    for (const char* e : entities) kg.add_entity(e);
    for (const char* r : relations) kg.add_relation(r);
}

} // namespace

std::string protocol_name(EvalProtocol protocol) {
    return protocol == EvalProtocol::Raw ? "raw" : "filtered";
}

std::string pattern_name(RelationPattern pattern) {
    switch (pattern) {
    case RelationPattern::Symmetric: return "symmetric";
    case RelationPattern::Antisymmetric: return "antisymmetric";
    case RelationPattern::Inverse: return "inverse";
    case RelationPattern::Composition: return "composition";
    }
    return "?";
}

double rank_from_scores(std::span<const double> scores, std::size_t true_index) {
    if (scores.empty()) throw std::invalid_argument("ranking over an empty candidate set");
    if (true_index >= scores.size()) throw std::invalid_argument("true index out of range");
    const double reference = scores[true_index];
    std::size_t strictly_better = 0;
    std::size_t tied = 0;
    for (double s : scores) {
        if (s > reference) ++strictly_better;
        else if (s == reference) ++tied;
    }
    return static_cast<double>(strictly_better) + (static_cast<double>(tied) + 1.0) / 2.0;
}

double rank_tail(const ParameterStore& params, int head, int relation, int true_tail,
                 const KnowledgeGraph& kg, EvalProtocol protocol, ScoreScheme scheme) {
    if (head < 0 || head >= kg.n_entities() || true_tail < 0 || true_tail >= kg.n_entities() ||
        relation < 0 || relation >= kg.n_relations()) {
        throw std::invalid_argument("query indices out of range");
    }
    return query_rank(params, {head, relation, true_tail}, true, kg, protocol, scheme);
}

double rank_head(const ParameterStore& params, int true_head, int relation, int tail,
                 const KnowledgeGraph& kg, EvalProtocol protocol, ScoreScheme scheme) {
    if (true_head < 0 || true_head >= kg.n_entities() || tail < 0 || tail >= kg.n_entities() ||
        relation < 0 || relation >= kg.n_relations()) {
        throw std::invalid_argument("query indices out of range");
    }
    return query_rank(params, {true_head, relation, tail}, false, kg, protocol, scheme);
}

EvalReport evaluate(const ParameterStore& params, std::span<const Triple> test_triples,
                    const KnowledgeGraph& kg, EvalProtocol protocol, ScoreScheme scheme) {
    if (test_triples.empty()) throw std::invalid_argument("evaluating an empty test set");

    EvalReport report;
    report.protocol = protocol;
    double reciprocal_sum = 0.0;
    std::map<int, int> hit_counts{{1, 0}, {3, 0}, {10, 0}};
    for (const Triple& t : test_triples) {
        for (bool replace_tail : {true, false}) {
            const double rank = replace_tail
                                    ? rank_tail(params, t.head, t.relation, t.tail, kg, protocol, scheme)
                                    : rank_head(params, t.head, t.relation, t.tail, kg, protocol, scheme);
            reciprocal_sum += 1.0 / rank;
            for (auto& [k, count] : hit_counts) {
                if (rank <= static_cast<double>(k)) ++count;
            }
            ++report.n_queries;
        }
    }
    report.mrr = reciprocal_sum / static_cast<double>(report.n_queries);
    for (const auto& [k, count] : hit_counts) {
        report.hits_at[k] = static_cast<double>(count) / static_cast<double>(report.n_queries);
    }
    return report;
}

PatternCase make_pattern_case(RelationPattern pattern) {
    PatternCase pc;
    pc.pattern = pattern;
    KnowledgeGraph& kg = pc.kg;

    // Fixture shorthand: positives go into both the graph and the training
    // data; negatives only into the training data. Held-out probes are the
    // transfer instances and stay out of training entirely.
    auto pos = [&](int h, int r, int t) {
        kg.add_triple({h, r, t});
        pc.train_data.push_back({h, r, t, 1});
    };
    auto neg = [&](int h, int r, int t) { pc.train_data.push_back({h, r, t, 0}); };

    switch (pattern) {
    case RelationPattern::Symmetric: {
        // Pairs trained in both directions teach the involution; (e, f) is
        // trained one way only and probed in reverse. Three two-way pairs
        // matter: their subspaces are generically non-orthogonal, which pins
        // the relative phases of the learned unitary and makes the reversed
        // probe follow from the involution rather than from luck.
        add_names(kg, {"a", "b", "c", "d", "g", "h", "e", "f"}, {"r"});
        pos(0, 0, 1); pos(1, 0, 0);
        pos(2, 0, 3); pos(3, 0, 2);
        pos(4, 0, 5); pos(5, 0, 4);
        pos(6, 0, 7);
        neg(0, 0, 2); neg(2, 0, 0);
        neg(1, 0, 3); neg(3, 0, 1);
        pc.held_out.push_back({7, 0, 6, 1});
        break;
    }
    case RelationPattern::Antisymmetric: {
        // A directed 4-cycle with three reversed pairs trained negative; the
        // fourth reversal is the held-out probe and must stay low.
        add_names(kg, {"a", "b", "c", "d"}, {"r"});
        pos(0, 0, 1); pos(1, 0, 2); pos(2, 0, 3); pos(3, 0, 0);
        neg(1, 0, 0); neg(2, 0, 1); neg(3, 0, 2);
        pc.held_out.push_back({0, 0, 3, 0});
        break;
    }
    case RelationPattern::Inverse: {
        // r1 walks a closed five-cycle a->b->c->d->e->a and r2 is trained as
        // its inverse on four of the five edges; the closing edge is probed
        // through r2 only. Five states in a four-dimensional space cannot be
        // pairwise orthogonal, which pins the learned unitaries well enough
        // for the inverse to transfer.
        add_names(kg, {"a", "b", "c", "d", "e"}, {"r1", "r2"});
        pos(0, 0, 1); pos(1, 1, 0);
        pos(1, 0, 2); pos(2, 1, 1);
        pos(2, 0, 3); pos(3, 1, 2);
        pos(3, 0, 4); pos(4, 1, 3);
        pos(4, 0, 0);
        pc.held_out.push_back({0, 1, 4, 1});
        break;
    }
    case RelationPattern::Composition: {
        // r3 is trained as r2 after r1 on three chains; the closing chain
        // g -> h -> a has its composed triple held out.
        add_names(kg, {"a", "b", "c", "d", "e", "f", "g", "h"}, {"r1", "r2", "r3"});
        pos(0, 0, 1); pos(1, 1, 2); pos(0, 2, 2);
        pos(2, 0, 3); pos(3, 1, 4); pos(2, 2, 4);
        pos(4, 0, 5); pos(5, 1, 6); pos(4, 2, 6);
        pos(6, 0, 7); pos(7, 1, 0);
        neg(0, 2, 4); neg(2, 2, 0);
        pc.held_out.push_back({6, 2, 0, 1});
        break;
    }
    }

    for (const LabeledTriple& probe : pc.held_out) {
        if (kg.contains(probe.triple())) {
            throw std::logic_error("pattern fixture leaks a held-out triple into training");
        }
    }
    return pc;
}

PatternCheckResult pattern_check(RelationPattern pattern, ScoreScheme scheme,
                                 const TrainConfig& config) {
    const PatternCase pc = make_pattern_case(pattern);
    TrainConfig cfg = config;
    cfg.scheme = scheme;
    const TrainResult trained =
        train_on(pc.train_data, pc.kg.n_entities(), pc.kg.n_relations(), cfg);

    PatternCheckResult result;
    result.final_loss = trained.loss_history.back();

    auto probe = [&](const LabeledTriple& t, bool held_out) {
        ProbeScore ps;
        ps.triple = t.triple();
        ps.expected_label = t.label;
        ps.held_out = held_out;
        ps.score = dataset_score(trained.params, t, scheme);
        result.table.push_back(ps);
    };
    for (const LabeledTriple& t : pc.held_out) probe(t, true);

    // The trained counterparts that give the held-out probes their meaning:
    // the forward/teaching triples for the same entity pair or chain.
    switch (pattern) {
    case RelationPattern::Symmetric: probe({6, 0, 7, 1}, false); break;
    case RelationPattern::Antisymmetric: probe({3, 0, 0, 1}, false); break;
    case RelationPattern::Inverse: probe({4, 0, 0, 1}, false); break;
    case RelationPattern::Composition:
        probe({6, 0, 7, 1}, false);
        probe({7, 1, 0, 1}, false);
        break;
    }
    return result;
}

} // namespace qkge
