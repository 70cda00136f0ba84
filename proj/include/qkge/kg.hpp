#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qkge {

struct Triple {
    int head = 0;
    int relation = 0;
    int tail = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// One training element: a triple plus its label (1 = belongs to the graph).
struct LabeledTriple {
    int head = 0;
    int relation = 0;
    int tail = 0;
    int label = 1;

    Triple triple() const { return {head, relation, tail}; }
};

// Directed multigraph over named entities and relations. Dictionaries are
// ordered by first appearance; triples are deduplicated.
class KnowledgeGraph {
  public:
    int add_entity(const std::string& name);
    int add_relation(const std::string& name);

    // Returns false (and leaves the graph unchanged) for duplicates.
    bool add_triple(const Triple& triple);

    bool contains(const Triple& triple) const { return triple_set_.count(triple) > 0; }

    std::optional<int> entity_id(const std::string& name) const;
    std::optional<int> relation_id(const std::string& name) const;

    int n_entities() const { return static_cast<int>(entities_.size()); }
    int n_relations() const { return static_cast<int>(relations_.size()); }

    const std::vector<std::string>& entities() const { return entities_; }
    const std::vector<std::string>& relations() const { return relations_; }
    const std::vector<Triple>& triples() const { return triples_; }

  private:
    std::vector<std::string> entities_;
    std::vector<std::string> relations_;
    std::vector<Triple> triples_;
    std::map<std::string, int> entity_ids_;
    std::map<std::string, int> relation_ids_;
    std::set<Triple> triple_set_;
};

struct IngestReport {
    int n_lines = 0;
    int n_duplicates = 0;
};

// Parses tab-separated "head<TAB>relation<TAB>tail" lines, one triple per
// line, UTF-8. Blank lines are skipped; malformed lines raise with their line
// number; duplicates are dropped and counted in the report.
KnowledgeGraph parse_triples(std::istream& in, IngestReport* report = nullptr);

// parse_triples over a file; throws std::runtime_error if unreadable and
// std::invalid_argument for an empty graph.
KnowledgeGraph ingest_triples(const std::string& path, IngestReport* report = nullptr);

} // namespace qkge
