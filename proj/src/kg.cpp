#include "qkge/kg.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qkge {

int KnowledgeGraph::add_entity(const std::string& name) {
    auto [it, inserted] = entity_ids_.try_emplace(name, n_entities());
    if (inserted) entities_.push_back(name);
    return it->second;
}

int KnowledgeGraph::add_relation(const std::string& name) {
    auto [it, inserted] = relation_ids_.try_emplace(name, n_relations());
    if (inserted) relations_.push_back(name);
    return it->second;
}

bool KnowledgeGraph::add_triple(const Triple& triple) {
    if (triple.head < 0 || triple.head >= n_entities() || triple.tail < 0 ||
        triple.tail >= n_entities() || triple.relation < 0 ||
        triple.relation >= n_relations()) {
        throw std::invalid_argument("triple indices out of range");
    }
    if (!triple_set_.insert(triple).second) return false;
    triples_.push_back(triple);
    return true;
}

std::optional<int> KnowledgeGraph::entity_id(const std::string& name) const {
    const auto it = entity_ids_.find(name);
    if (it == entity_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> KnowledgeGraph::relation_id(const std::string& name) const {
    const auto it = relation_ids_.find(name);
    if (it == relation_ids_.end()) return std::nullopt;
    return it->second;
}

KnowledgeGraph parse_triples(std::istream& in, IngestReport* report) {
    KnowledgeGraph kg;
    IngestReport stats;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = line.find('\t', start);
            if (pos == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || fields[2].empty()) {
            std::ostringstream msg;
            msg << "line " << line_number << ": expected 3 tab-separated fields";
            throw std::invalid_argument(msg.str());
        }

        Triple t;
        t.head = kg.add_entity(fields[0]);
        t.relation = kg.add_relation(fields[1]);
        t.tail = kg.add_entity(fields[2]);
        ++stats.n_lines;
        if (!kg.add_triple(t)) ++stats.n_duplicates;
    }
    if (kg.triples().empty()) {
        throw std::invalid_argument("empty knowledge graph");
    }
    if (report) *report = stats;
    return kg;
}

KnowledgeGraph ingest_triples(const std::string& path, IngestReport* report) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read triples file: " + path);
    }
    try {
        return parse_triples(in, report);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

} // namespace qkge
