#include "qkge/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qkge {

namespace {

using nlohmann::json;

json pairs_to_json(const std::vector<std::pair<std::string, ParamVector>>& pairs) {
    json arr = json::array();
    for (const auto& [name, values] : pairs) {
        arr.push_back(json::array({name, values}));
    }
    return arr;
}

std::vector<std::pair<std::string, ParamVector>> pairs_from_json(const json& arr) {
    std::vector<std::pair<std::string, ParamVector>> pairs;
    for (const json& item : arr) {
        pairs.emplace_back(item.at(0).get<std::string>(), item.at(1).get<ParamVector>());
    }
    return pairs;
}

} // namespace

Checkpoint make_checkpoint(const KnowledgeGraph& kg, const ParameterStore& params) {
    if (kg.n_entities() != static_cast<int>(params.entity_params.size()) ||
        kg.n_relations() != static_cast<int>(params.relation_params.size())) {
        throw std::invalid_argument("graph and parameter store sizes disagree");
    }
    Checkpoint cp;
    cp.spec = params.spec;
    for (int e = 0; e < kg.n_entities(); ++e) {
        cp.entities.emplace_back(kg.entities()[static_cast<std::size_t>(e)],
                                 params.entity_params[static_cast<std::size_t>(e)]);
    }
    for (int r = 0; r < kg.n_relations(); ++r) {
        cp.relations.emplace_back(kg.relations()[static_cast<std::size_t>(r)],
                                  params.relation_params[static_cast<std::size_t>(r)]);
    }
    return cp;
}

std::string checkpoint_to_json(const Checkpoint& cp) {
    json j;
    j["format_version"] = cp.format_version;
    j["ansatz"] = {{"n_qubits", cp.spec.n_qubits}, {"n_layers", cp.spec.n_layers}};
    j["entities"] = pairs_to_json(cp.entities);
    j["relations"] = pairs_to_json(cp.relations);
    j["provenance"] = {{"config_hash", cp.config_hash},
                       {"epochs", cp.epochs},
                       {"final_loss", cp.final_loss},
                       {"scheme", cp.scheme},
                       {"seed", cp.seed}};
    return j.dump(2) + "\n";
}

Checkpoint checkpoint_from_json(const std::string& text) {
    json j = json::parse(text);
    Checkpoint cp;
    cp.format_version = j.at("format_version").get<int>();
    if (cp.format_version != 1) {
        throw std::runtime_error("unsupported checkpoint format version");
    }
    cp.spec.n_qubits = j.at("ansatz").at("n_qubits").get<int>();
    cp.spec.n_layers = j.at("ansatz").at("n_layers").get<int>();
    cp.entities = pairs_from_json(j.at("entities"));
    cp.relations = pairs_from_json(j.at("relations"));
    const json& prov = j.at("provenance");
    cp.config_hash = prov.at("config_hash").get<std::string>();
    cp.epochs = prov.at("epochs").get<int>();
    cp.final_loss = prov.at("final_loss").get<double>();
    cp.scheme = prov.at("scheme").get<std::string>();
    cp.seed = prov.at("seed").get<std::uint64_t>();

    const int expected = param_count(cp.spec);
    for (const auto& [name, values] : cp.entities) {
        if (static_cast<int>(values.size()) != expected) {
            throw std::runtime_error("checkpoint entity '" + name + "' has a bad vector length");
        }
    }
    for (const auto& [name, values] : cp.relations) {
        if (static_cast<int>(values.size()) != expected) {
            throw std::runtime_error("checkpoint relation '" + name + "' has a bad vector length");
        }
    }
    return cp;
}

void save_checkpoint(const Checkpoint& cp, const std::string& path) {
    atomic_write_file(path, checkpoint_to_json(cp));
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return checkpoint_from_json(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": malformed checkpoint: " + e.what());
    }
}

ParameterStore checkpoint_params(const Checkpoint& cp) {
    ParameterStore store;
    store.spec = cp.spec;
    for (const auto& [name, values] : cp.entities) store.entity_params.push_back(values);
    for (const auto& [name, values] : cp.relations) store.relation_params.push_back(values);
    return store;
}

KnowledgeGraph checkpoint_dictionaries(const Checkpoint& cp) {
    KnowledgeGraph kg;
    for (const auto& [name, values] : cp.entities) kg.add_entity(name);
    for (const auto& [name, values] : cp.relations) kg.add_relation(name);
    return kg;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    const fs::path staging = target.string() + ".tmp";
    {
        std::ofstream out(staging, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write: " + staging.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + staging.string());
    }
    fs::rename(staging, target);
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buffer[20];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

} // namespace qkge
