#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qkge/kg.hpp"
#include "qkge/training.hpp"

namespace qkge {

// Versioned JSON snapshot of a trained embedding set. Name -> vector pairs
// keep the first-appearance order of the dictionaries; angle values round-trip
// exactly (serialized as shortest lossless decimals).
struct Checkpoint {
    int format_version = 1;
    AnsatzSpec spec;
    std::vector<std::pair<std::string, ParamVector>> entities;
    std::vector<std::pair<std::string, ParamVector>> relations;

    // training provenance
    std::string config_hash;
    int epochs = 0;
    double final_loss = 0.0;
    std::string scheme;
    std::uint64_t seed = 0;

    bool operator==(const Checkpoint& other) const = default;
};

Checkpoint make_checkpoint(const KnowledgeGraph& kg, const ParameterStore& params);

std::string checkpoint_to_json(const Checkpoint& checkpoint);
Checkpoint checkpoint_from_json(const std::string& text);

void save_checkpoint(const Checkpoint& checkpoint, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

// Rebuilds the parameter store and the name dictionaries from a checkpoint.
ParameterStore checkpoint_params(const Checkpoint& checkpoint);
KnowledgeGraph checkpoint_dictionaries(const Checkpoint& checkpoint);

// Shared file helpers. atomic_write_file stages to "<path>.tmp" and renames,
// so failed commands never leave partial outputs behind.
void atomic_write_file(const std::string& path, const std::string& content);
std::string format_double(double value); // "%.17g", reproducible CSV cells

// FNV-1a hex digest, used for config provenance hashes.
std::string fnv1a_hex(const std::string& text);

} // namespace qkge
