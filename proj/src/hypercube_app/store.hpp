#pragma once

// Content-addressed artifact cache and run manifests.

#include "json.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hypercube::app {

inline constexpr const char* kCacheEnv = "HYPERCUBE_CACHE";

std::string sha256_hex(const std::string& bytes);

// --cache wins over the environment; no directory disables caching.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

// Writes data to path through a temporary sibling and a rename.
void write_atomically(const std::filesystem::path& path, const std::string& data);

// Entries live next to an index (index.json) recording their SHA-256. An
// entry whose bytes no longer match the index, or that the caller's decoder
// rejects, is discarded and recomputed.
class ArtifactStore {
public:
    using Decoder = std::function<bool(const std::string&)>;

    explicit ArtifactStore(std::optional<std::filesystem::path> dir, std::ostream* log = nullptr);

    bool enabled() const { return dir_.has_value(); }
    const std::optional<std::filesystem::path>& dir() const { return dir_; }

    std::string fetch(const std::string& name, const std::function<std::string()>& compute, const Decoder& valid = {});

    // Names recomputed because a stored copy was corrupt, since construction.
    const std::vector<std::string>& repaired() const { return repaired_; }
    std::optional<std::string> digest(const std::string& name) const;

private:
    void load_index();
    void save_index() const;

    std::optional<std::filesystem::path> dir_;
    std::ostream* log_;
    std::map<std::string, std::string> index_;
    std::vector<std::string> repaired_;
};

struct Artifact {
    std::string name;
    std::string content;
};

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> inputs;   // name -> sha256
    nlohmann::json parameters = nlohmann::json::object();
    std::map<std::string, std::string> outputs;  // file -> sha256
    double wall_seconds = 0;
    int threads = 1;
    nlohmann::json results = nlohmann::json::object();
    std::map<std::string, bool> checks;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

// Writes every artifact and manifest.json into dir. Nothing is written
// unless all artifacts could be staged.
void write_artifacts(const std::filesystem::path& dir, const std::vector<Artifact>& artifacts, RunManifest& manifest);

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

}  // namespace hypercube::app
