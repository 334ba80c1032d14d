#include "hypercube_app/store.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace hypercube::app {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr)) throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return fs::path(*flag);
    if (const char* env = std::getenv(kCacheEnv); env && *env) return fs::path(env);
    return std::nullopt;
}

static std::optional<std::string> slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) return std::nullopt;
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_atomically(const fs::path& path, const std::string& data) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << data;
        if (!f.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

ArtifactStore::ArtifactStore(std::optional<fs::path> dir, std::ostream* log) : dir_(std::move(dir)), log_(log) {
    if (dir_) {
        fs::create_directories(*dir_);
        load_index();
    }
}

void ArtifactStore::load_index() {
    auto text = slurp(*dir_ / "index.json");
    if (!text) return;
    try {
        auto j = nlohmann::json::parse(*text);
        for (auto& [k, v] : j.at("entries").items()) index_[k] = v.get<std::string>();
    } catch (const std::exception&) {
        if (log_) *log_ << "cache index unreadable; starting afresh\n";
        index_.clear();
    }
}

void ArtifactStore::save_index() const {
    nlohmann::json j;
    j["entries"] = nlohmann::json::object();
    for (const auto& [k, v] : index_) j["entries"][k] = v;
    write_atomically(*dir_ / "index.json", j.dump(2) + "\n");
}

std::optional<std::string> ArtifactStore::digest(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string ArtifactStore::fetch(const std::string& name, const std::function<std::string()>& compute, const Decoder& valid) {
    if (dir_) {
        auto it = index_.find(name);
        if (auto bytes = slurp(*dir_ / name)) {
            bool ok = it != index_.end() && sha256_hex(*bytes) == it->second && (!valid || valid(*bytes));
            if (ok) return *bytes;
            if (log_) *log_ << "cache entry " << name << " failed verification; recomputing\n";
            repaired_.push_back(name);
        }
    }
    std::string bytes = compute();
    if (dir_) {
        write_atomically(*dir_ / name, bytes);
        index_[name] = sha256_hex(bytes);
        save_index();
    }
    return bytes;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["parameters"] = parameters;
    j["outputs"] = outputs;
    j["wall_seconds"] = wall_seconds;
    j["threads"] = threads;
    if (!results.empty()) j["results"] = results;
    if (!checks.empty()) j["checks"] = checks;
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    m.parameters = j.at("parameters");
    m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
    m.wall_seconds = j.at("wall_seconds").get<double>();
    m.threads = j.at("threads").get<int>();
    if (j.contains("results")) m.results = j.at("results");
    if (j.contains("checks")) m.checks = j.at("checks").get<std::map<std::string, bool>>();
    return m;
}

void write_artifacts(const fs::path& dir, const std::vector<Artifact>& artifacts, RunManifest& manifest) {
    fs::create_directories(dir);
    std::vector<fs::path> staged;
    try {
        for (const auto& a : artifacts) {
            fs::path tmp = dir / (a.name + ".partial");
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) throw std::runtime_error("cannot write " + tmp.string());
            f << a.content;
            if (!f.flush()) throw std::runtime_error("write failed for " + tmp.string());
            staged.push_back(tmp);
            manifest.outputs[a.name] = sha256_hex(a.content);
        }
    } catch (...) {
        for (const auto& p : staged) fs::remove(p);
        throw;
    }
    for (std::size_t i = 0; i < artifacts.size(); ++i) fs::rename(staged[i], dir / artifacts[i].name);
    write_atomically(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
}

}  // namespace hypercube::app
