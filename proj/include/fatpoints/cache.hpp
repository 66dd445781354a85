#pragma once

// Append-only JSON-lines result cache keyed by a stable request hash.
// Single writer; readers tolerate a corrupt or partial trailing line;
// entries written by an older artifact version are bypassed.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <json.hpp>

namespace fatpoints::cache {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// FNV-1a over the canonical request string; stable across runs and builds.
inline std::uint64_t request_hash(const std::string& canonical_request) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_request) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Canonical request string: command plus already-canonicalized arguments,
/// seed, and field, joined unambiguously.
inline std::string canonical_request(const std::string& command, const std::string& args,
                                     std::uint64_t seed, const std::string& field) {
    return command + "\x1f" + args + "\x1f" + std::to_string(seed) + "\x1f" + field;
}

struct ResultRecord {
    std::uint64_t hash = 0;
    nlohmann::json payload;
    std::int64_t timestamp = 0;  // unix seconds
    std::string version;
};

class ResultCache {
  public:
    explicit ResultCache(std::string path) : path_(std::move(path)) { load(); }

    const std::string& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t skipped_lines() const { return skipped_; }

    std::optional<nlohmann::json> lookup(std::uint64_t hash) const {
        auto it = entries_.find(hash);
        if (it == entries_.end()) return std::nullopt;
        return it->second.payload;
    }

    void store(std::uint64_t hash, nlohmann::json payload) {
        ResultRecord rec;
        rec.hash = hash;
        rec.payload = std::move(payload);
        rec.timestamp = std::chrono::duration_cast<std::chrono::seconds>(
                            std::chrono::system_clock::now().time_since_epoch())
                            .count();
        rec.version = kArtifactVersion;
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cache: cannot open for append: " + path_);
        nlohmann::json line = {{"hash", rec.hash},
                               {"payload", rec.payload},
                               {"timestamp", rec.timestamp},
                               {"version", rec.version}};
        out << line.dump() << '\n';
        if (!out) throw std::runtime_error("cache: write failed: " + path_);
        entries_[rec.hash] = std::move(rec);
    }

  private:
    void load() {
        std::ifstream in(path_);
        if (!in) return;  // absent cache is an empty cache
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("hash") || !j.contains("payload") ||
                !j.contains("version")) {
                ++skipped_;  // corrupt or partial trailing line
                continue;
            }
            if (j["version"].get<std::string>() != kArtifactVersion) {
                ++skipped_;  // written by another artifact version
                continue;
            }
            ResultRecord rec;
            rec.hash = j["hash"].get<std::uint64_t>();
            rec.payload = j["payload"];
            rec.timestamp = j.value("timestamp", std::int64_t{0});
            rec.version = j["version"].get<std::string>();
            entries_[rec.hash] = std::move(rec);
        }
    }

    std::string path_;
    std::unordered_map<std::uint64_t, ResultRecord> entries_;
    std::size_t skipped_ = 0;
};

}  // namespace fatpoints::cache
