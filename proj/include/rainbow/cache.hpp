#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace rainbow {

inline constexpr const char* kToolVersion = "0.1.0";

/// One line of the JSONL result cache. The payload holds only deterministic
/// values; wall-clock time lives next to it so a cache hit and a cold run
/// produce the same payload bytes.
struct RunRecord {
    std::string command;
    nlohmann::json params;
    nlohmann::json result;
    std::string version = kToolVersion;
    std::string timestamp;
    double seconds = 0.0;

    nlohmann::json to_json() const;
    static RunRecord from_json(const nlohmann::json& j);
};

/// Append-only JSONL file guarded by an advisory lock. Lookup returns the
/// last record whose command, params and version match.
class ResultCache {
public:
    explicit ResultCache(std::string path);

    const std::string& path() const noexcept { return path_; }

    std::optional<RunRecord> lookup(const std::string& command, const nlohmann::json& params,
                                    const std::string& version = kToolVersion) const;
    void append(const RunRecord& record) const;

private:
    std::string path_;
};

/// UTC, second resolution, e.g. 2024-01-31T12:00:00Z.
std::string utc_timestamp();

} // namespace rainbow
