#include "rainbow/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

nlohmann::json RunRecord::to_json() const
{
    return {{"command", command}, {"params", params},       {"result", result},
            {"version", version}, {"timestamp", timestamp}, {"seconds", seconds}};
}

RunRecord RunRecord::from_json(const nlohmann::json& j)
{
    RunRecord r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    r.result = j.at("result");
    r.version = j.at("version").get<std::string>();
    r.timestamp = j.value("timestamp", std::string{});
    r.seconds = j.value("seconds", 0.0);
    return r;
}

namespace {

// flock on a dedicated descriptor; released when the guard closes it.
class FileLock {
public:
    FileLock(const std::string& path, int operation)
    {
        fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
        if (fd_ < 0) throw Error("cannot open cache " + path + ": " + std::strerror(errno));
        if (::flock(fd_, operation) != 0) {
            ::close(fd_);
            throw Error("cannot lock cache " + path + ": " + std::strerror(errno));
        }
    }
    ~FileLock()
    {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

} // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

std::optional<RunRecord> ResultCache::lookup(const std::string& command, const nlohmann::json& params,
                                             const std::string& version) const
{
    std::ifstream probe(path_);
    if (!probe) return std::nullopt;
    probe.close();

    FileLock lock(path_, LOCK_SH);
    std::ifstream in(path_);
    std::optional<RunRecord> found;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        // a torn or foreign line is skipped rather than failing the run
        const auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) continue;
        if (j.value("command", "") != command || j.value("version", "") != version) continue;
        if (!j.contains("params") || j["params"] != params || !j.contains("result")) continue;
        found = RunRecord::from_json(j);
    }
    return found;
}

void ResultCache::append(const RunRecord& record) const
{
    FileLock lock(path_, LOCK_EX);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot append to cache " + path_);
    out << record.to_json().dump() << '\n';
    out.flush();
    if (!out) throw Error("write to cache " + path_ + " failed");
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace rainbow
