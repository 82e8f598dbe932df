#include "fragdiff/common/log.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <mutex>

namespace fragdiff::log {

namespace {

std::atomic<Level> g_min_level{Level::info};
std::mutex g_mutex;

const char* level_name(Level level) {
    switch (level) {
        case Level::debug: return "DEBUG";
        case Level::info: return "INFO";
        case Level::warn: return "WARN";
        case Level::error: return "ERROR";
    }
    return "?";
}

}  // namespace

void set_min_level(Level level) { g_min_level.store(level); }

void write(Level level, std::string_view module, std::string_view message) {
    if (static_cast<int>(level) < static_cast<int>(g_min_level.load())) return;

    auto now = std::chrono::system_clock::now();
    std::time_t secs = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char ts[32];
    std::strftime(ts, sizeof(ts), "%Y-%m-%dT%H:%M:%SZ", &tm);

    std::lock_guard<std::mutex> lock(g_mutex);
    std::fprintf(stderr, "%s %s %.*s %.*s\n", ts, level_name(level),
                 static_cast<int>(module.size()), module.data(),
                 static_cast<int>(message.size()), message.data());
}

}  // namespace fragdiff::log
