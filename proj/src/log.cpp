#include "corridorcast/log.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace corridorcast {

namespace {

std::atomic<int> g_level{-1};
std::mutex g_mutex;

LogLevel level_from_env() {
    const char* env = std::getenv("CORRIDORCAST_LOG");
    if (!env) return LogLevel::Warn;
    if (std::strcmp(env, "error") == 0) return LogLevel::Error;
    if (std::strcmp(env, "warn") == 0) return LogLevel::Warn;
    if (std::strcmp(env, "info") == 0) return LogLevel::Info;
    if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
}

const char* level_name(LogLevel level) {
    switch (level) {
        case LogLevel::Error: return "error";
        case LogLevel::Warn: return "warn";
        case LogLevel::Info: return "info";
        case LogLevel::Debug: return "debug";
    }
    return "?";
}

}  // namespace

LogLevel log_level() {
    int lv = g_level.load(std::memory_order_relaxed);
    if (lv < 0) {
        lv = static_cast<int>(level_from_env());
        g_level.store(lv, std::memory_order_relaxed);
    }
    return static_cast<LogLevel>(lv);
}

void set_log_level(LogLevel level) {
    g_level.store(static_cast<int>(level), std::memory_order_relaxed);
}

void log_message(LogLevel level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::fprintf(stderr, "[corridorcast] %s: %s\n", level_name(level), message.c_str());
}

}  // namespace corridorcast
