#include "cosal/logging.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace cosal {

namespace {

LogLevel parse_level(const char* s) {
    if (!s) return LogLevel::Warn;
    std::string v(s);
    if (v == "quiet" || v == "off" || v == "0") return LogLevel::Quiet;
    if (v == "error") return LogLevel::Error;
    if (v == "warn" || v == "warning") return LogLevel::Warn;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

std::atomic<int>& level_storage() {
    static std::atomic<int> level{static_cast<int>(parse_level(std::getenv("COSAL_LOG")))};
    return level;
}

const char* tag(LogLevel level) {
    switch (level) {
        case LogLevel::Error: return "error";
        case LogLevel::Warn: return "warn";
        case LogLevel::Info: return "info";
        case LogLevel::Debug: return "debug";
        default: return "";
    }
}

}  // namespace

LogLevel log_level() { return static_cast<LogLevel>(level_storage().load()); }

void set_log_level(LogLevel level) { level_storage().store(static_cast<int>(level)); }

void log_message(LogLevel level, const std::string& msg) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::cerr << "[cosal:" << tag(level) << "] " << msg << "\n";
}

}  // namespace cosal
