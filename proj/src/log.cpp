#include "cycles/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

namespace cycles {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("CYCLES_LOG");
        if (env == nullptr) return LogLevel::Error;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        if (std::strcmp(env, "info") == 0) return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

void log_error(const std::string& msg) {
    std::cerr << "[cycles] error: " << msg << "\n";
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::cerr << "[cycles] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) std::cerr << "[cycles] debug: " << msg << "\n";
}

} // namespace cycles
