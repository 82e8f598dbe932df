#pragma once

#include <string>
#include <string_view>

namespace fragdiff::log {

enum class Level { debug, info, warn, error };

// Single-line machine-parseable record to stderr: "ts level module message".
void write(Level level, std::string_view module, std::string_view message);

void set_min_level(Level level);

inline void info(std::string_view module, std::string_view message) {
    write(Level::info, module, message);
}
inline void warn(std::string_view module, std::string_view message) {
    write(Level::warn, module, message);
}
inline void error(std::string_view module, std::string_view message) {
    write(Level::error, module, message);
}
inline void debug(std::string_view module, std::string_view message) {
    write(Level::debug, module, message);
}

}  // namespace fragdiff::log
