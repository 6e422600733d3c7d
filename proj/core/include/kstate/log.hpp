#pragma once

#include <string_view>

namespace kstate {

/// Log verbosity, selected once per process from the KSTATE_LOG environment
/// variable ("error", "info" or "debug"; default "error").
enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level();
void log(LogLevel level, std::string_view message);

inline void log_info(std::string_view message) { log(LogLevel::Info, message); }
inline void log_debug(std::string_view message) { log(LogLevel::Debug, message); }

} // namespace kstate
