#include "kstate/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace kstate {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("KSTATE_LOG");
    if (!env) return LogLevel::Error;
    const std::string value(env);
    if (value == "debug") return LogLevel::Debug;
    if (value == "info") return LogLevel::Info;
    return LogLevel::Error;
  }();
  return level;
}

void log(LogLevel level, std::string_view message) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const char* tag = level == LogLevel::Debug ? "debug" : level == LogLevel::Info ? "info" : "error";
  std::cerr << "[kstate " << tag << "] " << message << '\n';
}

} // namespace kstate
