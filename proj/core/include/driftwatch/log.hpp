#pragma once

#include <sstream>
#include <string>

namespace driftwatch::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

/// Current level, initialized once from the DRIFTWATCH_LOG environment
/// variable ("error", "warn", "info", "debug"). Defaults to warn.
Level level();

void write(Level lvl, const std::string& msg);

template <typename... Args>
void emit(Level lvl, Args&&... args) {
  if (lvl > level()) return;
  std::ostringstream os;
  (os << ... << args);
  write(lvl, os.str());
}

template <typename... Args>
void error(Args&&... args) {
  emit(Level::error, std::forward<Args>(args)...);
}
template <typename... Args>
void warn(Args&&... args) {
  emit(Level::warn, std::forward<Args>(args)...);
}
template <typename... Args>
void info(Args&&... args) {
  emit(Level::info, std::forward<Args>(args)...);
}
template <typename... Args>
void debug(Args&&... args) {
  emit(Level::debug, std::forward<Args>(args)...);
}

}  // namespace driftwatch::log
