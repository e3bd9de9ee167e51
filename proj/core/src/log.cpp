#include "driftwatch/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace driftwatch::log {

namespace {

Level parse_level() {
  const char* env = std::getenv("DRIFTWATCH_LOG");
  if (env == nullptr) return Level::warn;
  const std::string v(env);
  if (v == "error") return Level::error;
  if (v == "warn") return Level::warn;
  if (v == "info") return Level::info;
  if (v == "debug") return Level::debug;
  return Level::warn;
}

const char* tag(Level lvl) {
  switch (lvl) {
    case Level::error: return "error";
    case Level::warn: return "warn";
    case Level::info: return "info";
    case Level::debug: return "debug";
  }
  return "?";
}

std::mutex g_mutex;

}  // namespace

Level level() {
  static const Level lvl = parse_level();
  return lvl;
}

void write(Level lvl, const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << "[driftwatch " << tag(lvl) << "] " << msg << "\n";
}

}  // namespace driftwatch::log
