#include "clique_spectra/log.hpp"

#include <cstdlib>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace clique_spectra {

void init_logging(std::string_view level) {
  auto logger = spdlog::get("clique-spectra");
  if (!logger) logger = spdlog::stderr_color_mt("clique-spectra");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  const auto parsed = spdlog::level::from_str(std::string(level));
  // from_str maps unknown names to off; only accept "off" when spelled out.
  if (parsed == spdlog::level::off && level != "off") {
    spdlog::set_level(spdlog::level::warn);
    if (!level.empty()) spdlog::warn("unknown log level '{}', using warn", level);
  } else {
    spdlog::set_level(parsed);
  }
}

void init_logging() {
  const char* env = std::getenv(kLogEnvVar);
  init_logging(env != nullptr ? env : "");
}

}  // namespace clique_spectra
