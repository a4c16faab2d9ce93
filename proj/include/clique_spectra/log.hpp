#pragma once

#include <string_view>

namespace clique_spectra {

inline constexpr const char* kLogEnvVar = "CLIQUE_SPECTRA_LOG";

/// Routes library logging to stderr at the level named by CLIQUE_SPECTRA_LOG
/// (trace, debug, info, warn, error, off; default warn). Unknown names fall
/// back to the default with a warning.
void init_logging();

/// Same, with an explicit level name.
void init_logging(std::string_view level);

}  // namespace clique_spectra
