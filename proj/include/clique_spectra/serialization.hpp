#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "clique_spectra/bounds.hpp"
#include "clique_spectra/cliques.hpp"
#include "clique_spectra/graph.hpp"
#include "clique_spectra/spectral.hpp"
#include "clique_spectra/verify.hpp"

namespace clique_spectra {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Every top-level document carries "schema" and "schema_version".
Json graph_json(const Graph& g);
Json catalog_json(const CliqueCatalog& catalog, std::size_t clique_limit);
Json spectral_json(const SpectralResult& result);
Json bound_report_json(const BoundReport& report);
Json bound_suite_json(const BoundSuite& suite);
Json suite_config_json(const SuiteConfig& cfg);
Json report_json(const VerificationReport& report, bool include_runtime = false);

SuiteConfig suite_config_from_json(const Json& j);
BoundReport bound_report_from_json(const Json& j);
/// Throws ParseError on a schema or version mismatch.
VerificationReport report_from_json(const Json& j);

/// CSV with a header and one row per recorded (graph, bound) pair.
std::string report_csv(const VerificationReport& report);
std::string bound_suite_csv(const BoundSuite& suite);

enum class ReportFormat { Json, Csv };

/// Writes the report; JSON output is byte-stable for equal reports.
void emit_report(const VerificationReport& report, ReportFormat format,
                 const std::filesystem::path& path);
std::string render_report(const VerificationReport& report, ReportFormat format);

}  // namespace clique_spectra
