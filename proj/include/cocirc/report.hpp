#pragma once

// Serialization of results: JSON (schema_version 1), CSV tables, SVG plots.
// Positions and group elements in reports use the 1-based labels m_1..m_n.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "cocirc/certifier.hpp"
#include "cocirc/inequalities.hpp"
#include "cocirc/minimizer.hpp"
#include "cocirc/scanner.hpp"

namespace cocirc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const MinimizerResult& r);
Json to_json(const CertificateReport& r);
Json to_json(const ScanResult& r);
Json to_json(const InequalityReport& r);

std::string to_csv(const MinimizerResult& r, const MassVector& m);
std::string to_csv(const CertificateReport& r);
std::string to_csv(const ScanResult& r);
std::string to_csv(const InequalityReport& r);

/// Envelope {schema_version, command, input, result, metadata}. Only the
/// metadata block carries wall-clock data.
Json make_document(const std::string& command, Json input, Json result);

/// Document without its metadata block; this is what must be reproducible.
Json math_payload(const Json& document);

std::string dump(const Json& document);

/// Unit circle with bodies as mass-scaled markers; bodies whose mass differs
/// from the most common value are highlighted.
std::string render_svg(const MassVector& m, const AngleConfig& theta);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string format_double(double x);

}  // namespace cocirc
