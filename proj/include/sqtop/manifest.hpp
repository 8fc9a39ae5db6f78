#pragma once

#include <string>

#include "json.hpp"
#include "sqtop/presentation.hpp"

namespace sqtop {

inline constexpr int kManifestSchema = 1;

// Converts a parsed JSON document into presentation inputs.  Validates the
// schema strictly: required keys, value types, schema version, and no unknown
// top-level keys.  Throws ManifestError on any violation.
PresentationData manifest_from_json(const nlohmann::json& doc);

nlohmann::json manifest_to_json(const PresentationData& data);

// Reads and validates a manifest file.  Both JSON syntax errors and semantic
// errors (unknown identifier, inhomogeneous relation, ...) are rephrased as
// ManifestError carrying a "path:line:col:" prefix locating the offender.
PresentationData load_manifest(const std::string& path);

// FNV-1a hash of a file's bytes, rendered as "fnv1a:<16 hex digits>".
std::string file_digest(const std::string& path);

}  // namespace sqtop
