#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sqtop/presentation.hpp"

namespace sqtop {

inline constexpr const char* kToolName = "sqtop";
inline constexpr const char* kToolVersion = "1.0.0";

// Runs the whole pipeline (basis, square table, Wu and Stiefel-Whitney
// classes, orientability verdicts, Euler characteristic, signature when the
// dimension allows one) and consolidates the results into a single document
// with a fixed key order; dump() of the result is byte-deterministic and
// independent of the thread budget.
nlohmann::ordered_json build_report(const PresentationData& data, const std::string& digest,
                                    int threads = 1);

// Compares a report against a golden subtree: only keys present in the
// golden are checked, recursively; scalar and array mismatches are reported
// as "path: expected X, got Y" lines. Empty result means a clean match.
std::vector<std::string> compare_with_golden(const nlohmann::json& report,
                                             const nlohmann::json& golden);

// Human-readable view of the same payload.
std::string report_to_text(const nlohmann::ordered_json& report);

}  // namespace sqtop
