#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqtop/presentation.hpp"

namespace sqtop {

// A bundled example: a validated presentation plus named parameter
// instantiations whose coefficient values are known from the literature.
struct CorpusEntry {
    std::string name;  // canonical lowercase name, also the fixture file stem
    Presentation presentation;
    std::map<std::string, std::map<std::string, bool>> instantiations;
};

// Bundled presentations by (case-insensitive) name: rp<n>, cp<n>, hp<n>,
// op2, op2xop2, eiii, eiii-mod2, evi. Throws UnknownName otherwise.
CorpusEntry builtin(const std::string& name);

// Stems of the bundled fixture files, in report order.
const std::vector<std::string>& builtin_names();

// Tensor product (Kunneth over GF(2)): disjoint union of generators and
// relations, with "1"/"2" suffixes on colliding generator names; square
// entries carry over factorwise. Factors must be parameter-free GF(2)
// presentations.
PresentationData tensor_product(const PresentationData& a, const PresentationData& b,
                                const std::string& name);

// (OP^2)^m for m in {1, 2}; larger powers are refused (DomainMismatch)
// since top-degree monomial counts grow quadratically.
CorpusEntry op2_power(int m);

// One golden fixture, recomputed.
struct GoldenCheck {
    std::string fixture;  // e.g. "evi.sq7.y16"
    std::string citation;
    std::string expected;
    std::string actual;
    bool passed = false;
};

// Recomputes every golden fixture under `corpus_dir` ("<stem>.json" inputs,
// "golden/<stem>.json" expectations) and reports the outcomes.  Throws
// ManifestError on unreadable or malformed fixture files.
std::vector<GoldenCheck> golden_suite(const std::string& corpus_dir);

}  // namespace sqtop
