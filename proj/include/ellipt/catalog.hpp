// Catalog records over (n, d) grids, their deterministic JSON-lines
// aggregation, and the one-shot verification suite behind `verify`.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ellipt/families.hpp"

namespace ellipt {

// Full record for one instance: parameters, singularity weights, Milnor
// number, characteristic polynomial, Betti numbers, homotopy classes where
// the classification applies, canonical self-intersection, caveat flags.
// Expansion cross-checks above max_expand_degree are skipped and flagged
// "skipped: degree cap" instead of running.
nlohmann::json catalog_record(const FamilyInstance& inst, long max_expand_degree = 10000);

// Records for the cartesian product of the parameter lists, in (n, d)
// lexicographic order. Cells are computed concurrently; aggregation order
// is by parameter, so output is deterministic and reruns are byte-identical.
std::vector<nlohmann::json> catalog_grid(Family family, const std::vector<long>& ns,
                                         const std::vector<long>& ds,
                                         long max_expand_degree = 10000);

// One compact record per line, newline-terminated (JSON lines).
std::string catalog_lines(const std::vector<nlohmann::json>& records);
// Single indented array document.
std::string catalog_pretty(const std::vector<nlohmann::json>& records);

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;  // located identities, empty = passed
    bool passed() const { return failures.empty(); }
};

struct VerificationReport {
    std::vector<SuiteResult> suites;
    std::vector<std::string> warnings;
    bool all_passed() const;
    nlohmann::json to_json() const;
};

// Runs every identity suite over 2 <= d <= max_d, 0 <= n <= max_n (suite
// prerequisites narrow individual ranges). An empty range passes vacuously
// with a warning. perturb flips one exponent in one characteristic
// polynomial so the harness can demonstrate failure location.
VerificationReport run_verification(long max_n, long max_d, bool perturb = false);

}  // namespace ellipt
