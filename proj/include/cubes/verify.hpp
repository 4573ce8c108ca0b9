#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

namespace cubes {

enum class Suite {
    EulerIdentity,    // "euler"
    OracleAgreement,  // "oracle"
    Mod9Sieve,        // "mod9"
    HeightResidues,   // "lemma1"
    ResidueTables,    // "theorem5"
    Records,          // "records"
    PrimeFamily,      // "family"
};

std::optional<Suite> suite_from_name(std::string_view name);

// Runs the suite, prints one line per check block plus failure details, and
// returns whether every assertion passed. fast trims ranges for smoke runs.
bool run_suite(Suite suite, bool fast, std::ostream& out);

}  // namespace cubes
