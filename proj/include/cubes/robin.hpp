#pragma once

#include <cstdint>
#include <vector>

#include "cubes/int.hpp"

namespace cubes {

enum class RobinVerdict { Holds, Violated };

// Decides sigma_1(n) < e^gamma * n * log log n by escalating interval
// evaluation; never returns a side that rounding could flip.
// Requires n >= 3 (log log n defined and positive handled explicitly).
RobinVerdict robin_check(const Int& n);

struct RobinFinding {
    std::uint64_t n;
    std::uint64_t sigma1;
    bool in_claim_range;  // false for n <= 5040, where the inequality claims nothing
};

struct RobinScan {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::uint64_t checked = 0;
    std::vector<RobinFinding> findings;  // every n in range failing the inequality
};

// Sieve-driven scan of [from, to]. A double-precision prefilter admits the
// overwhelming majority; anything near the bound is re-decided exactly.
RobinScan robin_scan(std::uint64_t from, std::uint64_t to);

}  // namespace cubes
