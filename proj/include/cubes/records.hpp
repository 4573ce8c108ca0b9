#pragma once

#include <string>
#include <vector>

#include "cubes/int.hpp"

namespace cubes {

// Height-zero representation count R(0,n): solutions of x^3+y^3+z^3 = n with
// x+y+z = 0, equivalently xyz = n/3 with sum 0. Zero when 3 does not divide n
// or n/3 is odd. Throws ZeroInput on n = 0.
Int zero_height_count(const Int& n);

// Divisor criterion for R(0,n) > 0: n = 0 (mod 6) and some divisor d of n/3
// has (n/(3d))^2 - 4d a perfect square. Scans signed d (the stated
// positive-only form is equivalent at height zero, where any solution has two
// same-sign coordinates). Throws ZeroInput.
bool zero_height_divisor_criterion(const Int& n);

struct RecordEntry {
    Int n;
    Int count;        // R(0,n)
    bool is_new_max;  // strictly increasing running maximum of count
};

// Every n <= limit with R(0,n) > 0, ascending, with new-max flags. Only
// n = 0 (mod 6) can contribute (height zero forces it). Work is partitioned
// across threads in contiguous chunks; the merge is order-preserving and the
// new-max pass sequential, so output is independent of thread count.
// limit is capped at 10^7. threads = 0 means hardware concurrency.
std::vector<RecordEntry> record_scan(const Int& limit, unsigned threads = 0);

struct SigmaRatioReport {
    Int n;
    Int sigma1;
    std::string ratio_decimal;  // sigma1(n) / (e^gamma n log log n), >= 30 digits
    double ratio = 0.0;
    bool in_s = false;  // n > 5040 and 0.85 < ratio < 1
};

// Requires n > 5040 (DomainError otherwise). The ratio is interval-evaluated
// and the S-membership decided exactly.
SigmaRatioReport sigma_ratio(const Int& n);

}  // namespace cubes
