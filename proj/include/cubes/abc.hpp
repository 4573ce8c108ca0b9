#pragma once

#include <string>
#include <vector>

#include "cubes/int.hpp"
#include "cubes/interval.hpp"
#include "cubes/product_sum.hpp"

namespace cubes {

// A positive abc-style triple x + y = z with n = xyz and k = rad(n).
struct AbcTriple {
    Int x, y, z, n, k;
};

AbcTriple make_abc_triple(const Int& x, const Int& y);

// Quality data for a triple: q = log z / log k, and the constant C that makes
// the refined radical bound z = k exp[4 sqrt(3 log k/log log k)(1 +
// log log log k/(2 log log k) + C/log log k)] exact for this (z, k).
struct AbcReport {
    AbcTriple triple;
    double q = 0.0;
    std::string q_decimal;
    double implied_c = 0.0;
    std::string c_decimal;
    mpq_class c_approx;  // rational approximation good to the printed digits
};

// Count of solutions of xy(x-y-1) = n, through the kernel equivalence
// xyz = -n, x+y+z = -1. Throws ZeroInput.
Int reduced_count(const Int& n);

// Same count evaluated directly from the square-indicator arrangement
// (pair sums written as n/d - 1); cross-checks the kernel route.
Int reduced_count_square_form(const Int& n);

// n = p * p1 * (1 + p + p1) over consecutive primes always admits the
// witness (p, p1, -(1+p+p1)), so the reduced equation is solvable infinitely
// often by construction.
struct PrimeFamilyEntry {
    unsigned index;  // nu >= 1
    Int p;           // nu-th prime
    Int p1;          // (nu+1)-th prime
    Int n;
    ProductSumTriple witness;
};

std::vector<PrimeFamilyEntry> prime_family(unsigned nu_max);

// All ordered positive (x, y, z=x+y) with xyz = n, sorted by (x, y).
// Each ordered pair corresponds to exactly 3 signed height-zero solutions,
// so 3 * |result| = zero_height_count(3n).
std::vector<AbcTriple> positive_solutions(const Int& n);

// k exp[4 sqrt(3 log k/log log k)(1 + log log log k/(2 log log k) +
// C/log log k)] to >= `digits` significant digits. Requires k >= 16.
PreciseValue rst_bound(const Int& k, const mpq_class& c, std::size_t digits = 35);

// The unique C with rst_bound(k, C) = z. Requires k >= 16.
PreciseValue implied_c(const Int& z, const Int& k, std::size_t digits = 35);
PreciseValue implied_c_rational(const mpq_class& z, const Int& k, std::size_t digits = 35);

// Per-n mean of z over the ordered solutions found by the hunt (only n hit by
// at least two distinct unordered pairs).
struct MeanZEntry {
    Int n;
    unsigned ordered_solutions = 0;
    mpq_class mean_z;
    Int radical;
};

struct HuntResult {
    std::vector<AbcReport> top;      // by implied_c desc, q desc, then (x, y)
    std::vector<MeanZEntry> mean_z;  // ascending n
};

// Scans 1 <= x <= y <= x_max. The ranked report keeps primitive triples only
// (gcd(x,y) = 1; imprimitive families make the quality unbounded) and skips
// rad(xyz) < 16, where the bound inversion is undefined. The mean-z table
// covers every pair, primitive or not. Selection uses a double prefilter with
// a wide margin; final ordering uses 40-digit interval values, so the result
// is exact and thread-count independent. x_max capped at 10^5.
HuntResult hunt_high_quality(const Int& x_max, unsigned top, unsigned threads = 0);

// For each cube target n in [lo, hi] with height-zero solutions: the largest
// coordinate-sum |x|+|y|+|z| over them, rad(n)^(1+eps), and the smallest
// constant K with max-sum < K * rad(n)^(1+eps) on the observed data.
struct BoundReportRow {
    Int n;
    Int coord_sum_max;
    Int radical;
    std::string rad_pow_decimal;
    double implied_k = 0.0;
};

std::vector<BoundReportRow> radical_bound_report(const Int& lo, const Int& hi,
                                                 const mpq_class& eps);

}  // namespace cubes
