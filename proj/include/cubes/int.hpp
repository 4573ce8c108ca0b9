#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cubes {

// Exact signed arbitrary-precision integer. Every integer quantity in the
// library lives in this type; fast int64 paths exist only behind range guards.
using Int = mpz_class;

inline Int cube(const Int& x) { return x * x * x; }

// Nonnegative residue of n mod m (floor convention, independent of sign of n).
inline unsigned long mod_u(const Int& n, unsigned long m) {
    return mpz_fdiv_ui(n.get_mpz_t(), m);
}

inline bool divisible_u(const Int& n, unsigned long m) {
    return mpz_divisible_ui_p(n.get_mpz_t(), m) != 0;
}

inline bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }
inline bool is_even(const Int& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

inline bool fits_int64(const Int& n) {
    return n >= Int("-9223372036854775808") && n <= Int("9223372036854775807");
}

inline std::int64_t to_int64(const Int& n) {
    // mpz_get_si truncates to long; guard with fits_int64 at call sites.
    return static_cast<std::int64_t>(mpz_get_si(n.get_mpz_t()));
}

inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace cubes
