#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubes/errors.hpp"
#include "cubes/int.hpp"

namespace cubes {

struct PrimePower {
    Int prime;
    unsigned exponent;
};

// Signed integer as sign * product of prime powers, primes strictly increasing.
// Value 0 is unrepresentable by construction.
struct Factorization {
    int sign = 1;  // +1 or -1
    std::vector<PrimePower> factors;

    Int value() const;
    Int abs_value() const;
};

// Trial division to 10^6, then Brent's rho with deterministic Miller-Rabin
// certification below 2^64 (12-witness set) and a strong probabilistic test
// above. Throws ZeroInput on n = 0.
Factorization factor(const Int& n);

bool is_prime(const Int& n);

// All positive divisors of |value|, ascending. Materializes the full list;
// throws LimitTooLarge past 2*10^6 divisors (use for_each_divisor instead).
std::vector<Int> divisors(const Factorization& f);

Int tau(const Factorization& f);
Int sigma(const Factorization& f, unsigned nu);
Int rad(const Factorization& f);

// Number of ordered integer triples (A,B,C) with A*B*C = N,
// i.e. 4 * sum over positive d | |N| of tau(d). Throws ZeroInput.
Int total_product_triples(const Int& n);

// k with k^2 = m when m is a nonnegative perfect square, else absent.
std::optional<Int> exact_square_root(const Int& m);

// Streaming walk over the positive divisors of |value| in odometer order
// (not sorted). Keeps no list; cheap to re-run, works at any tau.
template <class F>
void for_each_divisor(const Factorization& f, F&& fn) {
    const auto& ps = f.factors;
    std::vector<unsigned> e(ps.size(), 0);
    Int d = 1;
    for (;;) {
        fn(static_cast<const Int&>(d));
        std::size_t i = 0;
        for (; i < ps.size(); ++i) {
            if (e[i] < ps[i].exponent) {
                ++e[i];
                d *= ps[i].prime;
                break;
            }
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), ps[i].prime.get_mpz_t(), e[i]);
            mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), pw.get_mpz_t());
            e[i] = 0;
        }
        if (i == ps.size()) break;
    }
}

}  // namespace cubes
