#include "cubes/factorization.hpp"

#include <algorithm>
#include <map>

namespace cubes {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with this witness set.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's cycle variant; n odd composite, not a prime power of a tiny prime.
u64 pollard_brent_u64(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    for (;;) {
        u64 x = 2, y = 2, d = 1, q = 1;
        u64 ys = y;
        const unsigned m = 128;
        unsigned r = 1;
        while (d == 1) {
            x = y;
            for (unsigned i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            for (unsigned k = 0; k < r && d == 1; k += m) {
                ys = y;
                unsigned lim = std::min(m, r - k);
                for (unsigned i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // Backtrack one step at a time.
            do {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                d = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
        ++c;  // rare: cycle degenerated, retry with a new constant
    }
}

void factor_u64_into(u64 n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[Int(static_cast<unsigned long>(n))]++;
        return;
    }
    u64 d = pollard_brent_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

Int pollard_brent_mpz(const Int& n) {
    Int x = 2, y = 2, d = 1, c = 1;
    for (;;) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        ++c;
    }
}

void factor_mpz_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    // Perfect powers split cheaply and keep rho off worst cases.
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        factor_mpz_into(r, out);
        factor_mpz_into(r, out);
        return;
    }
    Int d = pollard_brent_mpz(n);
    factor_mpz_into(d, out);
    factor_mpz_into(n / d, out);
}

constexpr unsigned long kTrialBound = 1'000'000;

}  // namespace

Int Factorization::value() const {
    Int v = sign;
    for (const auto& pp : factors) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= pw;
    }
    return v;
}

Int Factorization::abs_value() const {
    Int v = value();
    return v < 0 ? Int(-v) : v;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) == 8) {
        return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        u64 v = 0;
        Int m = n;
        for (int i = 0; i < 2; ++i) {
            v |= u64(mpz_get_ui(m.get_mpz_t()) & 0xffffffffull) << (32 * i);
            m >>= 32;
        }
        return is_prime_u64(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factor(const Int& n) {
    if (n == 0) throw ZeroInput("factor: n must be nonzero");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    Int m = n < 0 ? Int(-n) : n;
    if (m == 1) return f;

    std::map<Int, unsigned> acc;
    unsigned long e2 = mpz_scan1(m.get_mpz_t(), 0);
    if (e2 > 0) {
        acc[2] = static_cast<unsigned>(e2);
        m >>= e2;
    }
    for (unsigned long p = 3; p <= kTrialBound; p += 2) {
        if (Int(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            acc[Int(p)] += e;
        }
    }
    if (m > 1) {
        if (mpz_fits_ulong_p(m.get_mpz_t()) && sizeof(unsigned long) == 8) {
            factor_u64_into(mpz_get_ui(m.get_mpz_t()), acc);
        } else {
            factor_mpz_into(m, acc);
        }
    }
    for (const auto& [p, e] : acc) f.factors.push_back({p, e});
    return f;
}

std::vector<Int> divisors(const Factorization& f) {
    Int t = tau(f);
    if (t > 2'000'000) {
        throw LimitTooLarge("divisors: list would exceed 2e6 entries; use for_each_divisor");
    }
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(t.get_ui()));
    for_each_divisor(f, [&](const Int& d) { out.push_back(d); });
    std::sort(out.begin(), out.end());
    return out;
}

Int tau(const Factorization& f) {
    Int t = 1;
    for (const auto& pp : f.factors) t *= pp.exponent + 1;
    return t;
}

Int sigma(const Factorization& f, unsigned nu) {
    if (nu == 0) return tau(f);
    Int s = 1;
    for (const auto& pp : f.factors) {
        // (p^{nu(e+1)} - 1) / (p^nu - 1)
        Int pnu;
        mpz_pow_ui(pnu.get_mpz_t(), pp.prime.get_mpz_t(), nu);
        Int num;
        mpz_pow_ui(num.get_mpz_t(), pnu.get_mpz_t(), pp.exponent + 1);
        num -= 1;
        Int den = pnu - 1;
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        s *= q;
    }
    return s;
}

Int rad(const Factorization& f) {
    Int r = 1;
    for (const auto& pp : f.factors) r *= pp.prime;
    return r;
}

Int total_product_triples(const Int& n) {
    if (n == 0) throw ZeroInput("total_product_triples: N must be nonzero");
    // 4 * sum_{d | |N|} tau(d) = 4 * prod (e+1)(e+2)/2, the ordered
    // three-factorization count including sign patterns.
    Factorization f = factor(n);
    Int t = 4;
    for (const auto& pp : f.factors) {
        t *= Int(pp.exponent + 1) * Int(pp.exponent + 2) / 2;
    }
    return t;
}

std::optional<Int> exact_square_root(const Int& m) {
    if (m < 0) return std::nullopt;
    if (!mpz_perfect_square_p(m.get_mpz_t())) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace cubes
