#include "cubes/records.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cubes/errors.hpp"
#include "cubes/factorization.hpp"
#include "cubes/interval.hpp"
#include "cubes/product_sum.hpp"

namespace cubes {

Int zero_height_count(const Int& n) {
    if (n == 0) throw ZeroInput("zero_height_count: n must be nonzero");
    if (!divisible_u(n, 3)) return 0;
    Int m = n / 3;
    if (is_odd(m)) return 0;
    return count_triples_formula({m, 0});
}

bool zero_height_divisor_criterion(const Int& n) {
    if (n == 0) throw ZeroInput("zero_height_divisor_criterion: n must be nonzero");
    if (mod_u(n, 6) != 0) return false;
    Int m = n / 3;
    bool found = false;
    for_each_divisor(factor(m), [&](const Int& d0) {
        if (found) return;
        Int q = m / d0;  // n/(3d) up to sign
        if (exact_square_root(q * q - 4 * d0) || exact_square_root(q * q + 4 * d0)) {
            found = true;
        }
    });
    return found;
}

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// R(0,n) for n = 0 (mod 6) in the int64 range of the scan: walk signed
// divisors d of m = n/3 and apply the square-discriminant test directly.
i64 zero_height_count_i64(i64 m) {
    // factor m by trial division; m <= limit/3 <= ~3.3e6 so sqrt(m) is tiny
    i64 rest = m;
    i64 primes[16];
    unsigned exps[16];
    int np = 0;
    for (i64 p = 2; p * p <= rest; p = (p == 2 ? 3 : p + 2)) {
        if (rest % p) continue;
        unsigned e = 0;
        do {
            rest /= p;
            ++e;
        } while (rest % p == 0);
        primes[np] = p;
        exps[np++] = e;
    }
    if (rest > 1) {
        primes[np] = rest;
        exps[np++] = 1;
    }
    unsigned idx[16] = {0};
    i64 d = 1;
    i64 total = 0, zero_disc = 0;
    auto is_sq = [](i64 v) {
        if (v < 0) return false;
        auto r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r * r == v;
    };
    for (;;) {
        i64 q = m / d;
        i64 disc_pos = q * q - 4 * d;
        if (disc_pos >= 0 && is_sq(disc_pos)) total += 2;
        if (disc_pos == 0) zero_disc += 1;
        if (is_sq(q * q + 4 * d)) total += 2;
        int i = 0;
        for (; i < np; ++i) {
            if (idx[i] < exps[i]) {
                ++idx[i];
                d *= primes[i];
                break;
            }
            for (unsigned k = 0; k < idx[i]; ++k) d /= primes[i];
            idx[i] = 0;
        }
        if (i == np) break;
    }
    return total - zero_disc;
}

}  // namespace

std::vector<RecordEntry> record_scan(const Int& limit, unsigned threads) {
    if (limit > 10'000'000) throw LimitTooLarge("record_scan: limit capped at 10^7");
    std::vector<RecordEntry> out;
    if (limit < 6) return out;
    i64 lim = to_int64(limit);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    i64 values = lim / 6;
    auto nthreads = static_cast<i64>(std::min<u64>(threads, static_cast<u64>(values)));

    std::vector<std::vector<RecordEntry>> parts(nthreads);
    std::vector<std::thread> workers;
    for (i64 w = 0; w < nthreads; ++w) {
        workers.emplace_back([&, w] {
            i64 first = 1 + w * values / nthreads;
            i64 last = (w + 1) * values / nthreads;  // inclusive, n = 6*k
            auto& mine = parts[static_cast<std::size_t>(w)];
            for (i64 k = first; k <= last; ++k) {
                i64 n = 6 * k;
                i64 c = zero_height_count_i64(n / 3);
                if (c > 0) mine.push_back({Int(n), Int(c), false});
            }
        });
    }
    for (auto& th : workers) th.join();
    for (auto& part : parts) {
        out.insert(out.end(), part.begin(), part.end());
    }
    Int best = 0;
    for (auto& e : out) {
        if (e.count > best) {
            e.is_new_max = true;
            best = e.count;
        }
    }
    return out;
}

SigmaRatioReport sigma_ratio(const Int& n) {
    if (n <= 5040) throw DomainError("sigma_ratio: requires n > 5040");
    SigmaRatioReport rep;
    rep.n = n;
    rep.sigma1 = sigma(factor(n), 1);
    auto eval = [&](mpfr_prec_t p) {
        Interval nn = Interval::of_int(n, p);
        Interval bound = Interval::euler_gamma(p).exp() * nn * nn.log().log();
        return Interval::of_int(rep.sigma1, p) / bound;
    };
    PreciseValue v = evaluate_to_digits(eval, 32);
    rep.ratio_decimal = v.decimal;
    rep.ratio = v.value;
    bool above = !decide_less_than_rational(eval, mpq_class(17, 20));  // ratio > 0.85
    bool below = decide_less_than_rational(eval, mpq_class(1));        // ratio < 1
    rep.in_s = above && below;
    return rep;
}

}  // namespace cubes
