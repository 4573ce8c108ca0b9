#include "cubes/robin.hpp"

#include <cmath>

#include "cubes/errors.hpp"
#include "cubes/factorization.hpp"
#include "cubes/interval.hpp"

namespace cubes {

namespace {

Interval robin_bound(const Int& n, mpfr_prec_t prec) {
    Interval nn = Interval::of_int(n, prec);
    return Interval::euler_gamma(prec).exp() * nn * nn.log().log();
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            ps.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) comp[j] = true;
        }
    }
    return ps;
}

}  // namespace

RobinVerdict robin_check(const Int& n) {
    if (n < 3) throw DomainError("robin_check: n must be >= 3");
    Int s1 = sigma(factor(n), 1);
    bool holds = decide_int_less(s1, [&](mpfr_prec_t p) { return robin_bound(n, p); });
    return holds ? RobinVerdict::Holds : RobinVerdict::Violated;
}

RobinScan robin_scan(std::uint64_t from, std::uint64_t to) {
    if (from < 3) throw DomainError("robin_scan: range must start at n >= 3");
    RobinScan scan;
    scan.from = from;
    scan.to = to;
    if (to < from) return scan;

    const double exp_gamma = std::exp(0.57721566490153286060651209008240243104);
    auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(to))) + 2;
    auto primes = primes_up_to(root);

    const std::uint64_t kBlock = 1 << 20;
    std::vector<std::uint64_t> rem, sig;
    for (std::uint64_t lo = from; lo <= to; lo += kBlock) {
        std::uint64_t hi = std::min(to, lo + kBlock - 1);
        std::size_t len = static_cast<std::size_t>(hi - lo + 1);
        rem.assign(len, 0);
        sig.assign(len, 1);
        for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;
        for (std::uint32_t p : primes) {
            std::uint64_t p64 = p;
            if (p64 * p64 > hi) break;
            std::uint64_t start = ((lo + p64 - 1) / p64) * p64;
            for (std::uint64_t m = start; m <= hi; m += p64) {
                std::size_t i = static_cast<std::size_t>(m - lo);
                std::uint64_t pe = 1;
                while (rem[i] % p64 == 0) {
                    rem[i] /= p64;
                    pe *= p64;
                }
                // sigma(p^e) = (p^{e+1} - 1)/(p - 1)
                sig[i] *= (pe * p64 - 1) / (p64 - 1);
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (rem[i] > 1) sig[i] *= rem[i] + 1;  // leftover prime factor
        }
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t n = lo + i;
            ++scan.checked;
            bool suspicious;
            if (n <= 5040) {
                suspicious = true;  // out-of-claim region, always decide exactly
            } else {
                double bound = exp_gamma * static_cast<double>(n) *
                               std::log(std::log(static_cast<double>(n)));
                suspicious = static_cast<double>(sig[i]) >= bound * (1.0 - 1e-9);
            }
            if (suspicious && robin_check(Int(static_cast<unsigned long>(n))) == RobinVerdict::Violated) {
                scan.findings.push_back({n, sig[i], n > 5040});
            }
        }
    }
    return scan;
}

}  // namespace cubes
