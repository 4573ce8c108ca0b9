#include "cubes/abc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "cubes/errors.hpp"
#include "cubes/factorization.hpp"

namespace cubes {

namespace {

using i64 = std::int64_t;
using u128 = unsigned __int128;

void require_k16(const Int& k, const char* who) {
    if (k < 16) throw DomainError(std::string(who) + ": requires rad >= 16");
}

// Inner factor of the refined radical bound:
// 4 sqrt(3 log k / L) (1 + log L/(2L) + C/L), L = log log k.
Interval bound_exponent(const Interval& log_k, const Interval& c, mpfr_prec_t prec) {
    Interval big_l = log_k.log();
    Interval one = Interval::of_long(1, prec);
    Interval lead = (Interval::of_long(3, prec) * log_k / big_l).sqrt() *
                    Interval::of_long(4, prec);
    Interval corr = one + big_l.log() / (Interval::of_long(2, prec) * big_l) + c / big_l;
    return lead * corr;
}

}  // namespace

AbcTriple make_abc_triple(const Int& x, const Int& y) {
    if (x <= 0 || y <= 0) throw DomainError("make_abc_triple: x, y must be positive");
    AbcTriple t;
    t.x = x;
    t.y = y;
    t.z = x + y;
    t.n = x * y * t.z;
    t.k = rad(factor(t.n));
    return t;
}

Int reduced_count(const Int& n) {
    if (n == 0) throw ZeroInput("reduced_count: n must be nonzero");
    return count_triples_formula({-n, -1});
}

Int reduced_count_square_form(const Int& n) {
    if (n == 0) throw ZeroInput("reduced_count_square_form: n must be nonzero");
    Int indicator_sum = 0;
    Int zero_disc = 0;
    for_each_divisor(factor(n), [&](const Int& d0) {
        Int q = n / d0;  // signed n over positive divisor
        Int pair = q - 1;
        if (exact_square_root(pair * pair - 4 * d0)) indicator_sum += 1;
        if (pair * pair == 4 * d0) zero_disc += 1;
        Int pair_neg = -q - 1;
        if (exact_square_root(pair_neg * pair_neg + 4 * d0)) indicator_sum += 1;
    });
    return 2 * indicator_sum - zero_disc;
}

std::vector<PrimeFamilyEntry> prime_family(unsigned nu_max) {
    if (nu_max > 10'000) throw LimitTooLarge("prime_family: nu capped at 10^4");
    std::vector<PrimeFamilyEntry> out;
    if (nu_max == 0) return out;
    // sieve enough primes for p_{nu_max + 1}
    std::size_t want = nu_max + 1;
    std::size_t bound = 32;
    if (want > 10) {
        double w = static_cast<double>(want);
        bound = static_cast<std::size_t>(w * (std::log(w) + std::log(std::log(w))) * 1.2) + 32;
    }
    std::vector<bool> comp(bound + 1, false);
    std::vector<i64> primes;
    for (std::size_t i = 2; i <= bound && primes.size() < want + 1; ++i) {
        if (!comp[i]) {
            primes.push_back(static_cast<i64>(i));
            for (std::size_t j = i * i; j <= bound; j += i) comp[j] = true;
        }
    }
    for (unsigned nu = 1; nu <= nu_max; ++nu) {
        PrimeFamilyEntry e;
        e.index = nu;
        e.p = primes[nu - 1];
        e.p1 = primes[nu];
        Int s = 1 + e.p + e.p1;
        e.n = e.p * e.p1 * s;
        e.witness = {e.p, e.p1, -s};
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<AbcTriple> positive_solutions(const Int& n) {
    if (n <= 0) throw DomainError("positive_solutions: n must be positive");
    std::vector<AbcTriple> out;
    if (fits_int64(n)) {
        i64 nn = to_int64(n);
        for (i64 x = 1; u128(x) * (x + 1) <= u128(nn); ++x) {
            for (i64 y = 1;; ++y) {
                u128 p = u128(x) * y * (x + y);
                if (p > u128(nn)) break;
                if (p == u128(nn)) {
                    AbcTriple t;
                    t.x = x;
                    t.y = y;
                    t.z = x + y;
                    t.n = n;
                    t.k = rad(factor(n));
                    out.push_back(std::move(t));
                }
            }
        }
    } else {
        for (Int x = 1; x * (x + 1) <= n; ++x) {
            for (Int y = 1;; ++y) {
                Int p = x * y * (x + y);
                if (p > n) break;
                if (p == n) {
                    AbcTriple t;
                    t.x = x;
                    t.y = y;
                    t.z = x + y;
                    t.n = n;
                    t.k = rad(factor(n));
                    out.push_back(std::move(t));
                }
            }
        }
    }
    return out;  // loop order is already (x, y) ascending
}

PreciseValue rst_bound(const Int& k, const mpq_class& c, std::size_t digits) {
    require_k16(k, "rst_bound");
    auto eval = [&](mpfr_prec_t p) {
        Interval kk = Interval::of_int(k, p);
        Interval cc = Interval::of_rational(c, p);
        return kk * bound_exponent(kk.log(), cc, p).exp();
    };
    return evaluate_to_digits(eval, digits);
}

PreciseValue implied_c_rational(const mpq_class& z, const Int& k, std::size_t digits) {
    require_k16(k, "implied_c");
    if (z <= 0) throw DomainError("implied_c: z must be positive");
    auto eval = [&](mpfr_prec_t p) {
        Interval kk = Interval::of_int(k, p);
        Interval log_k = kk.log();
        Interval big_l = log_k.log();
        Interval zz = Interval::of_rational(z, p);
        Interval lead = (Interval::of_long(3, p) * log_k / big_l).sqrt() *
                        Interval::of_long(4, p);
        Interval one = Interval::of_long(1, p);
        Interval target = (zz / kk).log() / lead;  // = 1 + log L/(2L) + C/L
        return big_l * (target - one - big_l.log() / (Interval::of_long(2, p) * big_l));
    };
    return evaluate_to_digits(eval, digits);
}

PreciseValue implied_c(const Int& z, const Int& k, std::size_t digits) {
    return implied_c_rational(mpq_class(z), k, digits);
}

namespace {

struct HuntCandidate {
    double c_est;
    i64 x, y, z, n, k;
};

struct PairRecord {
    i64 n, z, x, y;
};

// distinct primes of v merged into dst (dst stays sorted, deduped)
void merge_primes(i64 v, const std::vector<std::int32_t>& spf, std::vector<i64>& dst) {
    while (v > 1) {
        i64 p = spf[static_cast<std::size_t>(v)];
        auto it = std::lower_bound(dst.begin(), dst.end(), p);
        if (it == dst.end() || *it != p) dst.insert(it, p);
        while (v % p == 0) v /= p;
    }
}

}  // namespace

HuntResult hunt_high_quality(const Int& x_max, unsigned top, unsigned threads) {
    if (x_max > 100'000) throw LimitTooLarge("hunt_high_quality: x_max capped at 10^5");
    HuntResult result;
    if (x_max < 1 || top == 0) return result;
    i64 xm = to_int64(x_max);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    auto nthreads = static_cast<i64>(std::min<i64>(threads, xm));

    // smallest prime factor up to 2*x_max, for radicals
    std::vector<std::int32_t> spf(static_cast<std::size_t>(2 * xm + 1), 0);
    for (i64 i = 2; i <= 2 * xm; ++i) {
        if (spf[static_cast<std::size_t>(i)] == 0) {
            for (i64 j = i; j <= 2 * xm; j += i) {
                if (spf[static_cast<std::size_t>(j)] == 0) {
                    spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
                }
            }
        }
    }

    const std::size_t keep = top + 256;
    std::vector<std::vector<HuntCandidate>> cands(static_cast<std::size_t>(nthreads));
    std::vector<std::vector<PairRecord>> pairs(static_cast<std::size_t>(nthreads));
    std::vector<std::thread> workers;
    for (i64 w = 0; w < nthreads; ++w) {
        workers.emplace_back([&, w] {
            auto& my_cands = cands[static_cast<std::size_t>(w)];
            auto& my_pairs = pairs[static_cast<std::size_t>(w)];
            std::vector<i64> prs;
            for (i64 x = w + 1; x <= xm; x += nthreads) {
                for (i64 y = x; y <= xm; ++y) {
                    i64 z = x + y;
                    i64 n = x * y * z;
                    my_pairs.push_back({n, z, x, y});
                    if (std::gcd(x, y) != 1) continue;  // rank primitive triples only
                    prs.clear();
                    merge_primes(x, spf, prs);
                    merge_primes(y, spf, prs);
                    merge_primes(z, spf, prs);
                    i64 k = 1;
                    for (i64 p : prs) k *= p;
                    if (k < 16) continue;
                    double kd = static_cast<double>(k);
                    double lk = std::log(kd);
                    double ll = std::log(lk);
                    double c_est = ll * (std::log(static_cast<double>(z) / kd) /
                                             (4.0 * std::sqrt(3.0 * lk / ll)) -
                                         1.0 - std::log(ll) / (2.0 * ll));
                    if (my_cands.size() >= keep && c_est <= my_cands.front().c_est) continue;
                    my_cands.push_back({c_est, x, y, z, n, k});
                    std::push_heap(my_cands.begin(), my_cands.end(),
                                   [](const HuntCandidate& a, const HuntCandidate& b) {
                                       return a.c_est > b.c_est;
                                   });
                    if (my_cands.size() > keep) {
                        std::pop_heap(my_cands.begin(), my_cands.end(),
                                      [](const HuntCandidate& a, const HuntCandidate& b) {
                                          return a.c_est > b.c_est;
                                      });
                        my_cands.pop_back();
                    }
                }
            }
        });
    }
    for (auto& th : workers) th.join();

    // merge candidates, refine the top slice with exact interval values
    std::vector<HuntCandidate> merged;
    for (auto& c : cands) merged.insert(merged.end(), c.begin(), c.end());
    std::sort(merged.begin(), merged.end(), [](const HuntCandidate& a, const HuntCandidate& b) {
        if (a.c_est != b.c_est) return a.c_est > b.c_est;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    std::size_t cut = std::min(merged.size(), static_cast<std::size_t>(top) + 64);
    if (cut < merged.size() && top <= merged.size()) {
        double threshold = merged[top - 1].c_est - 1e-9;
        while (cut < merged.size() && merged[cut].c_est > threshold) ++cut;
    }
    merged.resize(cut);

    struct Refined {
        AbcReport rep;
        mpq_class q_approx;
    };
    std::vector<Refined> refined;
    refined.reserve(merged.size());
    for (const auto& c : merged) {
        Refined r;
        r.rep.triple.x = c.x;
        r.rep.triple.y = c.y;
        r.rep.triple.z = c.z;
        r.rep.triple.n = c.n;
        r.rep.triple.k = c.k;
        PreciseValue cv = implied_c(Int(c.z), Int(c.k), 40);
        r.rep.implied_c = cv.value;
        r.rep.c_decimal = cv.decimal;
        r.rep.c_approx = cv.approx;
        Int zz(c.z), kk(c.k);
        PreciseValue qv = evaluate_to_digits(
            [&](mpfr_prec_t p) {
                return Interval::of_int(zz, p).log() / Interval::of_int(kk, p).log();
            },
            20);
        r.rep.q = qv.value;
        r.rep.q_decimal = qv.decimal;
        r.q_approx = qv.approx;
        refined.push_back(std::move(r));
    }
    std::sort(refined.begin(), refined.end(), [](const Refined& a, const Refined& b) {
        if (a.rep.c_approx != b.rep.c_approx) return a.rep.c_approx > b.rep.c_approx;
        if (a.q_approx != b.q_approx) return a.q_approx > b.q_approx;
        if (a.rep.triple.x != b.rep.triple.x) return a.rep.triple.x < b.rep.triple.x;
        return a.rep.triple.y < b.rep.triple.y;
    });
    if (refined.size() > top) refined.resize(top);
    for (auto& r : refined) result.top.push_back(std::move(r.rep));

    // mean z per n over ordered solutions, for n with >= 2 unordered pairs
    std::vector<PairRecord> all_pairs;
    std::size_t total = 0;
    for (auto& p : pairs) total += p.size();
    all_pairs.reserve(total);
    for (auto& p : pairs) all_pairs.insert(all_pairs.end(), p.begin(), p.end());
    std::sort(all_pairs.begin(), all_pairs.end(), [](const PairRecord& a, const PairRecord& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    for (std::size_t i = 0; i < all_pairs.size();) {
        std::size_t j = i;
        i64 n = all_pairs[i].n;
        unsigned ordered = 0;
        i64 sum_z = 0;
        while (j < all_pairs.size() && all_pairs[j].n == n) {
            unsigned mult = all_pairs[j].x == all_pairs[j].y ? 1 : 2;
            ordered += mult;
            sum_z += mult * all_pairs[j].z;
            ++j;
        }
        if (j - i >= 2) {
            MeanZEntry e;
            e.n = n;
            e.ordered_solutions = ordered;
            e.mean_z = mpq_class(Int(sum_z), Int(ordered));
            e.mean_z.canonicalize();
            e.radical = rad(factor(Int(n)));
            result.mean_z.push_back(std::move(e));
        }
        i = j;
    }
    return result;
}

std::vector<BoundReportRow> radical_bound_report(const Int& lo, const Int& hi,
                                                 const mpq_class& eps) {
    if (eps <= 0) throw DomainError("radical_bound_report: eps must be positive");
    std::vector<BoundReportRow> out;
    Int start = lo;
    // only n = 0 (mod 6) can have height-zero solutions
    while (mod_u(start, 6) != 0) ++start;
    for (Int n = start; n <= hi; n += 6) {
        if (n == 0) continue;
        std::vector<ProductSumTriple> sols = enumerate_triples({n / 3, 0});
        if (sols.empty()) continue;
        BoundReportRow row;
        row.n = n;
        row.coord_sum_max = 0;
        for (const auto& s : sols) {
            Int sum = abs(s.a) + abs(s.b) + abs(s.c);
            if (sum > row.coord_sum_max) row.coord_sum_max = sum;
        }
        row.radical = rad(factor(n));
        mpq_class expo = eps + 1;
        auto eval = [&](mpfr_prec_t p) {
            return (Interval::of_rational(expo, p) *
                    Interval::of_int(row.radical, p).log())
                .exp();
        };
        PreciseValue pv = evaluate_to_digits(eval, 20);
        row.rad_pow_decimal = pv.decimal;
        mpq_class k_ratio = mpq_class(row.coord_sum_max) / pv.approx;
        row.implied_k = k_ratio.get_d();
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace cubes
