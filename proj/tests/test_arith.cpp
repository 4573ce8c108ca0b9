#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "cubes/errors.hpp"
#include "cubes/factorization.hpp"
#include "cubes/robin.hpp"

using namespace cubes;

namespace {

// Plain int64 oracle, no Factorization machinery: all ordered signed triples
// (A,B,C) with A*B*C = n.
long raw_triple_count(long n) {
    long cnt = 0;
    long an = std::abs(n);
    for (long a = -an; a <= an; ++a) {
        if (a == 0 || n % a != 0) continue;
        long m = n / a;
        long am = std::abs(m);
        for (long b = -am; b <= am; ++b) {
            if (b == 0 || m % b != 0) continue;
            ++cnt;
        }
    }
    return cnt;
}

}  // namespace

TEST_CASE("factor on the worked examples") {
    Factorization f = factor(12);
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 2);
    CHECK(f.factors[0].exponent == 2);
    CHECK(f.factors[1].prime == 3);
    CHECK(f.factors[1].exponent == 1);

    Factorization g = factor(-8);
    CHECK(g.sign == -1);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].prime == 2);
    CHECK(g.factors[0].exponent == 3);
    CHECK(g.value() == -8);

    Factorization h = factor(90);
    REQUIRE(h.factors.size() == 3);
    CHECK(h.factors[0].prime == 2);
    CHECK(h.factors[1].prime == 3);
    CHECK(h.factors[1].exponent == 2);
    CHECK(h.factors[2].prime == 5);

    CHECK(factor(1).factors.empty());
    CHECK(factor(-1).sign == -1);
    CHECK_THROWS_AS(factor(0), ZeroInput);
}

TEST_CASE("factor beyond the trial-division bound") {
    // prime larger than 10^6
    Factorization p = factor(1'000'003);
    REQUIRE(p.factors.size() == 1);
    CHECK(p.factors[0].prime == 1'000'003);

    // product of two distinct large primes exercises the splitting path
    Int n = Int(1'000'003) * Int(1'000'033);
    Factorization pq = factor(n);
    REQUIRE(pq.factors.size() == 2);
    CHECK(pq.factors[0].prime == 1'000'003);
    CHECK(pq.factors[1].prime == 1'000'033);
    CHECK(pq.value() == n);

    // square of a large prime
    Factorization sq = factor(Int(1'000'003) * Int(1'000'003));
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].exponent == 2);

    Int big = Int("1000000007") * Int("1000000009");
    Factorization f2 = factor(big);
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.value() == big);
}

TEST_CASE("factor reconstructs random inputs with certified primes") {
    std::mt19937_64 gen(42);
    for (int i = 0; i < 300; ++i) {
        long v = static_cast<long>(gen() % 2'000'000'000ULL) - 1'000'000'000L;
        if (v == 0) continue;
        Factorization f = factor(v);
        CHECK(f.value() == v);
        Int prev = 1;
        for (const auto& pp : f.factors) {
            CHECK(pp.prime > prev);
            CHECK(is_prime(pp.prime));
            prev = pp.prime;
        }
    }
}

TEST_CASE("divisor lists") {
    CHECK(divisors(factor(12)) == std::vector<Int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(factor(8)) == std::vector<Int>{1, 2, 4, 8});
    CHECK(divisors(factor(1)) == std::vector<Int>{1});
    CHECK(divisors(factor(-12)) == std::vector<Int>{1, 2, 3, 4, 6, 12});

    std::mt19937_64 gen(7);
    for (int i = 0; i < 200; ++i) {
        long v = static_cast<long>(gen() % 1'000'000ULL) + 2;
        Factorization f = factor(v);
        std::vector<Int> d = divisors(f);
        CHECK(Int(static_cast<long>(d.size())) == tau(f));
        CHECK(d.front() * d.back() == v);
        CHECK(std::is_sorted(d.begin(), d.end()));
    }
}

TEST_CASE("streaming divisor walk matches the materialized list") {
    Int n("963761198400");  // highly composite, tau = 6720
    Factorization f = factor(n);
    long count = 0;
    Int smallest = n, largest = 0, sum = 0;
    for_each_divisor(f, [&](const Int& d) {
        ++count;
        if (d < smallest) smallest = d;
        if (d > largest) largest = d;
        sum += d;
    });
    CHECK(Int(count) == tau(f));
    CHECK(smallest == 1);
    CHECK(largest == n);
    CHECK(sum == sigma(f, 1));
}

TEST_CASE("divisor functions on the worked examples") {
    CHECK(tau(factor(12)) == 6);
    CHECK(sigma(factor(90), 1) == 234);
    CHECK(rad(factor(72)) == 6);
    CHECK(sigma(factor(1), 3) == 1);
    CHECK(tau(factor(1)) == 1);
    CHECK(rad(factor(-90)) == 30);
    CHECK(sigma(factor(5041), 1) == 5113);  // 71^2
}

TEST_CASE("tau, sigma, rad are multiplicative on coprime pairs") {
    std::mt19937_64 gen(1234);
    int done = 0;
    while (done < 300) {
        Int a(static_cast<long>(gen() % 1'000'000ULL) + 2);
        Int b(static_cast<long>(gen() % 1'000'000ULL) + 2);
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        ++done;
        Factorization fa = factor(a), fb = factor(b), fab = factor(a * b);
        CHECK(tau(fab) == tau(fa) * tau(fb));
        CHECK(sigma(fab, 1) == sigma(fa, 1) * sigma(fb, 1));
        CHECK(sigma(fab, 2) == sigma(fa, 2) * sigma(fb, 2));
        CHECK(rad(fab) == rad(fa) * rad(fb));
    }
}

TEST_CASE("ordered triple totals") {
    CHECK(total_product_triples(1) == 4);
    CHECK(total_product_triples(2) == 12);
    CHECK(total_product_triples(8) == 40);
    CHECK(total_product_triples(-8) == 40);
    CHECK_THROWS_AS(total_product_triples(0), ZeroInput);

    for (long n = 1; n <= 200; ++n) {
        long expect = raw_triple_count(n);
        CHECK(total_product_triples(Int(n)) == expect);
        CHECK(total_product_triples(Int(-n)) == expect);
        // second route: 4 * sum of tau over divisors
        Int alt = 0;
        for (const Int& d : divisors(factor(n))) alt += tau(factor(d));
        CHECK(total_product_triples(Int(n)) == 4 * alt);
    }
}

TEST_CASE("exact square root") {
    CHECK(exact_square_root(81) == Int(9));
    CHECK(exact_square_root(0) == Int(0));
    CHECK(!exact_square_root(-4));
    CHECK(!exact_square_root(-1));

    for (long k = 0; k <= 100'000; ++k) {
        Int sq = Int(k) * Int(k);
        auto r = exact_square_root(sq);
        REQUIRE(r.has_value());
        if (*r != k) FAIL("sqrt mismatch at k=", k);
        if (k >= 2) {
            if (exact_square_root(sq + 1)) FAIL("k^2+1 accepted at k=", k);
            if (exact_square_root(sq - 1)) FAIL("k^2-1 accepted at k=", k);
        }
    }
    Int giant("123456789123456789123456789");
    CHECK(exact_square_root(giant * giant) == giant);
    CHECK(!exact_square_root(giant * giant + 2));
}

TEST_CASE("robin bound decisions") {
    CHECK(robin_check(5040) == RobinVerdict::Violated);  // sigma = 19344 vs ~19237
    CHECK(robin_check(5041) == RobinVerdict::Holds);     // sigma = 5113 vs ~19241
    // out-of-claim region, recorded: 720 lands just above the bound
    CHECK(robin_check(720) == RobinVerdict::Violated);  // 2418 vs ~2415.9
    CHECK(robin_check(721) == RobinVerdict::Holds);
    CHECK(robin_check(3) == RobinVerdict::Violated);  // tiny n, bound near zero
    CHECK_THROWS_AS(robin_check(2), DomainError);
    CHECK_THROWS_AS(robin_check(0), DomainError);
}

TEST_CASE("robin scan flags the classical exceptions below 5041") {
    RobinScan scan = robin_scan(3, 7000);
    CHECK(scan.checked == 6998);
    bool saw_5040 = false;
    for (const auto& f : scan.findings) {
        CHECK(!f.in_claim_range);  // nothing above 5040 may fail here
        if (f.n == 5040) {
            saw_5040 = true;
            CHECK(f.sigma1 == 19344);
        }
    }
    CHECK(saw_5040);
    CHECK_THROWS_AS(robin_scan(1, 10), DomainError);
}
