#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "cubes/errors.hpp"
#include "cubes/product_sum.hpp"
#include "cubes/records.hpp"
#include "cubes/representations.hpp"

using namespace cubes;

TEST_CASE("height-zero counts on the known values") {
    CHECK(zero_height_count(90) == 12);
    CHECK(zero_height_count(720) == 18);
    CHECK(zero_height_count(6) == 3);
    CHECK(zero_height_count(12) == 0);
    CHECK(zero_height_count(5) == 0);   // 3 does not divide
    CHECK(zero_height_count(9) == 0);   // n/3 odd
    CHECK(zero_height_count(-90) == 12);
    CHECK_THROWS_AS(zero_height_count(0), ZeroInput);
}

TEST_CASE("divisor criterion equals positivity of the count") {
    CHECK(zero_height_divisor_criterion(90));   // d = 5: 8100/225 - 20 = 16
    CHECK(!zero_height_divisor_criterion(4));   // not 0 mod 6
    CHECK(!zero_height_divisor_criterion(12));  // xyz = 4 with sum 0 has no solution
    CHECK_THROWS_AS(zero_height_divisor_criterion(0), ZeroInput);

    for (long n = 6; n <= 10'000; n += 6) {
        bool crit = zero_height_divisor_criterion(Int(n));
        bool positive = zero_height_count(Int(n)) > 0;
        if (crit != positive) FAIL("criterion mismatch at n=", n);
    }
}

TEST_CASE("record scan to 100 reports the early maxima") {
    std::vector<RecordEntry> entries = record_scan(100);
    std::vector<std::pair<long, long>> maxima;
    for (const auto& e : entries) {
        CHECK(mod_u(e.n, 6) == 0);
        if (e.is_new_max) {
            maxima.push_back({to_int64(e.n), to_int64(e.count)});
        }
    }
    CHECK(maxima == std::vector<std::pair<long, long>>{{6, 3}, {18, 6}, {90, 12}});
}

TEST_CASE("record scan to 1e5 contains the record sequence prefix") {
    std::vector<RecordEntry> entries = record_scan(100'000);
    std::map<long, long> first_of_count;
    for (const auto& e : entries) {
        long c = to_int64(e.count);
        if (!first_of_count.count(c)) first_of_count[c] = to_int64(e.n);
    }
    CHECK(first_of_count[12] == 90);
    CHECK(first_of_count[18] == 720);
    CHECK(first_of_count[24] == 19440);
    CHECK(first_of_count[30] == 55440);
}

TEST_CASE("record scan is deterministic across thread counts") {
    std::vector<RecordEntry> a = record_scan(30'000, 1);
    std::vector<RecordEntry> b = record_scan(30'000, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].count == b[i].count);
        CHECK(a[i].is_new_max == b[i].is_new_max);
    }
}

TEST_CASE("record scan agrees with the representation count at height zero") {
    for (const auto& e : record_scan(5'000)) {
        RepResult rc = rep_count({e.n, 0});
        CHECK(rc.count == e.count);
    }
}

TEST_CASE("height-zero solutions carry product n/3") {
    for (long n : {6L, 18L, 90L, 720L, 19440L}) {
        for (const CubeTriple& c : rep_enumerate({Int(n), 0})) {
            CHECK(c.x + c.y + c.z == 0);
            CHECK(c.x * c.y * c.z == Int(n) / 3);
            CHECK(cube(c.x) + cube(c.y) + cube(c.z) == n);
        }
    }
}

TEST_CASE("limit cap") {
    CHECK_THROWS_AS(record_scan(Int("10000001")), LimitTooLarge);
    CHECK(record_scan(5).empty());
}

TEST_CASE("height-zero orbits decompose into sizes 1, 3, 6") {
    for (long n = 6; n <= 10'000; n += 6) {
        Int count = zero_height_count(Int(n));
        if (count == 0) continue;
        std::vector<ProductSumTriple> sols = enumerate_triples({Int(n) / 3, 0});
        REQUIRE(Int(static_cast<long>(sols.size())) == count);
        // group by sorted coordinates; orbit size 6 for distinct, 3 for a pair,
        // 1 for equal coordinates (impossible here: 3a^3 = n, sum 3a = 0 forces a = 0)
        std::map<std::string, long> orbit_count;
        for (const auto& s : sols) {
            std::multiset<Int> key{s.a, s.b, s.c};
            std::string rep;
            for (const Int& v : key) rep += to_string(v) + ",";
            orbit_count[rep] += 1;
        }
        long total = 0;
        for (const auto& [key, size] : orbit_count) {
            if (size != 1 && size != 3 && size != 6) {
                FAIL("orbit of size ", size, " at n=", n);
            }
            total += size;
        }
        CHECK(Int(total) == count);
    }
}

TEST_CASE("sigma ratio reports") {
    SigmaRatioReport a = sigma_ratio(5041);
    CHECK(a.sigma1 == 5113);
    CHECK(a.ratio_decimal.substr(0, 12) == "2.6573342284");
    CHECK(!a.in_s);
    CHECK(a.ratio == doctest::Approx(0.2657334228).epsilon(1e-9));

    SigmaRatioReport b = sigma_ratio(55440);
    CHECK(b.in_s);  // ratio ~0.9833, inside (0.85, 1)

    SigmaRatioReport c = sigma_ratio(10080);
    CHECK(c.in_s);  // ratio ~0.9858

    SigmaRatioReport d = sigma_ratio(7919);  // a prime: sigma small, ratio far below 0.85
    CHECK(!d.in_s);

    CHECK_THROWS_AS(sigma_ratio(5040), DomainError);
    CHECK_THROWS_AS(sigma_ratio(100), DomainError);
}
