#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <vector>

#include "c2/error.hpp"
#include "c2/primes.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace c2;

namespace {

std::vector<u64> collect(const PrimeTable& t) { return {t.begin(), t.end()}; }

std::filesystem::path temp_path(const char* name) {
    return std::filesystem::temp_directory_path() / (std::string("c2_test_") + name);
}

}  // namespace

TEST_CASE("sieve examples") {
    CHECK(collect(sieve(2, 20)) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(collect(sieve(2, 2)) == std::vector<u64>{2});
    CHECK(collect(sieve(90, 100)) == std::vector<u64>{97});
    CHECK(collect(sieve(24, 28)).empty());
}

TEST_CASE("sieve matches trial division up to 1e5") {
    const auto t = sieve(2, 100000);
    for (u64 n = 2; n <= 100000; ++n) REQUIRE(t.is_prime(n) == oracle::is_prime(n));
    CHECK(t.count() == 9592);
}

TEST_CASE("sieve across several segments") {
    const u64 lo = kSegmentSize - 1000;
    const u64 hi = 2 * kSegmentSize + 1000;
    const auto t = sieve(lo, hi);
    for (u64 n = lo; n < lo + 3000; ++n) REQUIRE(t.is_prime(n) == oracle::is_prime(n));
    for (u64 n = 2 * kSegmentSize - 1000; n <= hi; ++n) REQUIRE(t.is_prime(n) == oracle::is_prime(n));
    u64 prev = 0;
    for (u64 p : t) {
        REQUIRE(p > prev);
        prev = p;
    }
}

TEST_CASE("residue-class iteration") {
    const auto t = sieve(2, 20000);
    for (unsigned r : {1u, 3u, 5u, 7u}) {
        std::vector<u64> expected;
        for (u64 p = 2; p <= 20000; ++p) {
            if (p % 8 == r && oracle::is_prime(p)) expected.push_back(p);
        }
        std::vector<u64> got;
        for (u64 p : t.residue_class(r)) got.push_back(p);
        CHECK(got == expected);
    }
}

TEST_CASE("sieve errors") {
    CHECK_THROWS_AS(sieve(1, 10), InvalidArgument);
    CHECK_THROWS_AS(sieve(10, 9), InvalidArgument);
    try {
        sieve(2, 1000, 100);
        FAIL("expected range-too-large");
    } catch (const RangeError& e) {
        CHECK(e.code() == "range-too-large");
    }
    const auto t = sieve(100, 200);
    try {
        (void)t.is_prime(99);
        FAIL("expected insufficient-table-range");
    } catch (const RangeError& e) {
        CHECK(e.code() == "insufficient-table-range");
    }
}

TEST_CASE("slice") {
    const auto t = sieve(2, 5000);
    const auto s = t.slice(1000, 1100);
    CHECK(s == sieve(1000, 1100));
    CHECK_THROWS_AS(t.slice(1, 100), RangeError);
    CHECK_THROWS_AS(t.slice(4000, 6000), RangeError);
}

TEST_CASE("sieve cache round trip") {
    const auto path = temp_path("roundtrip.bin");
    std::filesystem::remove(path);
    const auto fresh = sieve(2, 123457);
    save_sieve_cache(path, fresh);
    const auto loaded = load_sieve_cache(path);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == fresh);

    // cached and uncached paths give identical tables, including sub-ranges
    CHECK(sieve_cached(2, 123457, path) == fresh);
    CHECK(sieve_cached(500, 90000, path) == sieve(500, 90000));
    std::filesystem::remove(path);
}

TEST_CASE("sieve_cached writes a missing cache and rebuilds a short one") {
    const auto path = temp_path("grow.bin");
    std::filesystem::remove(path);
    CHECK(sieve_cached(2, 1000, path) == sieve(2, 1000));
    REQUIRE(std::filesystem::exists(path));
    CHECK(sieve_cached(2, 5000, path) == sieve(2, 5000));
    const auto stored = load_sieve_cache(path);
    REQUIRE(stored.has_value());
    CHECK(stored->hi() == 5000);
    std::filesystem::remove(path);
}

TEST_CASE("corrupt cache files are ignored") {
    const auto path = temp_path("corrupt.bin");
    const auto good = sieve(2, 1000);
    save_sieve_cache(path, good);
    {
        std::filesystem::resize_file(path, std::filesystem::file_size(path) - 5);
    }
    CHECK_FALSE(load_sieve_cache(path).has_value());
    CHECK(sieve_cached(2, 1000, path) == good);

    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "not a sieve cache at all";
    }
    CHECK_FALSE(load_sieve_cache(path).has_value());
    CHECK_FALSE(load_sieve_cache(temp_path("does_not_exist.bin")).has_value());
    std::filesystem::remove(path);
}
