#pragma once

#include <functional>
#include <string>
#include <vector>

#include "c2/arith.hpp"
#include "c2/forms.hpp"
#include "c2/primes.hpp"

namespace c2 {

/// A verified construction of Q(sqrt(-d)) with cyclic 2-class group of
/// order exactly 2^k.
struct Certificate {
    unsigned k = 0;
    i64 M = 0;
    i64 w = 0;   // 2 M^2
    i64 n = 0;   // 4 w^(2^(k-1)) = p1 + p2
    i64 x = 0;   // p1 = n/2 +- x
    i64 p1 = 0;  // 5 (mod 8)
    i64 p2 = 0;  // 3 (mod 8)
    i64 d = 0;   // p1 p2 = 4 w^(2^k) - x^2
    bool symbol_ok = false;
    ClassGroup2Summary oracle;

    bool operator==(const Certificate&) const = default;
};

/// n = 4 (2 M^2)^(2^(k-1)) = 2^(2 + 2^(k-1)) M^(2^k). Throws OverflowError
/// naming (k, M).
i64 target(unsigned k, i64 M);

enum class PairFilter {
    mod8,  // p1 = 5, p2 = 3 (mod 8): the certificate-producing classes
    mod4,  // p1 = 1, p2 = 3 (mod 4): adds p1 = 1 (mod 8) negative examples
};

struct PrimePair {
    i64 p1;
    i64 p2;
    bool operator==(const PrimePair&) const = default;
};

/// All prime pairs p1 + p2 = target(k, M) in the requested classes, p1
/// ascending. The table must cover [3, n - 3].
std::vector<PrimePair> find_pairs(unsigned k, i64 M, const PrimeTable& table,
                                  PairFilter filter = PairFilter::mod8);

/// Outcome of running both the symbol test and the forms oracle on a pair
/// satisfying the mod-4 hypotheses. Produced for failing pairs too.
struct Examination {
    unsigned k = 0;
    i64 M = 0;
    i64 w = 0;
    i64 n = 0;
    i64 x = 0;
    i64 p1 = 0;
    i64 p2 = 0;
    i64 d = 0;
    bool symbol_ok = false;
    u64 j_order = 0;  // order of the class of (w, x, w^(2m-1))
    ClassGroup2Summary oracle;

    bool oracle_exact() const { return oracle.two_part == (u64{1} << k); }
};

inline constexpr i64 kDefaultMaxDiscriminant = 1'000'000'000;

/// Runs the exact-order test and the class-group oracle without requiring the
/// mod-8 classes. Throws Rejection for pairs outside the hypotheses
/// (reason names the failed invariant) and InternalError whenever the two
/// independent routes disagree or a proven invariant fails.
Examination examine(unsigned k, i64 M, i64 p1, i64 p2, i64 max_d = kDefaultMaxDiscriminant);

/// Full certification: examine() plus every Certificate invariant.
/// Rejection reasons include "p1-mod8", "p2-mod8", "d-not-squarefree",
/// "d-too-large" and "symbol-test-failed".
Certificate certify(unsigned k, i64 M, i64 p1, i64 p2, i64 max_d = kDefaultMaxDiscriminant);

Certificate to_certificate(const Examination& e);

struct SearchLimits {
    i64 max_d = kDefaultMaxDiscriminant;
    unsigned threads = 0;  // 0 = hardware concurrency
    PairFilter filter = PairFilter::mod8;
    u64 max_sieve_span = kDefaultMaxSpan;
};

struct SearchRejection {
    i64 M;
    i64 p1;
    i64 p2;
    std::string reason;
};

struct SearchResult {
    std::vector<Certificate> certificates;    // M ascending, then p1
    std::vector<Examination> examinations;    // every pair that reached the oracle
    std::vector<SearchRejection> rejections;  // same order
};

/// Largest target over M in [M_lo, M_hi], after checking that every target
/// and every discriminant below it fits in 63 bits. Throws OverflowError
/// naming the smallest offending (k, M).
i64 search_ceiling(unsigned k, i64 M_lo, i64 M_hi);

/// Certifies every pair for M in [M_lo, M_hi]. Output order is
/// deterministic and independent of the thread count. Throws OverflowError
/// before any work if some target or its discriminants leave the 63-bit range.
SearchResult search(unsigned k, i64 M_lo, i64 M_hi, const SearchLimits& limits = {},
                    const PrimeTable* table = nullptr);

}  // namespace c2
