#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace c2 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

// Derived quantities (discriminants, targets, products of primes) must stay
// strictly below 2^63; anything larger is rejected with OverflowError.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_pow(i64 base, unsigned exponent);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exponent, u64 m);
u64 isqrt(u64 n);

/// Deterministic primality for the full 64-bit range (Miller-Rabin with a
/// witness set proven sufficient below 2^64).
bool is_prime(u64 n);

/// Jacobi symbol (a/n) for odd n >= 1. Throws InvalidArgument otherwise.
int jacobi(i64 a, i64 n);

/// Kronecker symbol (a/n) for all (a, n) except (0, 0).
int kronecker(i64 a, i64 n);

struct PrimePower {
    u64 prime;
    unsigned exponent;
    auto operator<=>(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

/// Complete factorization, primes ascending. factorize(1) is empty.
Factorization factorize(u64 n);

bool is_squarefree(u64 n);
int mobius(u64 q);
u64 euler_phi(u64 q);

// Mobius and totient for every q <= limit, by a linear sieve.
class MultiplicativeTable {
public:
    explicit MultiplicativeTable(u64 limit);

    u64 limit() const noexcept { return limit_; }
    int mu(u64 q) const { return mu_.at(q); }
    u64 phi(u64 q) const { return phi_.at(q); }

private:
    u64 limit_;
    std::vector<signed char> mu_;
    std::vector<u64> phi_;
};

}  // namespace c2
