#include "c2/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "c2/error.hpp"

namespace c2 {

i64 checked_add(i64 a, i64 b) {
    i64 r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer addition exceeds 2^63",
                            std::to_string(a) + "+" + std::to_string(b));
    }
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer product exceeds 2^63",
                            std::to_string(a) + "*" + std::to_string(b));
    }
    return r;
}

i64 checked_pow(i64 base, unsigned exponent) {
    i64 result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        result = checked_mul(result, base);
    }
    return result;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exponent, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

constexpr std::array<u64, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Sinclair's seven bases: no strong pseudoprime to all of them below 2^64.
constexpr std::array<u64, 7> kWitnesses = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};

bool strong_probable_prime(u64 n, u64 base, u64 odd, unsigned twos) {
    base %= n;
    if (base == 0) return true;
    u64 x = powmod(base, odd, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < twos; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

int jacobi_unsigned(u64 a, u64 n) {
    // n odd, a already reduced mod n
    int result = 1;
    while (a != 0) {
        const int twos = std::countr_zero(a);
        a >>= twos;
        if ((twos & 1) && (n % 8 == 3 || n % 8 == 5)) result = -result;
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? result : 0;
}

u64 reduce_mod(i64 a, u64 n) {
    const i128 r = static_cast<i128>(a) % static_cast<i128>(n);
    return static_cast<u64>(r < 0 ? r + n : r);
}

u64 pollard_brent(u64 n, u64 c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += kBatch;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (u64 c = 1;; ++c) {
        const u64 d = pollard_brent(n, c);
        if (d != n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : kSmallPrimes) {
        if (n % p == 0) return n == p;
    }
    if (n < 37 * 37) return true;
    const unsigned twos = static_cast<unsigned>(std::countr_zero(n - 1));
    const u64 odd = (n - 1) >> twos;
    return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                       [&](u64 b) { return strong_probable_prime(n, b, odd, twos); });
}

int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) {
        throw InvalidArgument("jacobi symbol needs an odd positive modulus", std::to_string(n));
    }
    return jacobi_unsigned(reduce_mod(a, static_cast<u64>(n)), static_cast<u64>(n));
}

int kronecker(i64 a, i64 n) {
    if (n == 0) {
        if (a == 0) throw InvalidArgument("kronecker symbol (0/0) is undefined", "0,0");
        return (a == 1 || a == -1) ? 1 : 0;
    }
    int result = 1;
    u64 m = 0;
    if (n < 0) {
        m = static_cast<u64>(-(n + 1)) + 1;
        if (a < 0) result = -1;
    } else {
        m = static_cast<u64>(n);
    }
    const int twos = std::countr_zero(m);
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        const u64 a8 = reduce_mod(a, 8);
        if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
        m >>= twos;
    }
    if (m == 1) return result;
    return result * jacobi_unsigned(reduce_mod(a, m), m);
}

Factorization factorize(u64 n) {
    if (n == 0) throw InvalidArgument("cannot factor 0");
    std::vector<u64> primes;
    for (u64 p : kSmallPrimes) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());

    Factorization result;
    for (u64 p : primes) {
        if (!result.empty() && result.back().prime == p) {
            ++result.back().exponent;
        } else {
            result.push_back({p, 1});
        }
    }
    return result;
}

bool is_squarefree(u64 n) {
    const auto f = factorize(n);
    return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

int mobius(u64 q) {
    int result = 1;
    for (const auto& [p, e] : factorize(q)) {
        if (e > 1) return 0;
        result = -result;
    }
    return result;
}

u64 euler_phi(u64 q) {
    u64 result = q;
    for (const auto& pp : factorize(q)) {
        result = result / pp.prime * (pp.prime - 1);
    }
    return result;
}

MultiplicativeTable::MultiplicativeTable(u64 limit)
    : limit_(limit), mu_(limit + 1, 0), phi_(limit + 1, 0) {
    std::vector<u64> primes;
    std::vector<bool> composite(limit + 1, false);
    if (limit >= 1) {
        mu_[1] = 1;
        phi_[1] = 1;
    }
    for (u64 i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu_[i] = -1;
            phi_[i] = i - 1;
        }
        for (u64 p : primes) {
            const u64 ip = i * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu_[ip] = 0;
                phi_[ip] = phi_[i] * p;
                break;
            }
            mu_[ip] = static_cast<signed char>(-mu_[i]);
            phi_[ip] = phi_[i] * (p - 1);
        }
    }
}

}  // namespace c2
