#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// code path it is used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline int mobius(u64 n) {
    int r = 1;
    for (auto [p, e] : factor(n)) {
        if (e > 1) return 0;
        r = -r;
    }
    return r;
}

inline u64 phi(u64 n) {
    u64 count = 0;
    for (u64 r = 1; r <= n; ++r) count += std::gcd(r, n) == 1;
    return count;
}

inline u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Euler's criterion, p an odd prime < 2^32.
inline int legendre(i64 a, u64 p) {
    const u64 am = static_cast<u64>(((a % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
    if (am == 0) return 0;
    return powmod(am, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Jacobi symbol as a product of Legendre symbols over the factorization of n.
inline int jacobi(i64 a, u64 n) {
    int r = 1;
    for (auto [p, e] : factor(n)) {
        for (unsigned i = 0; i < e; ++i) r *= legendre(a, p);
    }
    return r;
}

// Is a a square modulo n (gcd(a, n) = 1)? By listing squares.
inline bool is_qr_mod(i64 a, u64 n) {
    const u64 am = static_cast<u64>(((a % static_cast<i64>(n)) + static_cast<i64>(n)) % static_cast<i64>(n));
    for (u64 x = 0; x < n; ++x) {
        if (x * x % n == am) return true;
    }
    return false;
}

struct Form {
    i64 a, b, c;
    bool operator==(const Form&) const = default;
};

inline i64 disc(const Form& f) { return f.b * f.b - 4 * f.a * f.c; }

inline i64 floordiv(i64 n, i64 d) {
    i64 q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

// Textbook reduction with small coefficients (no overflow guards).
inline Form reduce(Form f) {
    for (;;) {
        const i64 r = floordiv(f.a - f.b, 2 * f.a);
        const i64 b = f.b + 2 * f.a * r;
        f.c = f.a * r * r + f.b * r + f.c;
        f.b = b;
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

// Apply (x, y) -> (p x + q y, r x + s y).
inline Form transform(const Form& f, i64 p, i64 q, i64 r, i64 s) {
    return {f.a * p * p + f.b * p * r + f.c * r * r,
            2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
            f.a * q * q + f.b * q * s + f.c * s * s};
}

struct Matrix {
    i64 p = 1, q = 0, r = 0, s = 1;
    Matrix operator*(const Matrix& o) const {
        return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s};
    }
    i64 det() const { return p * s - q * r; }
};

// reduce() again, but recording the SL2(Z) matrix M with f(M v) = reduced(v).
inline std::pair<Form, Matrix> reduce_with_witness(Form f) {
    Matrix m;
    for (;;) {
        const i64 t = floordiv(f.a - f.b, 2 * f.a);
        f = transform(f, 1, t, 0, 1);
        m = m * Matrix{1, t, 0, 1};
        if (f.a > f.c || (f.a == f.c && f.b < 0)) {
            f = transform(f, 0, -1, 1, 0);
            m = m * Matrix{0, -1, 1, 0};
            continue;
        }
        return {f, m};
    }
}

// Search SL2(Z) matrices with entries in [-bound, bound] taking f to g.
inline bool sl2_equivalent(const Form& f, const Form& g, i64 bound) {
    for (i64 p = -bound; p <= bound; ++p) {
        for (i64 r = -bound; r <= bound; ++r) {
            if (f.a * p * p + f.b * p * r + f.c * r * r != g.a) continue;
            for (i64 q = -bound; q <= bound; ++q) {
                for (i64 s = -bound; s <= bound; ++s) {
                    if (p * s - q * r != 1) continue;
                    if (transform(f, p, q, r, s) == g) return true;
                }
            }
        }
    }
    return false;
}

// Every primitive reduced form of discriminant -d, by scanning a, b, c.
inline std::vector<Form> reduced_forms(i64 d) {
    std::vector<Form> out;
    for (i64 a = 1; 3 * a * a <= d; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            const i64 num = b * b + d;
            if (num % (4 * a) != 0) continue;
            const i64 c = num / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

// An equivalent form whose leading coefficient is coprime to m.
inline Form with_leading_coprime_to(const Form& g, i64 m) {
    for (i64 x = 1; x < 200; ++x) {
        for (i64 y = 0; y < 200; ++y) {
            if (std::gcd(x, y) != 1) continue;
            const i64 value = g.a * x * x + g.b * x * y + g.c * y * y;
            if (std::gcd(value, m) != 1) continue;
            // complete (x, y) to a matrix of determinant 1
            for (i64 u = -200; u <= 200; ++u) {
                if ((1 + y * u) % x != 0) continue;
                const i64 v = (1 + y * u) / x;
                return transform(g, x, u, y, v);
            }
        }
    }
    return g;
}

// Dirichlet composition through united forms, then reduction.
inline Form compose(const Form& f, Form g) {
    const i64 D = disc(f);
    if (std::gcd(f.a, g.a) != 1) g = with_leading_coprime_to(g, f.a);
    const i64 a3 = f.a * g.a;
    for (i64 B = 0; B < 2 * a3; ++B) {
        if ((B - f.b) % (2 * f.a) != 0 || (B - g.b) % (2 * g.a) != 0) continue;
        if ((B * B - D) % (4 * a3) != 0) continue;
        return reduce({a3, B, (B * B - D) / (4 * a3)});
    }
    return {0, 0, 0};
}

inline Form principal(i64 D) {
    const i64 b = (D % 2 == 0) ? 0 : 1;
    return {1, b, (b * b - D) / 4};
}

inline u64 order(const Form& f) {
    const Form one = principal(disc(f));
    Form cur = reduce(f);
    for (u64 n = 1; n < 100000; ++n) {
        if (cur == one) return n;
        cur = compose(cur, reduce(f));
    }
    return 0;
}

inline std::complex<double> e(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

inline std::complex<double> ramanujan_sum(u64 q, i64 m) {
    std::complex<double> s{0, 0};
    for (u64 a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        const i64 qq = static_cast<i64>(q);
        const i64 t = ((-static_cast<i64>(a) * m) % qq + qq) % qq;
        s += e(static_cast<double>(t) / static_cast<double>(q));
    }
    return s;
}

inline double lambda(u64 n) {
    const auto f = factor(n);
    return (f.size() == 1) ? std::log(static_cast<double>(f[0].first)) : 0.0;
}

inline double R_full(u64 d) {
    double s = 0;
    for (u64 a = 1; a < d; ++a) s += lambda(a) * lambda(d - a);
    return s;
}

inline double R2(u64 n) {
    double s = 0;
    for (u64 p = 3; p + 3 <= n; ++p) {
        const u64 q = n - p;
        if ((p % 8 == 3 || p % 8 == 5) && (q % 8 == 3 || q % 8 == 5) && is_prime(p) && is_prime(q)) {
            s += std::log(static_cast<double>(p)) * std::log(static_cast<double>(q));
        }
    }
    return s;
}

}  // namespace oracle
