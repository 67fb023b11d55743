#include "c2/criteria.hpp"

#include <numeric>
#include <string>

#include "c2/error.hpp"

namespace c2 {

namespace {

struct Valuation {
    unsigned exponent;
    i64 unit;
};

Valuation split(i64 a, i64 p) {
    unsigned e = 0;
    while (a % p == 0) {
        a /= p;
        ++e;
    }
    return {e, a};
}

// epsilon(u) = (u - 1)/2 and omega(u) = (u^2 - 1)/8, both mod 2, for odd u
int eps2(i64 u) {
    const i64 r = ((u % 4) + 4) % 4;
    return r == 3 ? 1 : 0;
}

int omega2(i64 u) {
    const i64 r = ((u % 8) + 8) % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(i64 a, i64 b, u64 p) {
    if (a == 0 || b == 0) throw InvalidArgument("hilbert symbol needs nonzero arguments");
    if (!is_prime(p)) throw InvalidArgument("hilbert symbol needs a prime place", std::to_string(p));
    const i64 pp = static_cast<i64>(p);
    const auto [alpha, u] = split(a, pp);
    const auto [beta, v] = split(b, pp);

    if (p == 2) {
        const int exponent = eps2(u) * eps2(v) + static_cast<int>(alpha) * omega2(v) +
                             static_cast<int>(beta) * omega2(u);
        return (exponent % 2 == 0) ? 1 : -1;
    }

    int result = 1;
    if ((alpha * beta) % 2 == 1 && p % 4 == 3) result = -result;
    if (beta % 2 == 1) result *= jacobi(u, pp);
    if (alpha % 2 == 1) result *= jacobi(v, pp);
    return result;
}

CriterionReport is_square_class(i64 w, u64 d) {
    if (w <= 0) throw InvalidArgument("norm must be positive", std::to_string(w));
    if (d % 4 != 3) throw PreconditionViolation("d-mod4", "d must be 3 (mod 4)");
    if (std::gcd(static_cast<u64>(w), d) != 1) {
        throw PreconditionViolation("gcd-w-d", "gcd(w, d) must be 1");
    }
    const auto factors = factorize(d);
    CriterionReport report;
    report.d = d;
    report.w = w;
    report.is_square = true;
    const i64 minus_d = -static_cast<i64>(d);
    for (const auto& [p, e] : factors) {
        if (e != 1) throw PreconditionViolation("d-not-squarefree", "d must be squarefree");
        const int s = hilbert_symbol(w, minus_d, p);
        report.symbols.push_back({p, s});
        if (s != 1) report.is_square = false;
    }
    // w must be a local norm away from d (true for the norm of any ideal),
    // otherwise the symbols over p | d need not multiply to 1.
    auto outside = factorize(static_cast<u64>(w));
    if (outside.empty() || outside.front().prime != 2) outside.insert(outside.begin(), {2, 0});
    for (const auto& pp : outside) {
        if (hilbert_symbol(w, minus_d, pp.prime) != 1) {
            throw PreconditionViolation("w-not-norm", "w is not a local norm at " + std::to_string(pp.prime));
        }
    }
    int product = 1;
    for (const auto& s : report.symbols) product *= s.value;
    if (product != 1) {
        throw InternalError("hilbert-product", "product of local symbols is not 1 for w=" +
                                                   std::to_string(w) + " d=" + std::to_string(d));
    }
    return report;
}

bool exact_order_test(i64 p1, i64 p2, i64 w, unsigned k) {
    if (k < 1) throw PreconditionViolation("k-positive", "k must be at least 1");
    if (p1 < 3 || p2 < 3) throw PreconditionViolation("prime-too-small", "p1, p2 must be >= 3");
    if (p1 == p2) throw PreconditionViolation("equal-primes", "p1 and p2 must be distinct");
    if (!is_prime(static_cast<u64>(p1))) throw PreconditionViolation("p1-not-prime", "p1 must be prime");
    if (!is_prime(static_cast<u64>(p2))) throw PreconditionViolation("p2-not-prime", "p2 must be prime");
    if (p1 % 4 != 1) throw PreconditionViolation("p1-mod4", "p1 must be 1 (mod 4)");
    if (p2 % 4 != 3) throw PreconditionViolation("p2-mod4", "p2 must be 3 (mod 4)");
    if (w <= 0 || w % 2 != 0) throw PreconditionViolation("w-not-even", "w must be positive and even");
    if (k > 63) throw OverflowError("k too large");
    const i64 n = checked_mul(4, checked_pow(w, 1u << (k - 1)));
    if (checked_add(p1, p2) != n) {
        throw PreconditionViolation("sum-mismatch", "p1 + p2 must equal 4 w^(2^(k-1))");
    }

    const bool not_square = kronecker(p1, w) == -1;
    // Same test through the other place: (w/p2) = -1, i.e. (p2/w) = -(-1/w).
    const bool via_p2 = kronecker(p2, w) == -kronecker(-1, w);
    if (not_square != via_p2) {
        throw InternalError("symbol-forms-disagree",
                            "(p1/w) = -1 and (p2/w) = -(-1/w) disagree for p1=" +
                                std::to_string(p1) + " p2=" + std::to_string(p2));
    }
    return not_square;
}

bool mod8_test(i64 p1) {
    const i64 r = ((p1 % 8) + 8) % 8;
    return r == 3 || r == 5;
}

}  // namespace c2
