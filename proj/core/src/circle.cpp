#include "c2/circle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "c2/error.hpp"
#include "c2/parallel.hpp"

namespace c2 {

namespace {

std::complex<double> unit_root(u64 numerator, u64 denominator) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(numerator % denominator) /
                         static_cast<double>(denominator);
    return std::polar(1.0, angle);
}

bool restricted_residue(u64 r) {
    const u64 c = r % 8;
    return c == 3 || c == 5;
}

void require_multiple_of_8(u64 n, const char* what) {
    if (n == 0 || n % 8 != 0) {
        throw InvalidArgument(std::string(what) + " needs a positive multiple of 8", std::to_string(n));
    }
}

u64 count_coprime_in_classes(u64 n, u64 c1, u64 c2) {
    u64 count = 0;
    for (u64 r = 1; r < n; ++r) {
        const u64 c = r % 8;
        if ((c == c1 || c == c2) && std::gcd(r, n) == 1) ++count;
    }
    return count;
}

void require_cover(const PrimeTable& table, u64 a, u64 b, const char* what) {
    if (a <= b && !table.covers(a, b)) {
        throw RangeError("insufficient-table-range",
                         std::string(what) + " needs primes in [" + std::to_string(a) + ", " +
                             std::to_string(b) + "]",
                         std::to_string(a) + "," + std::to_string(b));
    }
}

double euler_product_S1(u64 m) {
    if (m % 2 != 0) return 0.0;
    double value = 2.0 * kTwinPrimeConstant;
    for (const auto& pp : factorize(m)) {
        if (pp.prime == 2) continue;
        const double p = static_cast<double>(pp.prime);
        value *= (p - 1.0) / (p - 2.0);
    }
    return value;
}

}  // namespace

double mu2(u64 q) {
    if (q == 0) throw InvalidArgument("mu2 needs q >= 1");
    if (q % 8 != 0) return mobius(q) / 2.0;
    const u64 q0 = q / 8;
    return -kronecker(static_cast<i64>(q0), 2) * mobius(q0) * std::numbers::sqrt2;
}

std::complex<double> mu2_definition_sum(u64 q8) {
    require_multiple_of_8(q8, "mu2_definition_sum");
    std::complex<double> sum{0.0, 0.0};
    for (u64 r = 1; r <= q8; ++r) {
        if (restricted_residue(r) && std::gcd(r, q8) == 1) sum += unit_root(r, q8);
    }
    return sum;
}

u64 phi2(u64 n) {
    require_multiple_of_8(n, "phi2");
    return count_coprime_in_classes(n, 3, 5);
}

u64 phi3(u64 n) {
    require_multiple_of_8(n, "phi3");
    return count_coprime_in_classes(n, 1, 7);
}

std::complex<double> restricted_gauss_sum(i64 a, u64 q8) {
    require_multiple_of_8(q8, "restricted_gauss_sum");
    const i128 signed_mod = static_cast<i128>(a) % static_cast<i128>(q8);
    const u64 a_mod = static_cast<u64>(signed_mod < 0 ? signed_mod + q8 : signed_mod);
    if (std::gcd(a_mod, q8) != 1) {
        throw InvalidArgument("restricted Gauss sum needs gcd(a, q8) = 1", "gcd-violation");
    }
    std::complex<double> sum{0.0, 0.0};
    for (u64 r = 1; r <= q8; ++r) {
        if (restricted_residue(r) && std::gcd(r, q8) == 1) {
            sum += unit_root(static_cast<u64>(static_cast<u128>(a_mod) * r % q8), q8);
        }
    }
    return sum;
}

i64 ramanujan_c(u64 q, i64 m) {
    if (q == 0) throw InvalidArgument("ramanujan_c needs q >= 1");
    const u64 abs_m = m < 0 ? static_cast<u64>(-(m + 1)) + 1 : static_cast<u64>(m);
    const u64 g = std::gcd(q, abs_m);  // gcd(q, 0) = q
    const u64 reduced = q / g;
    return mobius(reduced) * static_cast<i64>(euler_phi(q) / euler_phi(reduced));
}

std::string to_string(SeriesMode mode) { return mode == SeriesMode::series ? "series" : "product"; }

std::string vanishing_reason(u64 m) {
    if (m % 2 != 0) return "odd";
    if (m % 8 == 4) return "4mod8";
    return "none";
}

SingularValue singular_S1(u64 m, SeriesMode mode, u64 Q) {
    if (m == 0) throw InvalidArgument("singular series needs m >= 1");
    SingularValue out{m, 0.0, mode, 0};
    if (mode == SeriesMode::product) {
        out.value = euler_product_S1(m);
        return out;
    }
    if (Q < 2) throw InvalidArgument("series truncation must be >= 2");
    const MultiplicativeTable t(Q);
    double sum = 0.0;
    for (u64 q = 1; q <= Q; ++q) {
        if (t.mu(q) == 0) continue;
        const u64 g = std::gcd(q, m);
        const double c = t.mu(q / g) * static_cast<double>(t.phi(q)) / static_cast<double>(t.phi(q / g));
        const double ph = static_cast<double>(t.phi(q));
        sum += c / (ph * ph);
    }
    out.value = sum;
    out.truncation_Q = Q;
    return out;
}

SingularValue singular_S2(u64 m, SeriesMode mode, u64 Q) {
    if (m == 0) throw InvalidArgument("singular series needs m >= 1");
    SingularValue out{m, 0.0, mode, 0};
    if (mode == SeriesMode::product) {
        const double c8 = static_cast<double>(ramanujan_c(8, static_cast<i64>(m)));
        out.value = euler_product_S1(m) / 4.0 * (1.0 + c8 / 4.0);
        return out;
    }
    if (Q < 2) throw InvalidArgument("series truncation must be >= 2");
    const MultiplicativeTable t(Q);
    double sum = 0.0;
    for (u64 q = 1; q <= Q; ++q) {
        // mu2(q)^2: mu(q)^2/4 off multiples of 8, else 2 mu(q/8)^2 (q/8 odd)
        double weight = 0.0;
        if (q % 8 != 0) {
            weight = t.mu(q) != 0 ? 0.25 : 0.0;
        } else {
            const u64 q0 = q / 8;
            weight = (q0 % 2 == 1 && t.mu(q0) != 0) ? 2.0 : 0.0;
        }
        if (weight == 0.0) continue;
        const u64 g = std::gcd(q, m);
        const u64 r = q / g;
        const double c = t.mu(r) * static_cast<double>(t.phi(q)) / static_cast<double>(t.phi(r));
        const double ph = static_cast<double>(t.phi(q));
        sum += weight * c / (ph * ph);
    }
    out.value = sum;
    out.truncation_Q = Q;
    return out;
}

double R_full(u64 d, const PrimeTable& table) {
    if (d < 4) return 0.0;
    const u64 top = d - 2;
    require_cover(table, 2, top, "R_full");
    std::vector<double> lambda(top + 1, 0.0);
    for (u64 p : table) {
        if (p > top) break;
        const double lp = std::log(static_cast<double>(p));
        for (u64 pk = p;; pk *= p) {
            lambda[pk] = lp;
            if (pk > top / p) break;
        }
    }
    double sum = 0.0;
    for (u64 i = 2; i <= top; ++i) sum += lambda[i] * lambda[d - i];
    return sum;
}

double R2(u64 n, const PrimeTable& table) {
    if (n < 6) return 0.0;
    require_cover(table, 3, n - 3, "R2");
    double sum = 0.0;
    for (u64 p : table) {
        if (p > n - 3) break;
        if (!restricted_residue(p)) continue;
        const u64 q = n - p;
        if (restricted_residue(q) && table.is_prime(q)) {
            sum += std::log(static_cast<double>(p)) * std::log(static_cast<double>(q));
        }
    }
    return sum;
}

u64 R2_count(u64 n, const PrimeTable& table) {
    if (n < 6) return 0;
    require_cover(table, 3, n - 3, "R2_count");
    u64 count = 0;
    for (u64 p : table) {
        if (p > n - 3) break;
        const u64 q = n - p;
        if (restricted_residue(p) && restricted_residue(q) && table.is_prime(q)) ++count;
    }
    return count;
}

PolySpec::PolySpec(std::vector<i64> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() < 2) throw InvalidArgument("polynomial must be non-constant");
    if (coeffs_.back() <= 0) throw InvalidArgument("leading coefficient must be positive");
}

u64 PolySpec::eval_mod(i64 x, u64 modulus) const {
    if (modulus == 0) throw InvalidArgument("modulus must be positive");
    const i128 m = modulus;
    auto positive = [m](i128 v) {
        v %= m;
        return v < 0 ? v + m : v;
    };
    const i128 xm = positive(x);
    i128 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = positive(acc * xm + positive(*it));
    }
    return static_cast<u64>(acc);
}

PolySpec PolySpec::target_polynomial(unsigned k) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    if (k > 6) throw OverflowError("leading coefficient 2^(1+2^(k-1)) exceeds 2^63");
    const unsigned m = 1u << (k - 1);
    std::vector<i64> c(m + 1, 0);
    c[m] = checked_pow(2, m + 1);
    return PolySpec(std::move(c));
}

u64 rho_F(const PolySpec& F, u64 d) {
    if (d == 0) throw InvalidArgument("rho_F needs d >= 1");
    u64 count = 0;
    for (u64 x = 0; x < d; ++x) {
        if (F.eval_mod(static_cast<i64>(x), d) == 0) ++count;
    }
    return count;
}

TruncatedProduct C_F(const PolySpec& F, u64 P_bound) {
    if (P_bound < 3) throw InvalidArgument("C_F needs P_bound >= 3");
    double value = static_cast<double>(F.leading()) * static_cast<double>(rho_F(F, 2));
    if (value != 0.0) {
        for (u64 p : sieve(2, P_bound)) {
            if (p == 2) continue;
            const double pd = static_cast<double>(p);
            value *= 1.0 + static_cast<double>(rho_F(F, p)) / (pd * (pd - 2.0));
            value *= 1.0 - 1.0 / ((pd - 1.0) * (pd - 1.0));
        }
    }
    // for p > P: rho_F(p) <= deg F and sum_{p > P} (deg F + 2)/(p - 2)^2 <= (deg F + 2)/(P - 2)
    const double tail = (F.degree() + 2.0) / (static_cast<double>(P_bound) - 2.0);
    return {value, P_bound, tail};
}

std::vector<CompareRow> compare_window(u64 n_lo, u64 n_hi, u64 step, const PrimeTable& table,
                                       bool skip_vanishing, unsigned threads) {
    if (step == 0) throw InvalidArgument("step must be positive");
    if (n_lo < 6 || n_lo > n_hi) throw InvalidArgument("window must satisfy 6 <= n_lo <= n_hi");
    require_cover(table, 3, n_hi - 3, "compare_window");

    std::vector<CompareRow> rows;
    for (u64 n = n_lo; n <= n_hi; n += step) {
        const double s2 = singular_S2(n, SeriesMode::product).value;
        if (s2 == 0.0) {
            if (skip_vanishing) continue;
            throw InvalidArgument("S2(n) vanishes for n=" + std::to_string(n) + " (" +
                                      vanishing_reason(n) + ")",
                                  "vanishing-singular-series");
        }
        rows.push_back({n, 0.0, static_cast<double>(n) * s2, 0.0});
        if (n_hi - n < step) break;
    }
    detail::parallel_for(rows.size(), threads, [&](std::size_t i) {
        rows[i].r2 = R2(rows[i].n, table);
        rows[i].ratio = rows[i].r2 / rows[i].main_term;
    });
    return rows;
}

}  // namespace c2
