#pragma once

#include <complex>
#include <string>
#include <vector>

#include "c2/arith.hpp"
#include "c2/primes.hpp"

namespace c2 {

// Twin-prime constant prod_{p>2} (1 - 1/(p-1)^2), 20 significant digits.
inline constexpr double kTwinPrimeConstant = 0.66016181584686957393;

inline constexpr u64 kDefaultSeriesTruncation = 10'000;

/// mu(q)/2 if 8 does not divide q; for q = 8 q0 the value of the restricted
/// exponential sum, -(q0/2) mu(q0) sqrt(2).
double mu2(u64 q);

/// sum of e(r/q8) over r in [1, q8], gcd(r, q8) = 1, r = 3 or 5 (mod 8).
/// Throws InvalidArgument unless 8 | q8.
std::complex<double> mu2_definition_sum(u64 q8);

/// #{r < n : gcd(r, n) = 1, r = +-3 (mod 8)} and the +-1 analogue; 8 | n.
u64 phi2(u64 n);
u64 phi3(u64 n);

/// sum of e(a r/q8) over the restricted r; gcd(a, q8) = 1 and 8 | q8.
std::complex<double> restricted_gauss_sum(i64 a, u64 q8);

/// Ramanujan's sum c_q(m) via mu(q/(q,m)) phi(q) / phi(q/(q,m)).
i64 ramanujan_c(u64 q, i64 m);

enum class SeriesMode { series, product };

struct SingularValue {
    u64 m = 0;
    double value = 0.0;
    SeriesMode mode = SeriesMode::product;
    u64 truncation_Q = 0;  // 0 in product mode
};

std::string to_string(SeriesMode mode);

/// "odd", "4mod8" or "none": why S2(m) vanishes in product mode.
std::string vanishing_reason(u64 m);

/// Goldbach singular series sum_q mu(q)^2/phi(q)^2 c_q(m). Series mode sums
/// q <= Q; product mode is 2 C2 prod_{p | m, p > 2} (p-1)/(p-2) for even m.
SingularValue singular_S1(u64 m, SeriesMode mode, u64 Q = kDefaultSeriesTruncation);

/// Singular series restricted to primes = +-3 (mod 8), sum_q mu2(q)^2/phi(q)^2
/// c_q(m). Series mode sums that definition directly; product mode applies
/// S1(m)/4 (1 + c_8(m)/4) to the Euler product.
SingularValue singular_S2(u64 m, SeriesMode mode, u64 Q = kDefaultSeriesTruncation);

/// sum over d1 + d2 = d of Lambda(d1) Lambda(d2), ordered. Table must cover [2, d-2].
double R_full(u64 d, const PrimeTable& table);

/// sum over p1 + p2 = n of log p1 log p2, ordered, both primes = +-3 (mod 8).
/// Table must cover [3, n-3].
double R2(u64 n, const PrimeTable& table);

/// Unweighted count of the representations R2 sums over.
u64 R2_count(u64 n, const PrimeTable& table);

/// F in Z[x], coefficients constant term first. Leading coefficient > 0.
class PolySpec {
public:
    explicit PolySpec(std::vector<i64> coefficients);

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    i64 leading() const { return coeffs_.back(); }
    const std::vector<i64>& coefficients() const { return coeffs_; }

    /// F(x) mod modulus, in [0, modulus).
    u64 eval_mod(i64 x, u64 modulus) const;

    /// 2 (2x)^(2^(k-1)).
    static PolySpec target_polynomial(unsigned k);

private:
    std::vector<i64> coeffs_;
};

/// #{x mod d : F(x) = 0 (mod d)}.
u64 rho_F(const PolySpec& F, u64 d);

struct TruncatedProduct {
    double value;
    u64 P_bound;
    // |log(full / truncated)| <= log_tail_bound when no odd prime above
    // P_bound divides every coefficient of F.
    double log_tail_bound;
};

/// a(F) rho_F(2) prod_{2 < p <= P_bound} (1 + rho_F(p)/(p(p-2))) (1 - 1/(p-1)^2).
TruncatedProduct C_F(const PolySpec& F, u64 P_bound);

struct CompareRow {
    u64 n;
    double r2;
    double main_term;  // n S2(n), product mode
    double ratio;
};

/// Rows for n = n_lo, n_lo + step, ... <= n_hi. Throws InvalidArgument for an
/// n with S2(n) = 0 unless skip_vanishing, which drops such n instead.
std::vector<CompareRow> compare_window(u64 n_lo, u64 n_hi, u64 step, const PrimeTable& table,
                                       bool skip_vanishing = false, unsigned threads = 0);

}  // namespace c2
