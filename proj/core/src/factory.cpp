#include "c2/factory.hpp"

#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "c2/criteria.hpp"
#include "c2/error.hpp"
#include "c2/parallel.hpp"

namespace c2 {

namespace {

std::string km(unsigned k, i64 M) { return "k=" + std::to_string(k) + ",M=" + std::to_string(M); }

struct PairContext {
    i64 w;
    i64 n;
    unsigned m;  // 2^(k-1)
};

PairContext context(unsigned k, i64 M) {
    const i64 n = target(k, M);
    return {checked_mul(2, checked_mul(M, M)), n, 1u << (k - 1)};
}

// Hypotheses shared by examine() and certify(), cheapest first.
void check_pair(const PairContext& ctx, i64 p1, i64 p2) {
    if (p1 < 3 || p2 < 3) throw Rejection("prime-too-small", "p1, p2 must be >= 3");
    if (checked_add(p1, p2) != ctx.n) throw Rejection("sum-mismatch", "p1 + p2 != target");
    if (p1 == p2) throw Rejection("equal-primes", "p1 and p2 must be distinct");
    if (!is_prime(static_cast<u64>(p1))) throw Rejection("p1-not-prime", "p1 is not prime");
    if (!is_prime(static_cast<u64>(p2))) throw Rejection("p2-not-prime", "p2 is not prime");
    if (p1 % 4 != 1) throw Rejection("p1-mod4", "p1 must be 1 (mod 4)");
    if (p2 % 4 != 3) throw Rejection("p2-mod4", "p2 must be 3 (mod 4)");
}

void check_mod8(i64 p1, i64 p2) {
    if (p1 % 8 != 5) throw Rejection("p1-mod8", "p1 must be 5 (mod 8)");
    if (p2 % 8 != 3) throw Rejection("p2-mod8", "p2 must be 3 (mod 8)");
}

Examination run_examination(unsigned k, i64 M, const PairContext& ctx, i64 p1, i64 p2, i64 max_d) {
    Examination e;
    e.k = k;
    e.M = M;
    e.w = ctx.w;
    e.n = ctx.n;
    e.p1 = p1;
    e.p2 = p2;
    const i64 half = ctx.n / 2;  // 2 w^m
    e.x = p1 > half ? p1 - half : half - p1;

    if (e.x <= 0 || e.x > half - 2) throw Rejection("x-range", "x must satisfy 0 < x <= 2 w^m - 2");
    if (std::gcd(e.x, ctx.w) != 1) {
        // distinct odd primes summing to 4 w^m cannot share a factor with w
        throw InternalError("gcd-x-w", "gcd(x, w) != 1 for " + std::to_string(p1) + "+" +
                                           std::to_string(p2));
    }
    e.d = checked_mul(p1, p2);
    if (static_cast<i128>(half) * half - static_cast<i128>(e.x) * e.x != e.d) {
        throw InternalError("d-identity", "p1 p2 != 4 w^(2^k) - x^2");
    }
    if (e.d % 4 != 3) throw Rejection("d-mod4", "d must be 3 (mod 4)");
    if (!is_squarefree(static_cast<u64>(e.d))) throw Rejection("d-not-squarefree", "d is not squarefree");
    if (e.d > max_d) {
        throw Rejection("d-too-large", "d=" + std::to_string(e.d) + " exceeds oracle budget " +
                                           std::to_string(max_d));
    }

    e.symbol_ok = exact_order_test(p1, p2, ctx.w, k);
    const CriterionReport report = is_square_class(ctx.w, static_cast<u64>(e.d));
    if (report.is_square == e.symbol_ok) {
        throw InternalError("criterion-mismatch", "Hasse criterion and (p1/w) disagree for d=" +
                                                      std::to_string(e.d));
    }

    e.j_order = element_order(form_for_J(ctx.w, e.x, ctx.m));
    const u64 expected_order = u64{1} << k;
    if (e.j_order != expected_order) {
        throw InternalError("j-order", "class of norm-w ideal has order " +
                                           std::to_string(e.j_order) + ", expected " +
                                           std::to_string(expected_order));
    }

    e.oracle = class_number(static_cast<u64>(e.d));
    if (!e.oracle.cyclic_2sylow) {
        throw InternalError("not-cyclic", "2-Sylow of d=" + std::to_string(e.d) + " is not cyclic");
    }
    if (e.oracle.two_part % expected_order != 0) {
        throw InternalError("two-part", "2^k does not divide the class number of d=" +
                                            std::to_string(e.d));
    }
    if (e.oracle_exact() != e.symbol_ok) {
        throw InternalError("oracle-mismatch", "exact-order test and class-group oracle disagree for d=" +
                                                   std::to_string(e.d));
    }
    return e;
}

}  // namespace

i64 target(unsigned k, i64 M) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    if (M < 1) throw InvalidArgument("M must be positive");
    try {
        if (k > 6) throw OverflowError("power of two too large");
        const unsigned two_exp = 2 + (1u << (k - 1));
        return checked_mul(i64{1} << two_exp, checked_pow(M, 1u << k));
    } catch (const OverflowError&) {
        throw OverflowError("target 4 (2 M^2)^(2^(k-1)) exceeds 2^63 at " + km(k, M), km(k, M));
    }
}

std::vector<PrimePair> find_pairs(unsigned k, i64 M, const PrimeTable& table, PairFilter filter) {
    const i64 n = target(k, M);
    if (!table.covers(3, static_cast<u64>(n - 3))) {
        throw RangeError("insufficient-table-range",
                         "prime table must cover [3, " + std::to_string(n - 3) + "]", km(k, M));
    }
    std::vector<PrimePair> pairs;
    for (u64 p : table) {
        const i64 p1 = static_cast<i64>(p);
        if (p1 > n - 3) break;
        const bool ok = filter == PairFilter::mod8 ? p1 % 8 == 5 : p1 % 4 == 1;
        if (!ok) continue;
        const i64 p2 = n - p1;
        if (p2 == p1 || !table.is_prime(static_cast<u64>(p2))) continue;
        if (filter == PairFilter::mod8 ? p2 % 8 == 3 : p2 % 4 == 3) pairs.push_back({p1, p2});
    }
    return pairs;
}

Examination examine(unsigned k, i64 M, i64 p1, i64 p2, i64 max_d) {
    const PairContext ctx = context(k, M);
    check_pair(ctx, p1, p2);
    return run_examination(k, M, ctx, p1, p2, max_d);
}

Certificate to_certificate(const Examination& e) {
    check_mod8(e.p1, e.p2);
    if (!e.symbol_ok) throw Rejection("symbol-test-failed", "(p1/w) != -1");
    Certificate c;
    c.k = e.k;
    c.M = e.M;
    c.w = e.w;
    c.n = e.n;
    c.x = e.x;
    c.p1 = e.p1;
    c.p2 = e.p2;
    c.d = e.d;
    c.symbol_ok = e.symbol_ok;
    c.oracle = e.oracle;
    return c;
}

Certificate certify(unsigned k, i64 M, i64 p1, i64 p2, i64 max_d) {
    const PairContext ctx = context(k, M);
    check_pair(ctx, p1, p2);
    check_mod8(p1, p2);
    return to_certificate(run_examination(k, M, ctx, p1, p2, max_d));
}

i64 search_ceiling(unsigned k, i64 M_lo, i64 M_hi) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    if (M_lo < 1 || M_lo > M_hi) throw InvalidArgument("M range must satisfy 1 <= M_lo <= M_hi");
    i64 n_max = 0;
    for (i64 M = M_lo; M <= M_hi; ++M) {
        const i64 n = target(k, M);
        // largest possible d is (n/2)^2 - 1
        if (static_cast<i128>(n / 2) * (n / 2) > std::numeric_limits<i64>::max()) {
            throw OverflowError("discriminants p1 p2 for n=" + std::to_string(n) +
                                    " exceed 2^63 at " + km(k, M),
                                km(k, M));
        }
        n_max = n;
    }
    return n_max;
}

SearchResult search(unsigned k, i64 M_lo, i64 M_hi, const SearchLimits& limits,
                    const PrimeTable* table) {
    const i64 n_max = search_ceiling(k, M_lo, M_hi);

    std::optional<PrimeTable> own;
    if (table == nullptr) {
        own = sieve(2, static_cast<u64>(n_max - 3), limits.max_sieve_span);
        table = &*own;
    }

    struct Task {
        i64 M;
        PrimePair pair;
    };
    std::vector<Task> tasks;
    for (i64 M = M_lo; M <= M_hi; ++M) {
        for (const auto& pair : find_pairs(k, M, *table, limits.filter)) tasks.push_back({M, pair});
    }

    struct Outcome {
        std::optional<Examination> examination;
        std::optional<Certificate> certificate;
        std::string rejection;
    };
    std::vector<Outcome> outcomes(tasks.size());

    detail::parallel_for(tasks.size(), limits.threads, [&](std::size_t i) {
        const Task& t = tasks[i];
        Outcome& out = outcomes[i];
        const PairContext ctx = context(k, t.M);
        try {
            check_pair(ctx, t.pair.p1, t.pair.p2);
            if (limits.filter == PairFilter::mod8) check_mod8(t.pair.p1, t.pair.p2);
            out.examination = run_examination(k, t.M, ctx, t.pair.p1, t.pair.p2, limits.max_d);
            out.certificate = to_certificate(*out.examination);
        } catch (const Rejection& r) {
            out.rejection = r.reason();
        }
    });

    SearchResult result;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& out = outcomes[i];
        if (out.examination) result.examinations.push_back(std::move(*out.examination));
        if (out.certificate) result.certificates.push_back(std::move(*out.certificate));
        if (!out.rejection.empty()) {
            result.rejections.push_back({tasks[i].M, tasks[i].pair.p1, tasks[i].pair.p2, out.rejection});
        }
    }
    return result;
}

}  // namespace c2
