#pragma once

#include <vector>

#include "c2/arith.hpp"

namespace c2 {

/// Local Hilbert symbol (a, b)_p for nonzero a, b and prime p (p = 2 allowed).
/// Throws InvalidArgument for a zero argument or a composite p.
int hilbert_symbol(i64 a, i64 b, u64 p);

struct LocalSymbol {
    u64 prime;
    int value;
    bool operator==(const LocalSymbol&) const = default;
};

struct CriterionReport {
    u64 d = 0;
    i64 w = 0;
    std::vector<LocalSymbol> symbols;  // (w, -d)_p for each p | d, p ascending
    bool is_square = false;
    bool exact_order_2k = false;  // set by callers holding the Lemma-3 context
};

/// Square-class test for an ideal of norm w in the maximal order of
/// discriminant -d: the class is a square iff (w, -d)_p = 1 for every p | d.
/// d must be squarefree, odd and = 3 (mod 4); gcd(w, d) = 1; w > 0 must be a
/// local norm at 2 and at every prime dividing w, as ideal norms are.
/// Throws PreconditionViolation("gcd-w-d" | "d-not-squarefree" | "d-mod4" |
/// "w-not-norm").
CriterionReport is_square_class(i64 w, u64 d);

/// For distinct primes p1 = 1, p2 = 3 (mod 4) with p1 + p2 = 4 w^(2^(k-1))
/// and w even, the 2-class group of Q(sqrt(-p1 p2)) is cyclic of order
/// exactly 2^k iff the Kronecker symbol (p1/w) is -1. Every hypothesis is
/// checked; failures throw PreconditionViolation naming it.
bool exact_order_test(i64 p1, i64 p2, i64 w, unsigned k);

/// (p1/2) = -1, i.e. p1 = 3 or 5 (mod 8). Equals exact_order_test's symbol
/// whenever w = 2 M^2.
bool mod8_test(i64 p1);

}  // namespace c2
