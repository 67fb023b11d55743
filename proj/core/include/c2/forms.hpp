#pragma once

#include <compare>
#include <string>
#include <vector>

#include "c2/arith.hpp"

namespace c2 {

/// Positive-definite integral binary quadratic form a x^2 + b xy + c y^2.
struct Form {
    i64 a = 1;
    i64 b = 1;
    i64 c = 1;

    auto operator<=>(const Form&) const = default;
};

std::string to_string(const Form& f);  // "a,b,c"

/// b^2 - 4ac. Throws OverflowError if it does not fit in 64 bits.
i64 discriminant(const Form& f);

bool is_reduced(const Form& f);

/// The unique reduced form equivalent to f under SL2(Z).
Form reduce(const Form& f);

/// Reduced identity form of discriminant D < 0, D = 0 or 1 (mod 4).
Form principal(i64 D);

/// Class of the inverse, (a, -b, c), reduced.
Form inverse(const Form& f);

/// Gauss composition followed by reduction.
/// Throws InvalidArgument("mismatched-discriminant") if discriminants differ.
Form compose(const Form& f, const Form& g);

Form square(const Form& f);
Form power(const Form& f, u64 n);

/// Least n >= 1 with f^n principal, by repeated composition.
u64 element_order(const Form& f);

/// All primitive reduced forms of discriminant D, sorted by (a, b, c).
std::vector<Form> reduced_forms(i64 D);

struct ClassGroup2Summary {
    u64 d = 0;                 // discriminant is -d
    u64 h = 0;                 // class number
    u64 two_part = 0;          // largest power of 2 dividing h
    bool cyclic_2sylow = false;
    u64 ambiguous_count = 0;   // classes of order dividing 2
    u64 max_two_order = 0;     // largest 2-power order seen among classes

    bool operator==(const ClassGroup2Summary&) const = default;
};

/// Class number and 2-Sylow structure of discriminant -d by exhaustive
/// enumeration of reduced forms. Cyclicity is computed twice, from the
/// ambiguous-class count and from a witness of order two_part; a
/// disagreement throws InternalError.
/// Throws InvalidArgument("invalid-discriminant") unless d = 0 or 3 (mod 4),
/// and RangeError when d >= 2^63.
ClassGroup2Summary class_number(u64 d);

/// The form (w, x, w^(2m-1)) of discriminant -(4 w^(2m) - x^2), realizing an
/// ideal of norm w whose class has order 2m. Throws PreconditionViolation
/// naming the failed hypothesis: "w-not-even", "x-not-positive",
/// "gcd-x-w", "x-too-large", "d-not-positive", or OverflowError.
Form form_for_J(i64 w, i64 x, unsigned m);

}  // namespace c2
