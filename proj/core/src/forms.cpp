#include "c2/forms.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <tuple>
#include <utility>

#include "c2/error.hpp"

namespace c2 {

namespace {

// Intermediate coefficients of composition can exceed 64 bits before
// reduction brings them back.
struct WideForm {
    i128 a;
    i128 b;
    i128 c;
};

i128 floor_div(i128 n, i128 d) {
    // d > 0
    i128 q = n / d;
    if ((n % d != 0) && (n < 0)) --q;
    return q;
}

i128 mod_pos(i128 n, i128 d) {
    const i128 r = n % d;
    return r < 0 ? r + d : r;
}

struct ExtGcd {
    i128 g;
    i128 x;
    i128 y;
};

// a x + b y = g = gcd(a, b) >= 0
ExtGcd ext_gcd(i128 a, i128 b) {
    i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const i128 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

bool fits64(i128 v) {
    return v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max();
}

Form narrow(const WideForm& w) {
    if (!fits64(w.a) || !fits64(w.b) || !fits64(w.c)) {
        throw OverflowError("reduced form coefficient exceeds 64 bits");
    }
    return {static_cast<i64>(w.a), static_cast<i64>(w.b), static_cast<i64>(w.c)};
}

void normalize(WideForm& f) {
    const i128 r = floor_div(f.a - f.b, 2 * f.a);
    const i128 b = f.b + 2 * f.a * r;
    f.c = f.a * r * r + f.b * r + f.c;
    f.b = b;
}

Form reduce_wide(WideForm f) {
    if (f.a <= 0 || f.c <= 0 || f.b * f.b - 4 * f.a * f.c >= 0) {
        throw InvalidArgument("form is not positive definite");
    }
    for (;;) {
        normalize(f);
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        break;
    }
    return narrow(f);
}

i128 wide_discriminant(const Form& f) {
    return static_cast<i128>(f.b) * f.b - static_cast<i128>(4) * f.a * f.c;
}

}  // namespace

std::string to_string(const Form& f) {
    return std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c);
}

i64 discriminant(const Form& f) {
    const i128 D = wide_discriminant(f);
    if (!fits64(D)) throw OverflowError("discriminant exceeds 64 bits", to_string(f));
    return static_cast<i64>(D);
}

bool is_reduced(const Form& f) {
    const i64 abs_b = f.b < 0 ? -f.b : f.b;
    if (!(abs_b <= f.a && f.a <= f.c)) return false;
    if ((abs_b == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

Form reduce(const Form& f) { return reduce_wide({f.a, f.b, f.c}); }

Form principal(i64 D) {
    const i64 r = ((D % 4) + 4) % 4;
    if (D >= 0 || (r != 0 && r != 1)) {
        throw InvalidArgument("not a negative discriminant", std::to_string(D));
    }
    const i64 b = r;
    return {1, b, static_cast<i64>((static_cast<i128>(b) * b - D) / 4)};
}

Form inverse(const Form& f) { return reduce({f.a, -f.b, f.c}); }

Form compose(const Form& f, const Form& g) {
    const i128 D = wide_discriminant(f);
    if (D != wide_discriminant(g)) {
        throw InvalidArgument("cannot compose forms of different discriminants",
                              "mismatched-discriminant");
    }
    WideForm f1{f.a, f.b, f.c};
    WideForm f2{g.a, g.b, g.c};
    if (f1.a > f2.a) std::swap(f1, f2);

    const i128 s = (f1.b + f2.b) / 2;
    const i128 n = f2.b - s;

    i128 y1 = 0;
    i128 d = f1.a;
    if (f2.a % f1.a != 0) {
        const auto e = ext_gcd(f2.a, f1.a);
        y1 = e.x;
        d = e.g;
    }

    i128 x2 = 0;
    i128 y2 = -1;
    i128 d1 = d;
    if (s % d != 0) {
        const auto e = ext_gcd(s, d);
        x2 = e.x;
        y2 = -e.y;
        d1 = e.g;
    }

    const i128 v1 = f1.a / d1;
    const i128 v2 = f2.a / d1;
    const i128 r = mod_pos(mod_pos(y1 * y2, v1) * mod_pos(n, v1) - mod_pos(x2, v1) * mod_pos(f2.c, v1), v1);
    const i128 b3 = f2.b + 2 * v2 * r;
    const i128 a3 = v1 * v2;
    const i128 c3 = (b3 * b3 - D) / (4 * a3);
    return reduce_wide({a3, b3, c3});
}

Form square(const Form& f) { return compose(f, f); }

Form power(const Form& f, u64 n) {
    Form result = principal(discriminant(f));
    Form base = reduce(f);
    while (n != 0) {
        if (n & 1) result = compose(result, base);
        n >>= 1;
        if (n != 0) base = square(base);
    }
    return result;
}

u64 element_order(const Form& f) {
    const i64 D = discriminant(f);
    const Form one = principal(D);
    const Form base = reduce(f);
    Form current = base;
    // h(D) < |D|, so a longer walk means the arithmetic is broken.
    const u64 cap = static_cast<u64>(-(D + 1)) + 1;
    for (u64 n = 1; n <= cap; ++n) {
        if (current == one) return n;
        current = compose(current, base);
    }
    throw InternalError("order-unbounded", "no power of " + to_string(f) + " is principal");
}

std::vector<Form> reduced_forms(i64 D) {
    principal(D);  // validates D
    const u64 d = static_cast<u64>(-(D + 1)) + 1;
    const i64 a_max = static_cast<i64>(isqrt(d / 3));
    const i64 parity = D & 1;
    std::vector<Form> forms;
    for (i64 a = 1; a <= a_max; ++a) {
        const i128 four_a = 4 * static_cast<i128>(a);
        // b in (-a, a], b = D (mod 2)
        i64 b = -a + 1;
        if ((b & 1) != parity) ++b;
        for (; b <= a; b += 2) {
            const i128 num = static_cast<i128>(b) * b - D;
            if (num % four_a != 0) continue;
            const i128 c = num / four_a;
            if (c < a) continue;
            if (c == a && b < 0) continue;
            const i64 ci = static_cast<i64>(c);
            if (std::gcd(std::gcd(a, b), ci) != 1) continue;
            forms.push_back({a, b, ci});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

ClassGroup2Summary class_number(u64 d) {
    if (d > static_cast<u64>(std::numeric_limits<i64>::max())) {
        throw RangeError("range", "discriminant magnitude must stay below 2^63", std::to_string(d));
    }
    if (d == 0 || (d % 4 != 0 && d % 4 != 3)) {
        throw InvalidArgument("-d is not a discriminant", "invalid-discriminant");
    }
    const i64 D = -static_cast<i64>(d);
    const auto forms = reduced_forms(D);
    const Form one = principal(D);

    ClassGroup2Summary s;
    s.d = d;
    s.h = forms.size();
    s.two_part = s.h & (~s.h + 1);
    const unsigned e = static_cast<unsigned>(std::countr_zero(s.two_part));
    const u64 odd = s.h >> e;

    for (const Form& f : forms) {
        if (f.b == 0 || f.b == f.a || f.a == f.c) ++s.ambiguous_count;
        Form g = power(f, odd);
        u64 order = 1;
        for (unsigned i = 0; i < e && g != one; ++i) {
            g = square(g);
            order *= 2;
        }
        if (g != one) {
            throw InternalError("two-order", "2-part of class order exceeds 2-part of h for " +
                                                 to_string(f));
        }
        s.max_two_order = std::max(s.max_two_order, order);
    }

    const bool by_genus = s.ambiguous_count <= 2;
    const bool by_witness = s.max_two_order == s.two_part;
    if (by_genus != by_witness || !std::has_single_bit(s.ambiguous_count)) {
        throw InternalError("cyclicity-mismatch",
                            "ambiguous-class count and witness order disagree for d=" +
                                std::to_string(d));
    }
    s.cyclic_2sylow = by_genus;
    return s;
}

Form form_for_J(i64 w, i64 x, unsigned m) {
    if (m == 0) throw InvalidArgument("m must be positive");
    if (w <= 0 || w % 2 != 0) throw PreconditionViolation("w-not-even", "w must be positive and even");
    if (x <= 0) throw PreconditionViolation("x-not-positive", "x must be positive");
    if (std::gcd(x, w) != 1) throw PreconditionViolation("gcd-x-w", "gcd(x, w) must be 1");
    const i64 w_m = checked_pow(w, m);
    if (x > checked_add(checked_mul(2, w_m), -2)) {
        throw PreconditionViolation("x-too-large", "x must satisfy x <= 2 w^m - 2");
    }
    const i64 four_w_2m = checked_mul(4, checked_mul(w_m, w_m));
    const i64 d = four_w_2m - x * x;
    if (d <= 0) throw PreconditionViolation("d-not-positive", "4 w^(2m) - x^2 must be positive");
    return {w, x, checked_mul(w_m, checked_pow(w, m - 1))};
}

}  // namespace c2
