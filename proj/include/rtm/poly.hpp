#pragma once

#include <cstdint>
#include <stdexcept>

namespace rtm {

// q(n) = a * (n^k + 1), with a >= 1, k >= 0. This is the only polynomial
// shape used for time and balance bounds, so comparison and composition
// stay closed over the same two integers.
struct PolyBound {
    std::uint64_t a = 1;
    std::uint32_t k = 0;

    PolyBound() = default;
    PolyBound(std::uint64_t a_, std::uint32_t k_) : a(a_), k(k_) {
        if (a == 0) throw std::invalid_argument("PolyBound: a must be >= 1");
    }

    std::uint64_t eval(std::uint64_t n) const {
        std::uint64_t p = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            if (n != 0 && p > UINT64_MAX / (n ? n : 1)) return UINT64_MAX;
            p *= n;
        }
        if (p > UINT64_MAX - 1) return UINT64_MAX;
        std::uint64_t s = p + 1;
        if (a != 0 && s > UINT64_MAX / a) return UINT64_MAX;
        return a * s;
    }

    // Strict order used by the evaluators: compare (k, a) lexicographically.
    bool less_than(const PolyBound& q) const {
        if (k != q.k) return k < q.k;
        return a < q.a;
    }

    bool operator==(const PolyBound& o) const { return a == o.a && k == o.k; }
};

// Upper bound for q2(q1(n)) in the same shape: for n >= 0,
// q2(q1(n)) <= [a2 * (2*a1)^k2] * (n^(k1*k2) + 1).
inline PolyBound poly_compose(const PolyBound& q2, const PolyBound& q1) {
    std::uint64_t coeff = q2.a;
    for (std::uint32_t i = 0; i < q2.k; ++i) {
        std::uint64_t f = 2 * q1.a;
        if (coeff > UINT64_MAX / f) { coeff = UINT64_MAX; break; }
        coeff *= f;
    }
    std::uint64_t kk = static_cast<std::uint64_t>(q1.k) * q2.k;
    if (q2.k == 0) return PolyBound(2 * q2.a > q2.a ? 2 * q2.a : UINT64_MAX, 0);
    return PolyBound(coeff, static_cast<std::uint32_t>(kk));
}

// Coefficient-wise dominator of two bounds: pointwise >= both.
inline PolyBound poly_max(const PolyBound& p, const PolyBound& q) {
    return PolyBound(p.a > q.a ? p.a : q.a, p.k > q.k ? p.k : q.k);
}

inline PolyBound poly_sum(const PolyBound& p, const PolyBound& q) {
    PolyBound m = poly_max(p, q);
    return PolyBound(m.a <= UINT64_MAX / 2 ? 2 * m.a : UINT64_MAX, m.k);
}

} // namespace rtm
