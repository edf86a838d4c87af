#include "treespace/polytopes.hpp"

#include <bit>
#include <string>

namespace treespace {

SimplicialComplex assoc_dual(int n) {
    if (n < 3) throw RangeError("associahedron dual needs n >= 3");
    if (n > 255) throw RangeError("n too large for interval keys");

    std::vector<VertexKey> vertices;
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo + 1; hi <= n; ++hi)
            if (hi - lo + 1 <= n - 1) vertices.push_back(interval_key(lo, hi));

    auto related = [](VertexKey a, VertexKey b) {
        const int alo = interval_lo(a), ahi = interval_hi(a);
        const int blo = interval_lo(b), bhi = interval_hi(b);
        if (a == b) return false;
        const bool disjoint = ahi < blo || bhi < alo;
        const bool nested = (alo <= blo && bhi <= ahi) || (blo <= alo && ahi <= bhi);
        return disjoint || nested;
    };
    return flag_complex("assoc:" + std::to_string(n), std::move(vertices), related);
}

SimplicialComplex perm_dual(int m) {
    if (m < 2) throw RangeError("permutohedron dual needs m >= 2");
    if (m > 24) throw RangeError("m too large for subset keys");

    std::vector<VertexKey> vertices;
    const std::uint32_t full = ((std::uint32_t{1} << m) - 1) << 1;  // bits 1..m
    for (std::uint32_t s = 2; s < full; s += 2)
        if ((s & ~full) == 0) vertices.push_back(s);

    auto related = [](VertexKey a, VertexKey b) {
        if (a == b) return false;
        const VertexKey common = a & b;
        return common == a || common == b;  // comparable under inclusion
    };
    return flag_complex("perm:" + std::to_string(m), std::move(vertices), related);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticError("exact integer overflow in counting function");
    return r;
}

}  // namespace

std::uint64_t factorial(int k) {
    if (k < 0) throw RangeError("factorial of negative argument");
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i));
    return r;
}

std::uint64_t catalan(int k) {
    if (k < 0) throw RangeError("catalan of negative argument");
    // c_{i+1} = c_i * (4i+2) / (i+2), exact at every step.
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i)
        c = checked_mul(c, static_cast<std::uint64_t>(4 * i + 2)) / static_cast<std::uint64_t>(i + 2);
    return c;
}

std::uint64_t double_factorial_odd(int n) {
    if (n < 1) throw RangeError("(2n-3)!! needs n >= 1");
    std::uint64_t r = 1;
    for (int f = 2 * n - 3; f >= 3; f -= 2) r = checked_mul(r, static_cast<std::uint64_t>(f));
    return r;
}

}  // namespace treespace
