#pragma once

#include <stdexcept>
#include <vector>

namespace epslab {

/**
 * Division-free characteristic polynomial (Samuelson-Berkowitz) of a square
 * matrix over any commutative ring. Returns det(xI - A) coefficients lowest
 * degree first, c[0..n] with c[n] = one. Needs only +, -, * on R.
 */
template <class R>
std::vector<R> berkowitz_char_poly(const std::vector<std::vector<R>>& a, const R& zero,
                                   const R& one) {
    const std::size_t n = a.size();
    if (n == 0) return {one};
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("char_poly: matrix not square");

    // c holds the char poly of the trailing principal j x j submatrix,
    // highest degree first.
    std::vector<R> c{one, zero - a[n - 1][n - 1]};
    for (std::size_t j = 2; j <= n; ++j) {
        const std::size_t base = n - j;  // submatrix starts at (base, base)
        // Toeplitz column: t[0] = 1, t[1] = -a(base,base),
        // t[i] = -(row * M^{i-2} * col) for the trailing (j-1)-block M.
        std::vector<R> t;
        t.reserve(j + 1);
        t.push_back(one);
        t.push_back(zero - a[base][base]);
        std::vector<R> r(j - 1, zero);
        for (std::size_t k = 0; k < j - 1; ++k) r[k] = a[base][base + 1 + k];
        for (std::size_t i = 2; i <= j; ++i) {
            R dot = zero;
            for (std::size_t k = 0; k < j - 1; ++k) dot = dot + r[k] * a[base + 1 + k][base];
            t.push_back(zero - dot);
            if (i == j) break;
            std::vector<R> nr(j - 1, zero);
            for (std::size_t kk = 0; kk < j - 1; ++kk) {
                R s = zero;
                for (std::size_t k = 0; k < j - 1; ++k) s = s + r[k] * a[base + 1 + k][base + 1 + kk];
                nr[kk] = s;
            }
            r = std::move(nr);
        }
        std::vector<R> next(j + 1, zero);
        for (std::size_t i = 0; i <= j; ++i)
            for (std::size_t k = 0; k < c.size(); ++k)
                if (i >= k && i - k < t.size()) next[i] = next[i] + t[i - k] * c[k];
        c = std::move(next);
    }
    return std::vector<R>(c.rbegin(), c.rend());
}

/// Determinant via Berkowitz: (-1)^n * charpoly(0).
template <class R>
R berkowitz_det(const std::vector<std::vector<R>>& a, const R& zero, const R& one) {
    std::vector<R> cp = berkowitz_char_poly(a, zero, one);
    R d = cp[0];
    if (a.size() % 2 == 1) d = zero - d;
    return d;
}

}  // namespace epslab
