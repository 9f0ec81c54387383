#pragma once

#include <vector>

#include "biham/ratfunc.hpp"

namespace biham {

using RatMatrix = std::vector<std::vector<RatFunc>>;

inline RatMatrix rat_identity(ContextPtr ctx, size_t n) {
    RatMatrix m(n, std::vector<RatFunc>(n, RatFunc::constant(ctx, 0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = RatFunc::constant(ctx, 1);
    return m;
}

// Gauss-Jordan inverse; throws on singular input.
inline RatMatrix rat_inverse(RatMatrix a) {
    size_t n = a.size();
    ContextPtr ctx = a[0][0].context();
    RatMatrix inv = rat_identity(ctx, n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error("matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        RatFunc d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFunc f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - f * a[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

// Solve a*x = rhs for square a; throws on singular.
inline std::vector<RatFunc> rat_solve(RatMatrix a, std::vector<RatFunc> rhs) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        RatFunc d = a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] = a[col][j] / d;
        rhs[col] = rhs[col] / d;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFunc f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    return rhs;
}

} // namespace biham
