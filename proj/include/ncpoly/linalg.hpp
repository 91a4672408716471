#ifndef NCPOLY_LINALG_HPP
#define NCPOLY_LINALG_HPP

#include "rational.hpp"

#include <cstddef>
#include <vector>

namespace ncpoly {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>; // row major

/// Classified solution set of A x = b over the rationals.
struct LinearSolution {
    enum class Kind { unique, none, affine };
    Kind kind;
    RatVec particular;  // absent for kind == none
    std::vector<RatVec> kernel; // basis, ordered by free column ascending
};

/// Reduced row echelon form in place. Pivot on the first non-zero entry of
/// each column (exact arithmetic needs no pivoting for stability).
/// Returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t t = c; t < cols; ++t) m[r][t] *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || m[q][c] == 0) continue;
            Rational f = m[q][c];
            for (std::size_t t = c; t < cols; ++t) m[q][t] -= f * m[r][t];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline LinearSolution solve_linear_system(RatMat a, const RatVec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
    auto pivots = rref(a);

    LinearSolution sol;
    // inconsistent: pivot in the augmented column
    if (!pivots.empty() && pivots.back() == cols) {
        sol.kind = LinearSolution::Kind::none;
        return sol;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    sol.particular.assign(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        sol.particular[pivots[r]] = a[r][cols];

    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(cols, Rational(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][c];
        sol.kernel.push_back(std::move(v));
    }
    sol.kind = sol.kernel.empty() ? LinearSolution::Kind::unique
                                  : LinearSolution::Kind::affine;
    return sol;
}

/// Exact determinant by fraction-free style rational elimination.
inline Rational det(RatMat m) {
    const std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] * inv;
            for (std::size_t t = c; t < n; ++t) m[r][t] -= f * m[c][t];
        }
    }
    return d;
}

inline RatMat invert(const RatMat& m) {
    const std::size_t n = m.size();
    RatMat aug = m;
    for (std::size_t r = 0; r < n; ++r) {
        aug[r].resize(2 * n);
        aug[r][n + r] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw AlgebraError("matrix is singular");
    RatMat out(n, RatVec(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r][c] = aug[r][n + c];
    return out;
}

inline RatMat mat_mul(const RatMat& x, const RatMat& y) {
    const std::size_t n = x.size(), m = y[0].size(), k = y.size();
    RatMat out(n, RatVec(m, Rational(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < k; ++t) {
            if (x[r][t] == 0) continue;
            for (std::size_t c = 0; c < m; ++c)
                out[r][c] += x[r][t] * y[t][c];
        }
    return out;
}

} // namespace ncpoly

#endif
