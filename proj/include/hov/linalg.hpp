#pragma once

// Dense exact linear algebra over rationals: Gaussian elimination, rank,
// nullspace and unique-solution solves. Sizes here are tiny (ambient
// dimension <= 4, a few dozen rows), so plain fraction-free-ish row
// reduction is all we need.

#include "hov/scalar.hpp"

#include <optional>
#include <vector>

namespace hov {

using Vec = std::vector<Rat>;
using Matrix = std::vector<Vec>;

namespace linalg {

// Reduces `m` to row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_echelon(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return row_echelon(m).size(); }

// Basis of {x : m x = 0}. Columns of `m` define the variable order.
inline std::vector<Vec> nullspace(Matrix m, std::size_t cols) {
    if (m.empty()) m.push_back(Vec(cols, Rat(0)));
    const auto pivots = row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves a x = b when the solution is unique; nullopt if inconsistent or
// underdetermined.
inline std::optional<Vec> solve_unique(Matrix a, const Vec& b) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    const auto pivots = row_echelon(a);
    // Inconsistent iff some pivot sits in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() != cols) return std::nullopt;
    Vec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

inline Rat dot(const Vec& a, const Vec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec scale(const Vec& a, const Rat& f) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * f;
    return r;
}

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

}  // namespace linalg
}  // namespace hov
