#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mayachain/poly.hpp"

namespace mayachain {

enum class DetMethod {
    Auto,         ///< pick by predicted size
    Bareiss,      ///< fraction-free elimination on the polynomial matrix
    Interpolate,  ///< evaluate at integer nodes, take numeric determinants, interpolate
};

using PolyMatrix = std::vector<std::vector<QPoly>>;

namespace det_detail {

/// Fraction-free (Bareiss) determinant over Q[z]. Every division is exact;
/// intermediate entries are minors of the original matrix, which keeps
/// coefficient growth polynomial instead of exponential.
inline QPoly det_bareiss(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return QPoly::one();
    int sign = 1;
    QPoly prev_pivot = QPoly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return QPoly();  // zero column: singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                QPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = divexact(t, prev_pivot);
            }
            m[i][k] = QPoly();
        }
        prev_pivot = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Exact determinant of a numeric rational matrix (Gaussian elimination).
inline Rational det_numeric(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero(m[piv][k])) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        const Rational inv = Rational(1) / m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(m[i][k])) continue;
            const Rational f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

/// Newton interpolation through (x_i, y_i) with distinct integer nodes.
inline QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> coef = ys;  // divided differences, in place
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    // Horner on the Newton form
    QPoly result(coef[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        QPoly factor(std::vector<Rational>{-xs[i], Rational(1)});
        result = result * factor + QPoly(coef[i]);
    }
    return result;
}

inline QPoly det_interpolate(const PolyMatrix& m, int degree_bound) {
    const std::size_t n = m.size();
    if (n == 0) return QPoly::one();
    const int points = degree_bound + 1;
    std::vector<Rational> xs(points), ys(points);
    for (int t = 0; t < points; ++t) {
        // nodes 0, 1, -1, 2, -2, ...
        const int x = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
        xs[t] = Rational(x);
        std::vector<std::vector<Rational>> nm(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) nm[i][j] = m[i][j].eval(xs[t]);
        ys[t] = det_numeric(std::move(nm));
    }
    return interpolate(xs, ys);
}

inline int degree_bound_of(const PolyMatrix& m) {
    int bound = 0;
    for (const auto& row : m) {
        int rowmax = 0;
        for (const auto& e : row) rowmax = std::max(rowmax, e.degree());
        bound += std::max(rowmax, 0);
    }
    return bound;
}

}  // namespace det_detail

/// Determinant of a square polynomial matrix, exact over Q. The two routes
/// always agree; elimination stays faster in measurements up to degree ~500
/// (interpolation pays for the huge integer values at the outer nodes), so
/// Auto uses it and Interpolate remains the independent cross-check route.
inline QPoly poly_matrix_det(const PolyMatrix& m, DetMethod method = DetMethod::Auto) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("poly_matrix_det: not square");
    if (method == DetMethod::Auto) method = DetMethod::Bareiss;
    if (method == DetMethod::Bareiss) return det_detail::det_bareiss(m);
    return det_detail::det_interpolate(m, det_detail::degree_bound_of(m));
}

/// Wronskian determinant Wr[f_1, ..., f_m] = det [ D^i f_j ] (functions as
/// columns, derivative order down the rows). Exact; returns the zero
/// polynomial for linearly dependent inputs.
inline QPoly wronskian(const std::vector<QPoly>& fs, DetMethod method = DetMethod::Auto) {
    if (fs.empty()) throw std::invalid_argument("wronskian: empty list");
    const std::size_t n = fs.size();
    PolyMatrix m(n, std::vector<QPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        m[0][j] = fs[j];
        for (std::size_t i = 1; i < n; ++i) m[i][j] = m[i - 1][j].derivative();
    }
    return poly_matrix_det(m, method);
}

}  // namespace mayachain
