#pragma once

#include <stdexcept>
#include <vector>

#include "mayachain/poly.hpp"

namespace mayachain {

/// Physicists' Hermite polynomial H_n: H_0 = 1, H_1 = 2z,
/// H_{n+1} = 2z H_n - 2n H_{n-1}. Degree n, leading coefficient 2^n.
inline QPoly hermite(int n) {
    if (n < 0) throw std::invalid_argument("hermite: negative degree");
    QPoly prev = QPoly::one();
    if (n == 0) return prev;
    QPoly cur = QPoly::monomial(1, Rational(2));
    const QPoly two_z = cur;
    for (int m = 1; m < n; ++m) {
        QPoly next = two_z * cur - Rational(2 * m) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Conjugate Hermite polynomial: the sign-stripped companion of H_n, with the
/// same recurrence except for a + sign. All coefficients are non-negative and
/// theta_n' = 2n theta_{n-1}.
inline QPoly conjugate_hermite(int n) {
    if (n < 0) throw std::invalid_argument("conjugate_hermite: negative degree");
    QPoly prev = QPoly::one();
    if (n == 0) return prev;
    QPoly cur = QPoly::monomial(1, Rational(2));
    const QPoly two_z = cur;
    for (int m = 1; m < n; ++m) {
        QPoly next = two_z * cur + Rational(2 * m) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace mayachain
