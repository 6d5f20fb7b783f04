#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace zxc {

using cplx = std::complex<double>;

constexpr double PI = 3.14159265358979323846;
const double SQRT2 = std::sqrt(2.0);
const double INV_SQRT2 = 1.0 / std::sqrt(2.0);

// Row-major 2x2 complex matrix.
using Mat2 = std::array<cplx, 4>;

// A linear form attached to a graph node: the row vector (f[0], f[1]).
// Phase alpha corresponds to (1, e^{i alpha}).
using LinearForm = std::array<cplx, 2>;

inline LinearForm apply_form(const LinearForm& f, const Mat2& m) {
    return {f[0] * m[0] + f[1] * m[2], f[0] * m[1] + f[1] * m[3]};
}

inline cplx expi(double a) { return {std::cos(a), std::sin(a)}; }

// exp(+i pi/4 X) = R_X(-pi/2), the form update on a complemented node.
inline Mat2 x_rot_minus_half_pi() {
    cplx d = INV_SQRT2, o = cplx(0, INV_SQRT2);
    return {d, o, o, d};
}

// exp(-i pi/4 Z) = R_Z(pi/2), the form update on its neighbors.
inline Mat2 z_rot_half_pi() {
    return {expi(-PI / 4), 0, 0, expi(PI / 4)};
}

}  // namespace zxc
