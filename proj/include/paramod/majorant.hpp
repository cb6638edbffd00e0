#pragma once

#include <array>
#include <complex>

#include "paramod/spmatrix.hpp"

namespace paramod {

using real_t = long double;
using cplx = std::complex<long double>;

using Mat2 = std::array<real_t, 4>;  // row major
using Mat4 = std::array<real_t, 16>; // row major
using CMat2 = std::array<cplx, 4>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_inv(const Mat2& a);
real_t mat2_det(const Mat2& a);

Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Mat4 mat4_transpose(const Mat4& a);
Mat4 mat4_inv(const Mat4& a);
real_t mat4_det(const Mat4& a);
real_t quad_form(const Mat4& q, const std::array<real_t, 4>& v);

/// Point Z = X + iY of the genus-2 upper half-space; Y positive definite.
struct SiegelPoint {
    Mat2 X{};
    Mat2 Y{};

    /// Throws unless Y is symmetric positive definite (leading minors).
    void validate() const;

    /// Parse order: x11 x12 x22 y11 y12 y22.
    static SiegelPoint from_six(const std::array<real_t, 6>& v);
    std::array<real_t, 6> to_six() const;
};

/// Positive definite majorant P_Z = [[Y + X Y^-1 X, X Y^-1], [Y^-1 X, Y^-1]];
/// det P_Z = 1 and P_{M<Z>}[w] = P_Z[M^tr w] for real symplectic M.
struct MajorantForm {
    Mat4 P{};
    real_t cond_Y = 1; // condition estimate of Y, reported for near-degenerate input
};

/// 64-bit-mantissa embedding of an exact matrix.
Mat4 embed_matrix(const SpMatrix& M);

/// M<Z> = (AZ + B)(CZ + D)^{-1}; throws when CZ + D is singular.
SiegelPoint siegel_action(const Mat4& M, const SiegelPoint& Z);
SiegelPoint siegel_action(const SpMatrix& M, const SiegelPoint& Z);

MajorantForm pz_form(const SiegelPoint& Z);

/// det Im M<Z> (the transformation det Y / |det(CZ+D)|^2 is a test oracle).
real_t det_im(const SiegelPoint& Z);

} // namespace paramod
