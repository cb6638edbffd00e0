#include "paramod/majorant.hpp"

#include <cmath>
#include <stdexcept>

#include "paramod/real.hpp"

namespace paramod {

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

real_t mat2_det(const Mat2& a) { return a[0] * a[3] - a[1] * a[2]; }

Mat2 mat2_inv(const Mat2& a) {
    real_t d = mat2_det(a);
    if (d == 0) throw std::domain_error("mat2_inv: singular");
    return {a[3] / d, -a[1] / d, -a[2] / d, a[0] / d};
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            real_t s = 0;
            for (int k = 0; k < 4; ++k) s += a[i * 4 + k] * b[k * 4 + j];
            c[i * 4 + j] = s;
        }
    return c;
}

Mat4 mat4_transpose(const Mat4& a) {
    Mat4 t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i * 4 + j] = a[j * 4 + i];
    return t;
}

Mat4 mat4_inv(const Mat4& a) {
    // Gauss-Jordan with partial pivoting
    std::array<real_t, 32> w{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            w[i * 8 + j] = a[i * 4 + j];
            w[i * 8 + 4 + j] = (i == j) ? 1.0L : 0.0L;
        }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(w[r * 8 + col]) > std::fabs(w[piv * 8 + col])) piv = r;
        if (w[piv * 8 + col] == 0) throw std::domain_error("mat4_inv: singular");
        if (piv != col)
            for (int j = 0; j < 8; ++j) std::swap(w[piv * 8 + j], w[col * 8 + j]);
        real_t p = w[col * 8 + col];
        for (int j = 0; j < 8; ++j) w[col * 8 + j] /= p;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            real_t f = w[r * 8 + col];
            if (f == 0) continue;
            for (int j = 0; j < 8; ++j) w[r * 8 + j] -= f * w[col * 8 + j];
        }
    }
    Mat4 inv{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i * 4 + j] = w[i * 8 + 4 + j];
    return inv;
}

real_t mat4_det(const Mat4& a) {
    Mat4 w = a;
    real_t det = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(w[r * 4 + col]) > std::fabs(w[piv * 4 + col])) piv = r;
        if (w[piv * 4 + col] == 0) return 0;
        if (piv != col) {
            for (int j = 0; j < 4; ++j) std::swap(w[piv * 4 + j], w[col * 4 + j]);
            det = -det;
        }
        det *= w[col * 4 + col];
        for (int r = col + 1; r < 4; ++r) {
            real_t f = w[r * 4 + col] / w[col * 4 + col];
            for (int j = col; j < 4; ++j) w[r * 4 + j] -= f * w[col * 4 + j];
        }
    }
    return det;
}

real_t quad_form(const Mat4& q, const std::array<real_t, 4>& v) {
    real_t s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += v[i] * q[i * 4 + j] * v[j];
    return s;
}

void SiegelPoint::validate() const {
    if (X[1] != X[2] || Y[1] != Y[2]) throw std::invalid_argument("SiegelPoint: X, Y must be symmetric");
    if (!(Y[0] > 0) || !(mat2_det(Y) > 0))
        throw std::invalid_argument("SiegelPoint: Y must be positive definite");
}

SiegelPoint SiegelPoint::from_six(const std::array<real_t, 6>& v) {
    SiegelPoint z;
    z.X = {v[0], v[1], v[1], v[2]};
    z.Y = {v[3], v[4], v[4], v[5]};
    z.validate();
    return z;
}

std::array<real_t, 6> SiegelPoint::to_six() const { return {X[0], X[1], X[3], Y[0], Y[1], Y[3]}; }

Mat4 embed_matrix(const SpMatrix& M) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i * 4 + j] = embed_ld(M.at(i, j));
    return m;
}

namespace {

CMat2 cmat2_mul(const CMat2& a, const CMat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

CMat2 cmat2_inv(const CMat2& a) {
    cplx d = a[0] * a[3] - a[1] * a[2];
    if (std::abs(d) == 0) throw std::domain_error("siegel_action: CZ + D singular");
    return {a[3] / d, -a[1] / d, -a[2] / d, a[0] / d};
}

} // namespace

SiegelPoint siegel_action(const Mat4& M, const SiegelPoint& Z) {
    CMat2 zc{cplx(Z.X[0], Z.Y[0]), cplx(Z.X[1], Z.Y[1]), cplx(Z.X[2], Z.Y[2]), cplx(Z.X[3], Z.Y[3])};
    CMat2 A{M[0], M[1], M[4], M[5]};
    CMat2 B{M[2], M[3], M[6], M[7]};
    CMat2 C{M[8], M[9], M[12], M[13]};
    CMat2 D{M[10], M[11], M[14], M[15]};
    CMat2 num = cmat2_mul(A, zc);
    CMat2 den = cmat2_mul(C, zc);
    for (int i = 0; i < 4; ++i) {
        num[i] += B[i];
        den[i] += D[i];
    }
    CMat2 w = cmat2_mul(num, cmat2_inv(den));
    // symmetrize to kill roundoff skew
    cplx off = (w[1] + w[2]) / 2.0L;
    SiegelPoint out;
    out.X = {w[0].real(), off.real(), off.real(), w[3].real()};
    out.Y = {w[0].imag(), off.imag(), off.imag(), w[3].imag()};
    out.validate();
    return out;
}

SiegelPoint siegel_action(const SpMatrix& M, const SiegelPoint& Z) {
    return siegel_action(embed_matrix(M), Z);
}

MajorantForm pz_form(const SiegelPoint& Z) {
    Z.validate();
    Mat2 yinv = mat2_inv(Z.Y);
    Mat2 xyinv = mat2_mul(Z.X, yinv);
    Mat2 yinvx = mat2_mul(yinv, Z.X);
    Mat2 top = mat2_mul(xyinv, Z.X);
    for (int i = 0; i < 4; ++i) top[i] += Z.Y[i];
    MajorantForm f;
    auto put = [&](int bi, int bj, const Mat2& m) {
        f.P[(bi * 2) * 4 + bj * 2] = m[0];
        f.P[(bi * 2) * 4 + bj * 2 + 1] = m[1];
        f.P[(bi * 2 + 1) * 4 + bj * 2] = m[2];
        f.P[(bi * 2 + 1) * 4 + bj * 2 + 1] = m[3];
    };
    put(0, 0, top);
    put(0, 1, xyinv);
    put(1, 0, yinvx);
    put(1, 1, yinv);
    // crude spectral condition estimate of Y from trace/det
    real_t tr = Z.Y[0] + Z.Y[3], dt = mat2_det(Z.Y);
    real_t disc = std::sqrt(std::max<real_t>(0, tr * tr / 4 - dt));
    real_t lmax = tr / 2 + disc, lmin = tr / 2 - disc;
    f.cond_Y = (lmin > 0) ? lmax / lmin : INFINITY;
    return f;
}

real_t det_im(const SiegelPoint& Z) { return mat2_det(Z.Y); }

} // namespace paramod
