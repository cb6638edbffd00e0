#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paramod/majorant.hpp"
#include "paramod/spmatrix.hpp"

using namespace paramod;

namespace {

SiegelPoint iI() {
    SiegelPoint z;
    z.X = {0, 0, 0, 0};
    z.Y = {1, 0, 0, 1};
    return z;
}

SpMatrix random_symplectic(std::mt19937_64& rng) {
    SpMatrix m = SpMatrix::identity();
    for (int step = 0; step < 6; ++step) {
        switch (rng() % 4) {
            case 0: {
                SpMatrix t = SpMatrix::identity();
                i64 b11 = (i64)(rng() % 5) - 2, b12 = (i64)(rng() % 5) - 2, b22 = (i64)(rng() % 5) - 2;
                t.at(0, 2) = QuadExt(b11);
                t.at(0, 3) = QuadExt(b12);
                t.at(1, 2) = QuadExt(b12);
                t.at(1, 3) = QuadExt(b22);
                m = m * t;
                break;
            }
            case 1:
                m = m * make_J();
                break;
            case 2:
                m = m * make_M_lambda(1, 1 + (i64)(rng() % 3));
                break;
            default:
                m = m * make_M_eta(Rational((i64)(rng() % 7) - 3));
        }
    }
    return m;
}

} // namespace

TEST_CASE("siegel action basics") {
    CHECK(siegel_action(make_J(), iI()).to_six() == iI().to_six());
    SiegelPoint z = SiegelPoint::from_six({0.3L, 0.1L, -0.2L, 2.0L, 0.5L, 1.5L});
    SiegelPoint z2 = siegel_action(make_M_eta(Rational(3)), z);
    CHECK(std::fabs(z2.X[3] - (z.X[3] + 3)) < 1e-18L);
    CHECK(std::fabs(z2.X[0] - z.X[0]) < 1e-18L);
    CHECK(std::fabs(z2.Y[0] - z.Y[0]) < 1e-18L);
    CHECK_THROWS(SiegelPoint::from_six({0, 0, 0, 1, 3, 1})); // Y not positive definite
}

TEST_CASE("det Im transformation on random symplectic matrices") {
    std::mt19937_64 rng(55);
    SiegelPoint z = SiegelPoint::from_six({0.3L, 0.1L, -0.2L, 2.0L, 0.5L, 1.5L});
    for (int t = 0; t < 100; ++t) {
        SpMatrix m = random_symplectic(rng);
        Mat4 mr = embed_matrix(m);
        SiegelPoint w = siegel_action(mr, z);
        // det Im M<Z> = det Y / |det(CZ+D)|^2
        CMat2 cz{cplx(z.X[0], z.Y[0]), cplx(z.X[1], z.Y[1]), cplx(z.X[2], z.Y[2]), cplx(z.X[3], z.Y[3])};
        cplx c11(mr[8], 0), c12(mr[9], 0), c21(mr[12], 0), c22(mr[13], 0);
        cplx d11(mr[10], 0), d12(mr[11], 0), d21(mr[14], 0), d22(mr[15], 0);
        cplx e11 = c11 * cz[0] + c12 * cz[2] + d11, e12 = c11 * cz[1] + c12 * cz[3] + d12;
        cplx e21 = c21 * cz[0] + c22 * cz[2] + d21, e22 = c21 * cz[1] + c22 * cz[3] + d22;
        cplx det_czd = e11 * e22 - e12 * e21;
        real_t lhs = det_im(w);
        real_t rhs = det_im(z) / std::norm(det_czd);
        CHECK(std::fabs(lhs - rhs) <= 1e-14L * std::fabs(rhs));
    }
}

TEST_CASE("majorant form examples") {
    MajorantForm f = pz_form(iI());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::fabs(f.P[i * 4 + j] - (i == j ? 1.0L : 0.0L)) < 1e-18L);

    SiegelPoint z;
    z.X = {0, 0, 0, 0};
    z.Y = {2, 0, 0, 3};
    MajorantForm g = pz_form(z);
    CHECK(std::fabs(quad_form(g.P, {0, 0, 0, 1}) - 1.0L / 3) < 1e-18L);
    CHECK(std::fabs(quad_form(g.P, {0, 0, 0, 1}) - 1.0L / (det_im(z) / z.Y[0])) < 1e-18L);
}

TEST_CASE("majorant determinant, positivity and growth") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int t = 0; t < 40; ++t) {
        SiegelPoint z;
        real_t y11 = 0.3L + std::fabs((real_t)u(rng)) * 2, y22 = 0.3L + std::fabs((real_t)u(rng)) * 2;
        real_t y12 = (real_t)u(rng) * 0.4L * std::sqrt(y11 * y22);
        z.X = {(real_t)u(rng), (real_t)u(rng), 0, (real_t)u(rng)};
        z.X[2] = z.X[1];
        z.Y = {y11, y12, y12, y22};
        MajorantForm f = pz_form(z);
        CHECK(std::fabs(mat4_det(f.P) - 1) < 1e-10L);
        // positivity via the quadratic form on a few vectors
        std::array<real_t, 4> v{(real_t)u(rng), (real_t)u(rng), (real_t)u(rng), 1};
        CHECK(quad_form(f.P, v) > 0);
    }
}

TEST_CASE("transformation law P_{M<Z>}[w] = P_Z[M^tr w]") {
    std::mt19937_64 rng(88);
    SiegelPoint z = SiegelPoint::from_six({0.25L, -0.4L, 0.6L, 1.7L, 0.3L, 0.9L});
    Mat4 p = pz_form(z).P;
    for (int t = 0; t < 100; ++t) {
        SpMatrix m = random_symplectic(rng);
        Mat4 mr = embed_matrix(m);
        Mat4 pw = pz_form(siegel_action(mr, z)).P;
        Mat4 mt = mat4_transpose(mr);
        std::uniform_int_distribution<int> d(-3, 3);
        std::array<real_t, 4> w{(real_t)d(rng), (real_t)d(rng), (real_t)d(rng), (real_t)d(rng)};
        if (w == std::array<real_t, 4>{0, 0, 0, 0}) w[3] = 1;
        std::array<real_t, 4> mw{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) mw[i] += mt[i * 4 + j] * w[j];
        real_t lhs = quad_form(pw, w), rhs = quad_form(p, mw);
        CHECK(std::fabs(lhs - rhs) <= 1e-9L * std::fabs(rhs));
    }
}
