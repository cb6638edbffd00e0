#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paramod/epstein.hpp"

using namespace paramod;

namespace {

const Mat4 I4{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};

Mat4 random_spd(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat4 g{};
    for (auto& x : g) x = (real_t)u(rng);
    Mat4 q{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            real_t s = (i == j) ? 0.4L : 0.0L;
            for (int k = 0; k < 4; ++k) s += g[k * 4 + i] * g[k * 4 + j];
            q[i * 4 + j] = s;
        }
    real_t f = std::pow(mat4_det(q), -0.25L);
    for (auto& x : q) x *= f;
    return q;
}

} // namespace

TEST_CASE("four squares oracle at s = 3") {
    EpsteinParams p;
    p.Q = I4;
    p.s = cplx(3, 0);
    p.truncation_radius = 25;
    auto dr = epstein_direct(p);
    // Jacobi: sum r4(n) n^{-s} = 8 (1 - 4^{1-s}) zeta(s) zeta(s-1), via the
    // independent scalar Euler-Maclaurin series
    real_t ref = 8.0L * (1 - std::pow(4.0L, -2.0L)) * zeta_real(3) * zeta_real(2);
    CHECK(std::fabs((real_t)(dr.value.real() - ref)) < 1e-3L * ref);
    CHECK(std::fabs((real_t)(dr.value.real() - ref)) < 10 * dr.tail_bound + 1e-12L);
    CHECK(dr.terms_used > 1000);
}

TEST_CASE("phase periodicity and homogeneity") {
    EpsteinParams p;
    p.Q = I4;
    p.s = cplx(2.8L, 0);
    p.truncation_radius = 10;
    p.u = RatVec4::of({1, 0, 0, 0}, {3, 1, 1, 1});
    p.v = RatVec4::of({1, 1, 0, 0}, {4, 7, 1, 1});
    auto a = epstein_direct(p);
    EpsteinParams q = p;
    q.v = RatVec4::of({5, 8, 2, -3}, {4, 7, 1, 1}); // v + integer vector
    auto b = epstein_direct(q);
    CHECK(std::abs(a.value - b.value) < 1e-15L * (1 + std::abs(a.value)));

    // zeta(s, 0, 0, cQ) = c^{-s} zeta(s, 0, 0, Q)
    EpsteinParams r;
    r.Q = I4;
    r.s = cplx(2.7L, 0);
    r.truncation_radius = 12;
    auto v1 = epstein_direct(r);
    for (auto& x : r.Q) x *= 3;
    r.truncation_radius = 12 * std::sqrt(3.0L);
    auto v3 = epstein_direct(r);
    cplx scale = std::exp(-r.s * std::log(cplx(3, 0)));
    CHECK(std::abs(v3.value - scale * v1.value) <= 1e-9L * std::abs(v1.value));
}

TEST_CASE("continued agrees with completed direct sums") {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 3; ++t) {
        Mat4 q = random_spd(rng);
        real_t maxdiag = std::max({q[0], q[5], q[10], q[15]});
        for (real_t sr : {2.2L, 2.5L, 3.5L}) {
            EpsteinParams p;
            p.Q = q;
            p.s = cplx(sr, 0);
            p.truncation_radius = std::sqrt(140.0L * maxdiag);
            auto dr = epstein_direct(p);
            cplx completed = std::exp(-p.s * std::log(cplx(PI_R, 0))) * gamma_cplx(p.s) * dr.value;
            cplx cont = epstein_continued(p);
            CHECK(std::abs(cont - completed) <= 1e-8L * (1 + std::abs(completed)));
        }
    }
}

TEST_CASE("continued with rational characteristics against the series") {
    EpsteinParams p;
    p.Q = I4;
    p.s = cplx(2.9L, 0);
    p.truncation_radius = 22;
    p.u = RatVec4::of({1, 0, 1, 0}, {2, 1, 3, 1});
    p.v = RatVec4::of({0, 2, 0, 1}, {1, 5, 1, 2});
    auto dr = epstein_direct(p);
    cplx completed = std::exp(-p.s * std::log(cplx(PI_R, 0))) * gamma_cplx(p.s) * dr.value;
    cplx cont = epstein_continued(p);
    CHECK(std::abs(cont - completed) <= 2e-8L * (1 + std::abs(completed)));
}

TEST_CASE("tail bound is sound under radius doubling") {
    EpsteinParams p;
    p.Q = I4;
    p.s = cplx(2.6L, 0);
    p.truncation_radius = 8;
    auto a = epstein_direct(p);
    p.truncation_radius = 16;
    auto b = epstein_direct(p);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound + 1e-15L);
}

TEST_CASE("residue of zeta* at s = 2") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 2; ++t) {
        Mat4 q = random_spd(rng);
        for (auto& x : q) x *= 1.3L; // det != 1
        real_t expected = 1.0L / std::sqrt(mat4_det(q));
        auto val = [&](real_t eps) {
            EpsteinParams p;
            p.Q = q;
            p.s = cplx(2 + eps, 0);
            return ((p.s - cplx(2, 0)) * epstein_continued(p)).real();
        };
        real_t f1 = val(1e-2L), f2 = val(5e-3L), f3 = val(2.5e-3L);
        real_t est = (4 * (2 * f3 - f2) - (2 * f2 - f1)) / 3;
        CHECK(std::fabs(est - expected) < 1e-4L * expected);
    }
}

TEST_CASE("functional equation check") {
    EpsteinParams p;
    p.Q = I4;
    p.s = cplx(2.7L, 0);
    auto fc = epstein_functional_check(p);
    CHECK(fc.abs_err <= 1e-10L * (1 + std::abs(fc.lhs)));

    std::mt19937_64 rng(5150);
    Mat4 q = random_spd(rng);
    EpsteinParams r;
    r.Q = q;
    r.s = cplx(1.0L, 0.7L); // critical line of the reflection
    auto f2 = epstein_functional_check(r);
    CHECK(f2.abs_err <= 1e-8L * (1 + std::abs(f2.lhs)));

    r.u = RatVec4::of({1, 0, 0, 1}, {3, 1, 1, 2});
    r.v = RatVec4::of({0, 1, 0, 0}, {1, 4, 1, 1});
    r.s = cplx(2.4L, 0.3L);
    auto f3 = epstein_functional_check(r);
    CHECK(f3.abs_err <= 1e-8L * (1 + std::abs(f3.lhs)));
}

TEST_CASE("parameter validation") {
    EpsteinParams p;
    p.Q = I4;
    p.s = cplx(1.5L, 0);
    CHECK_THROWS(epstein_direct(p)); // divergent region
    p.s = cplx(3, 0);
    p.precision_bits = 40;
    CHECK_THROWS(epstein_direct(p));
    p.precision_bits = 64;
    p.Q[1] = 0.5L; // asymmetric
    CHECK_THROWS(epstein_direct(p));
}
