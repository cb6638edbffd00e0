#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "paramod/convolution.hpp"

using namespace paramod;

TEST_CASE("basel value within the reported tail") {
    CoeffSeries c;
    c.c.assign(100000, cplx(1, 0));
    auto d = dirichlet_D(c, DirichletCharacter(1), cplx(2, 0), 100000);
    real_t ref = PI_R * PI_R / 6;
    CHECK(std::fabs((real_t)d.value.real() - ref) <= 1.1L * d.tail_bound);
    CHECK_THROWS(dirichlet_D(c, DirichletCharacter(1), cplx(0.9L, 0), 1000));
}

TEST_CASE("characters kill non-coprime indices") {
    CoeffSeries c;
    c.c.assign(30, cplx(1, 0));
    auto chi = enumerate_characters(6)[1];
    auto d = dirichlet_D(c, chi, cplx(2, 0), 30);
    cplx manual(0, 0);
    for (i64 m = 1; m <= 30; ++m)
        if (gcd_ll(m, 6) == 1) manual += chi.value(m) * std::exp(cplx(-2, 0) * std::log(cplx((real_t)m, 0)));
    CHECK(std::abs(d.value - manual) < 1e-18L);
}

TEST_CASE("coefficients supported on 1") {
    CoeffSeries c;
    c.c = {cplx(3.5L, -1)};
    auto d = dirichlet_D(c, DirichletCharacter(1), cplx(4, 0), 10);
    CHECK(std::abs(d.value - cplx(3.5L, -1)) < 1e-18L);
}

TEST_CASE("completed prefactor composition") {
    CoeffSeries c;
    c.c.assign(500, cplx(0, 0));
    for (size_t i = 0; i < 500; ++i) c.c[i] = cplx(1.0L / (1 + (real_t)i), 0.2L);
    c.k = 10;
    auto chi = enumerate_characters(4)[1];
    for (cplx s : {cplx(11.0L, 0), cplx(10.5L, 0.4L), cplx(12.25L, -0.3L)}) {
        auto d = dirichlet_D(c, chi, s, 500);
        auto cd = completed_D(c, chi, s, 500);
        cplx pref = std::exp(-2.0L * s * std::log(cplx(2 * PI_R / 4, 0))) * gamma_cplx(s) *
                    gamma_cplx(s - 10.0L + 2.0L) * dirichlet_L(2.0L * s - 16.0L, chi.power(2));
        CHECK(std::abs(cd.value - pref * d.value) <= 1e-15L * std::abs(cd.value));
    }
}

TEST_CASE("principal chi squared reduces the L factor to zeta minus Euler factors") {
    // L(s, principal mod 6) = zeta(s) (1 - 2^{-s}) (1 - 3^{-s})
    cplx s(2.3L, 0);
    cplx lhs = dirichlet_L(s, DirichletCharacter(6));
    cplx rhs = hurwitz_zeta(s, 1.0L) * (1.0L - std::exp(-s * std::log(cplx(2, 0)))) *
               (1.0L - std::exp(-s * std::log(cplx(3, 0))));
    CHECK(std::abs(lhs - rhs) < 1e-15L * std::abs(rhs));
}

TEST_CASE("twists") {
    CoeffSeries c;
    c.c.assign(100, cplx(1, 0));
    auto t0 = twist_coeffs(c, DirichletCharacter(1));
    for (size_t i = 0; i < 100; ++i) CHECK(t0.c[i] == cplx(1, 0));
    auto chi = enumerate_characters(5)[1];
    auto tw = twist_coeffs(twist_coeffs(c, chi), chi.conj());
    for (i64 m = 1; m <= 100; ++m)
        CHECK(std::abs(tw.c[(size_t)(m - 1)] - (gcd_ll(m, 5) == 1 ? cplx(1, 0) : cplx(0, 0))) < 1e-18L);
    // Gauss-kernel form of the twist for primitive chi
    cplx gbar = gauss_sum(chi.conj());
    auto tc = twist_coeffs(c, chi);
    for (i64 m = 1; m <= 100; ++m) {
        cplx acc(0, 0);
        for (i64 mu = 0; mu < 5; ++mu) {
            cplx w = chi.conj().value(mu);
            real_t th = 2 * PI_R * (real_t)mod_ll(m * mu, 5) / 5;
            acc += w * cplx(std::cos(th), std::sin(th));
        }
        CHECK(std::abs(acc / gbar - tc.c[(size_t)(m - 1)]) < 1e-9L);
    }
}

TEST_CASE("fe factor involution and specializations") {
    for (i64 N : {3, 4, 5, 7, 8}) {
        for (auto& chi : enumerate_characters(N)) {
            if (!is_primitive(chi)) continue;
            i64 p = find_prime(N, 1000);
            for (int k : {8, 11}) {
                cplx s(k - 1 + 0.7L, 0.3L);
                cplx prod = fe_factor(chi, p, k, s) * fe_factor(chi.conj(), p, k, cplx(2.0L * k - 2, 0) - s);
                CHECK(std::abs(prod - cplx(1, 0)) < 1e-12L);
                // center point: factor = G^4/N^2
                cplx g = gauss_sum(chi);
                cplx center = fe_factor(chi, p, k, cplx(k - 1, 0));
                CHECK(std::abs(center - g * g * g * g / ((real_t)(N * N))) < 1e-12L);
            }
        }
    }
    // N = 1: factor = p^{3(k-s-1)} (1 + p^{-(k-s)}) (1 + p^{-(s-k+2)})^{-1}
    DirichletCharacter one(1);
    cplx f = fe_factor(one, 7, 10, cplx(8.5L, 0));
    cplx ref = std::exp(cplx(3 * (10 - 8.5L - 1), 0) * std::log(cplx(7, 0))) *
               (1.0L + std::exp(cplx(-(10 - 8.5L), 0) * std::log(cplx(7, 0)))) /
               (1.0L + std::exp(cplx(-(8.5L - 10 + 2), 0) * std::log(cplx(7, 0))));
    CHECK(std::abs(f - ref) < 1e-15L * std::abs(ref));
    CHECK_THROWS(fe_factor(enumerate_characters(6)[1], 7, 10, cplx(8, 0))); // imprimitive
}

TEST_CASE("spinor factor") {
    DirichletCharacter one(1);
    CHECK(std::abs(spinor_fe_factor(one, 8) - cplx(1, 0)) < 1e-18L);
    CHECK(std::abs(spinor_fe_factor(one, 9) + cplx(1, 0)) < 1e-18L);
    auto q3 = enumerate_characters(3)[1];
    CHECK(std::abs(spinor_fe_factor(q3, 8) - cplx(1, 0)) < 1e-15L); // (i sqrt 3)^4 / 9 = 1
    CHECK(std::abs(spinor_fe_factor(q3, 8) * spinor_fe_factor(q3.conj(), 8) - cplx(1, 0)) < 1e-15L);
}

TEST_CASE("euler factor values") {
    CHECK(std::abs(euler_factor_gritsenko(7, 10, cplx(8, 0))) < 1e-18L); // s = k - 2
    cplx v = euler_factor_gritsenko(5, 9, cplx(9, 0));
    // k odd, s = k: p^{-k} (1 - p^{-2}) (p - 1)
    cplx ref = std::exp(cplx(-9, 0) * std::log(cplx(5, 0))) * (1.0L - 1.0L / 25) * 4.0L;
    CHECK(std::abs(v - ref) < 1e-18L * std::abs(ref));
}

TEST_CASE("find_prime examples") {
    CHECK(find_prime(4, 100) == 5);
    CHECK(find_prime(6, 100) == 7);
    CHECK(find_prime(12, 100) == 13);
    CHECK(find_prime(1, 100) == 2);
    CHECK(find_prime(97, 10) == -1);
}

TEST_CASE("coefficient file loading and growth validation") {
    const char* path = "/tmp/paramod_test_coeffs.txt";
    {
        std::ofstream f(path);
        f << "# comment\n1 1.0 0.0\n3 -2.0 0.5\n2 0.25 0\n";
    }
    auto c = CoeffSeries::load(path, 10, 1.0L, 2.0L);
    CHECK(c.c.size() == 3);
    CHECK(c.at(2) == cplx(0.25L, 0));
    CHECK(c.at(5) == cplx(0, 0));
    CHECK_THROWS(CoeffSeries::load(path, 10, 0.0L, 1.0L)); // growth bound violated at m=3
}

TEST_CASE("tail soundness under cutoff doubling") {
    CoeffSeries c;
    c.c.assign(80000, cplx(0, 0));
    for (size_t i = 0; i < c.c.size(); ++i) c.c[i] = cplx(std::cos((real_t)i), std::sin((real_t)i * 0.7L));
    auto a = dirichlet_D(c, DirichletCharacter(1), cplx(2.5L, 0), 20000);
    auto b = dirichlet_D(c, DirichletCharacter(1), cplx(2.5L, 0), 40000);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound);
}
