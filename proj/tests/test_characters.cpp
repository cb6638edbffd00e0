#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paramod/characters.hpp"
#include "paramod/specfun.hpp"

using namespace paramod;

TEST_CASE("enumeration sizes and group structure") {
    CHECK(enumerate_characters(5).size() == 4);
    CHECK(enumerate_characters(1).size() == 1);
    auto c12 = enumerate_characters(12);
    CHECK(c12.size() == 4);
    for (auto& chi : c12) CHECK(chi.power(2).is_principal()); // (Z/12)^x = C2 x C2
    // character group closure: products land in the enumeration
    auto c15 = enumerate_characters(15);
    CHECK(c15.size() == 8);
    for (auto& a : c15) {
        bool found = false;
        for (auto& b : c15)
            if (b == a * c15[1]) found = true;
        CHECK(found);
    }
}

TEST_CASE("character mod 1 is identically one") {
    DirichletCharacter one(1);
    CHECK(one.value(0) == cplx(1, 0));
    CHECK(one.value(17) == cplx(1, 0));
    CHECK(one.is_principal());
}

TEST_CASE("decomposition examples") {
    // principal mod 12: conductor 1, R = rad(12) = 6
    auto d = decompose(DirichletCharacter(12));
    CHECK(d.conductor == 1);
    CHECK(d.R == 6);
    CHECK(d.LR == 6);
    CHECK(d.nu.has_value());
    CHECK(*d.nu == 2);

    // induced from the quadratic mod 3 to modulus 12: L = 3, R = 2, LR = 6
    auto q3 = enumerate_characters(3)[1];
    auto ind = q3.induce(12);
    auto d2 = decompose(ind);
    CHECK(d2.conductor == 3);
    CHECK(d2.R == 2);
    CHECK(d2.LR == 6);
    CHECK(*d2.nu == 2);
    CHECK(d2.primitive_core == q3);

    // primitive mod 4
    auto c4 = enumerate_characters(4)[1];
    auto d3 = decompose(c4);
    CHECK(d3.conductor == 4);
    CHECK(d3.R == 1);
    CHECK(d3.LR == 4);
    CHECK(is_primitive(c4));

    // minimal-period scan oracle: LR is the least period of m -> chi(m)
    for (auto& chi : {ind, c4}) {
        i64 N = chi.modulus();
        auto dd = decompose(chi);
        auto is_period = [&](i64 P) {
            for (i64 m = 0; m < 3 * N; ++m)
                if (chi.value(m) != chi.value(m + P)) return false;
            return true;
        };
        CHECK(is_period(dd.LR));
        for (i64 P = 1; P < dd.LR; ++P) CHECK(!is_period(P));
    }
}

TEST_CASE("gauss sums") {
    auto q3 = enumerate_characters(3)[1];
    cplx g = gauss_sum(q3);
    CHECK(std::abs(g - cplx(0, std::sqrt(3.0L))) < 1e-17L);
    CHECK(gauss_sum(DirichletCharacter(1)) == cplx(1, 0));
    for (i64 N = 1; N <= 50; ++N)
        for (auto& chi : enumerate_characters(N)) {
            if (!is_primitive(chi)) continue;
            CHECK(std::fabs(std::norm(gauss_sum(chi)) - (long double)N) < 1e-9L * N);
        }
}

TEST_CASE("achisum hand-checkable values") {
    auto q3 = enumerate_characters(3)[1];
    cplx bf = achisum_bruteforce(q3, 1, 1);
    CHECK(std::abs(bf - cplx(0, -std::sqrt(3.0L))) < 1e-17L);
    cplx cf = achisum_closed(q3, 1, 1);
    CHECK(std::abs(cf - bf) < 1e-15L);

    auto c4 = enumerate_characters(4)[1];
    CHECK(std::abs(achisum_bruteforce(c4, 1, 1)) < 1e-18L);
    CHECK(std::abs(achisum_closed(c4, 1, 1)) < 1e-18L);
}

TEST_CASE("achisum closed equals brute force, primitive chi, N <= 12") {
    for (i64 N = 1; N <= 12; ++N)
        for (auto& chi : enumerate_characters(N)) {
            if (!is_primitive(chi)) continue;
            for (i64 nu : divisors(N)) {
                auto bf = achisum_bruteforce_all(chi, nu);
                for (i64 m = 0; m < N * nu; ++m) {
                    CHECK(std::abs(bf[(size_t)m] - achisum_closed(chi, nu, m)) < 1e-9L);
                    CHECK(std::abs(bf[(size_t)m] - chi.value(m) * bf[1 % (N * nu)]) < 1e-9L);
                }
            }
        }
}

TEST_CASE("inverse representatives: lifts change summands by full periods") {
    // beta* mod N nu is the paper's normalization; replacing beta* by
    // beta* + N nu leaves every summand unchanged
    auto q5 = enumerate_characters(5)[1];
    i64 N = 5, nu = 5, M = N * nu;
    cplx a(0, 0), b(0, 0);
    for (i64 beta = 0; beta < M; ++beta) {
        if (gcd_ll(beta, M) != 1) continue;
        for (i64 g = mod_ll(beta, nu); g < M; g += nu) {
            if (gcd_ll(g, M) != 1) continue;
            auto ca = q5.angle((beta - g) / nu);
            if (!ca) continue;
            i64 bs = inv_mod(beta, M), gs = inv_mod(g, M);
            long double th1 = 2 * PI_R * (long double)mod_ll(3 * (gs - bs), M) / M;
            long double th2 = 2 * PI_R * (long double)(3 * ((gs + M) - bs)) / M; // lifted
            a += q5.value((beta - g) / nu) * cplx(std::cos(th1), std::sin(th1));
            b += q5.value((beta - g) / nu) * cplx(std::cos(th2), std::sin(th2));
        }
    }
    CHECK(std::abs(a - b) < 1e-12L);
}

TEST_CASE("twist kernel identities") {
    // primitive: sum_mu conj(chi)(mu) e^{2 pi i m mu / N} = chi(m) G_{conj chi}
    for (i64 N : {3, 4, 5, 7, 8, 12}) {
        for (auto& chi : enumerate_characters(N)) {
            if (!is_primitive(chi)) continue;
            cplx gbar = gauss_sum(chi.conj());
            for (i64 m = 0; m < N; ++m) {
                cplx lhs(0, 0);
                for (i64 mu = 0; mu < N; ++mu) {
                    cplx w = chi.conj().value(mu);
                    long double th = 2 * PI_R * (long double)mod_ll(m * mu, N) / N;
                    lhs += w * cplx(std::cos(th), std::sin(th));
                }
                CHECK(std::abs(lhs - chi.value(m) * gbar) < 1e-9L);
            }
        }
    }
    // two-variable kernel, any chi: (1/N) sum_{nu,mu} chi(nu) e^{-2 pi i nu mu/N} e^{2 pi i m mu/N} = chi(m)
    for (i64 N : {4, 6, 9}) {
        for (auto& chi : enumerate_characters(N)) {
            for (i64 m = 0; m < N; ++m) {
                cplx lhs(0, 0);
                for (i64 nu = 0; nu < N; ++nu)
                    for (i64 mu = 0; mu < N; ++mu) {
                        cplx w = chi.value(nu);
                        if (w == cplx(0, 0)) continue;
                        long double th = 2 * PI_R * (long double)mod_ll((m - nu) * mu, N) / N;
                        lhs += w * cplx(std::cos(th), std::sin(th));
                    }
                lhs /= (long double)N;
                CHECK(std::abs(lhs - chi.value(m)) < 1e-9L);
            }
        }
    }
}

TEST_CASE("canonical index round trip") {
    for (i64 N : {5, 12, 16, 24}) {
        auto all = enumerate_characters(N);
        for (size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].canonical_index() == (i64)i);
            CHECK(character_by_index(N, (i64)i) == all[i]);
        }
    }
}
