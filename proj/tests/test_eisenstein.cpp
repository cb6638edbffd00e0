#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paramod/eisenstein.hpp"
#include "paramod/specfun.hpp"

using namespace paramod;

namespace {

SiegelPoint iI() {
    SiegelPoint z;
    z.X = {0, 0, 0, 0};
    z.Y = {1, 0, 0, 1};
    return z;
}

DirichletCharacter quad5() {
    for (auto& c : enumerate_characters(5))
        if (!c.is_principal() && c.is_real()) return c;
    throw std::logic_error("no quadratic mod 5");
}

// frozen regression anchor: N = 1, kappa = 1, trivial chi, p = 2, Z = iI,
// s = 2.6 (first computed by the windowed direct sum, tail < 1e-7)
const long double V0 = 5.551838562768L;

} // namespace

TEST_CASE("regression anchor V0 at N = 1") {
    EisParams P;
    P.ctx = GroupContext{2, 1, 1, 1, std::nullopt, std::nullopt};
    P.chi = DirichletCharacter(1);
    P.Z = iI();
    P.s = cplx(2.6L, 0);
    auto lat = eis_lattice_rep(P);
    CHECK(std::fabs((real_t)lat.value.real() - V0) <= std::max<real_t>(lat.tail_bound, 1e-7L));
    CHECK(std::fabs((real_t)lat.value.imag()) < 1e-9L);
    cplx r2 = eis_epstein_rep(P, EisVariant::second);
    CHECK(std::fabs((real_t)r2.real() - V0) < 5e-9L);
    cplx r3 = eis_epstein_rep(P, EisVariant::third);
    CHECK(std::abs(r2 - r3) < 1e-9L);
}

TEST_CASE("odd characters give the zero series") {
    // chi(-1) = -1 makes every lattice term cancel against its negative
    EisParams P;
    P.ctx = GroupContext{7, 1, 6, 1, std::nullopt, std::nullopt};
    P.chi = enumerate_characters(6)[1];
    P.Z = iI();
    P.s = cplx(2.6L, 0);
    CHECK(P.chi.parity() == -1);
    cplx r2 = eis_epstein_rep(P, EisVariant::second);
    CHECK(std::abs(r2) < 1e-9L);
}

TEST_CASE("weight-0 invariance under the eta translation") {
    EisParams P;
    P.ctx = GroupContext{3, 1, 2, 1, std::nullopt, std::nullopt};
    P.chi = DirichletCharacter(2);
    P.Z = SiegelPoint::from_six({0.1L, 0.05L, -0.2L, 1.2L, 0.25L, 0.9L});
    P.s = cplx(2.7L, 0);
    auto a = eis_lattice_rep(P);
    EisParams Q = P;
    Q.Z = siegel_action(make_M_eta(Rational(1)), P.Z);
    auto b = eis_lattice_rep(Q);
    CHECK(std::abs(a.value - b.value) <= 1e-8L * (1 + std::abs(a.value)) + a.tail_bound + b.tail_bound);
}

TEST_CASE("representation coherence, one nonzero grid point") {
    EisGrid g;
    g.ctx_base = GroupContext{7, 1, 6, 1, std::nullopt, std::nullopt};
    g.kappas = {1, 3};
    g.chis = {DirichletCharacter(6)};
    g.Z = iI();
    g.s = cplx(2.6L, 0);
    auto lat = eis_lattice_rep_grid(g);
    auto r2 = eis_epstein_rep_grid(g, EisVariant::second);
    for (size_t ki = 0; ki < g.kappas.size(); ++ki) {
        CHECK(std::abs(lat.values[ki][0] - r2[ki][0]) <= 1e-6L * (1 + std::abs(r2[ki][0])));
        CHECK(std::abs(r2[ki][0]) > 1); // substantive value
    }
}

TEST_CASE("residue at s = 2, N = 1") {
    EisParams P;
    P.ctx = GroupContext{2, 1, 1, 1, std::nullopt, std::nullopt};
    P.chi = DirichletCharacter(1);
    P.Z = iI();
    P.s = cplx(2.5L, 0);
    auto res = eis_residue(P);
    CHECK(res.expected == 2.0L);
    CHECK(std::fabs(res.numeric - res.expected) < 1e-3L);
}

TEST_CASE("functional equation corollary on an even primitive character") {
    EisParams P;
    P.ctx = GroupContext{11, 1, 5, 1, std::nullopt, std::nullopt};
    P.chi = quad5();
    P.Z = iI();
    P.s = cplx(2.4L, 0);
    auto fc = eis_fe_check(P, FeForm::corollary);
    CHECK(fc.rel_err < 1e-8L);
    CHECK(std::abs(fc.lhs) > 0.1L); // the check is substantive
}

TEST_CASE("fe preconditions") {
    EisParams P;
    P.ctx = GroupContext{3, 1, 5, 1, std::nullopt, std::nullopt}; // 3 != 1 mod 5
    P.chi = quad5();
    P.Z = iI();
    P.s = cplx(2.4L, 0);
    CHECK_THROWS(eis_fe_check(P, FeForm::corollary));
    EisParams Q;
    Q.ctx = GroupContext{11, 1, 5, 5, std::nullopt, std::nullopt};
    Q.chi = quad5();
    Q.Z = iI();
    Q.s = cplx(2.4L, 0);
    // kappa = 5 | L = 5 is fine for the corollary; context validates
    CHECK_NOTHROW(eis_fe_check(Q, FeForm::corollary));
}

TEST_CASE("smart sum degenerates to the corollary at R = 1") {
    EisParams P;
    P.ctx = GroupContext{11, 1, 5, 1, std::nullopt, std::nullopt};
    P.chi = quad5();
    P.Z = iI();
    P.s = cplx(2.4L, 0);
    auto res = smart_sum_check(P);
    CHECK(res.rel_err < 1e-7L);
}

TEST_CASE("moebius telescoping in exact rationals") {
    for (i64 R : {1, 2, 3, 5, 6, 10, 30}) CHECK(moebius_telescoping_exact(R));
    CHECK_THROWS(moebius_telescoping_exact(4));
}

TEST_CASE("difference series vanishes when q | N") {
    DiffParams d;
    d.base.ctx = GroupContext{11, 1, 5, 1, std::nullopt, std::nullopt};
    d.base.chi = quad5();
    d.base.Z = iI();
    d.base.s = cplx(2.6L, 0);
    d.q = 5;
    d.r = 1;
    SiegelPoint at = w_point(iI(), 5 * 5 * 11);
    CHECK(std::abs(diff_series_eval(d, at, cplx(2.6L, 0))) == 0.0L);
}

TEST_CASE("coset reference against the first representation statement") {
    // (1 + p^{-s}) L(2s, chi) E_coset = p^{-s} sum_l chi(l4) P[v1]^-s + sum_l chi(l4) P[v2]^-s
    EisParams P;
    P.ctx = GroupContext{11, 1, 5, 1, std::nullopt, std::nullopt};
    P.chi = quad5();
    P.Z = iI();
    P.s = cplx(3.0L, 0);
    const i64 H = 7;
    cplx coset = eis_coset_rep(P, H);
    cplx lhs = (1.0L + std::exp(-P.s * std::log(cplx(11, 0)))) * dirichlet_L(2.0L * P.s, P.chi) * coset;
    Mat4 PZ = pz_form(P.Z).P;
    cplx rhs(0, 0);
    i64 n2k = 11 * 25;
    for (i64 l1 = -H; l1 <= H; ++l1)
        for (i64 l2 = -H; l2 <= H; ++l2)
            for (i64 l3 = -H; l3 <= H; ++l3)
                for (i64 l4 = -H; l4 <= H; ++l4) {
                    if (l1 == 0 && l2 == 0 && l3 == 0 && l4 == 0) continue;
                    cplx w = P.chi.value(l4);
                    if (w == cplx(0, 0)) continue;
                    std::array<real_t, 4> v1{(real_t)(5 * l1), (real_t)(n2k * l2), (real_t)(5 * l3),
                                             (real_t)l4};
                    std::array<real_t, 4> v2{(real_t)(55 * l1), (real_t)(n2k * l2), (real_t)(55 * l3),
                                             (real_t)l4};
                    rhs += w * std::exp(-P.s * std::log(cplx(11 * quad_form(PZ, v1), 0)));
                    rhs += w * std::exp(-P.s * std::log(cplx(quad_form(PZ, v2), 0)));
                }
    // both sides truncated at matched height; tails dominate the difference
    CHECK(std::abs(lhs - rhs) <= 2e-2L * (1 + std::abs(lhs)));
}

TEST_CASE("vanishing sum for prime q | N") {
    EisParams P;
    P.ctx = GroupContext{11, 1, 5, 1, std::nullopt, std::nullopt};
    P.chi = quad5();
    P.Z = iI();
    P.s = cplx(2.6L, 0);
    auto v = vanishing_sum_check(P, 5);
    CHECK(v.scale > 1e-3L); // individual twisted sums are nonzero
    CHECK(std::abs(v.total) <= 1e-8L * (1 + v.scale));
}
