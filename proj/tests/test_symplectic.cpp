#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paramod/characters.hpp"
#include "paramod/spmatrix.hpp"

using namespace paramod;

namespace {
const GroupContext SP1{1, 1, 1, 1, std::nullopt, std::nullopt};
}

TEST_CASE("generator shapes") {
    CHECK(make_W_eta(Rational(1)) == make_J());
    CHECK(make_D_eta(Rational(1)) == SpMatrix::identity());
    SpMatrix meta = make_M_eta(Rational(3, 2));
    CHECK(meta.at(1, 3) == QuadExt(Rational(3, 2)));
    CHECK_THROWS(make_W_eta(Rational(0)));
    CHECK_THROWS(make_M_lambda(2, 4)); // not primitive
    CHECK_THROWS(make_P_dt(2, 8));     // gcd(d, t/d) != 1
    CHECK_THROWS(make_P_dt(5, 5, 2, 2)); // Bezout violated
}

TEST_CASE("symplectic membership basics") {
    CHECK(similitude_member(SpMatrix::identity(), GroupKind::Sp_t, SP1));
    CHECK(similitude_member(make_J(), GroupKind::Sp_t, SP1));
    CHECK(similitude_member(SpMatrix::identity(), GroupKind::Gamma21, SP1));
    CHECK(!similitude_member(make_J(), GroupKind::Gamma21, SP1)); // row 4 = (0,-1,0,0)
    for (auto eta : {1LL, 2LL, 5LL}) {
        CHECK(similitude_member(make_M_eta(Rational(eta)), GroupKind::Sp_t, SP1));
        CHECK(similitude_member(make_M_eta(Rational(eta)), GroupKind::Sp_t,
                                GroupContext{1, 7, 1, 1, std::nullopt, std::nullopt}));
    }
    CHECK(similitude_member(make_M_lambda(3, 5), GroupKind::Sp_t, SP1));
}

TEST_CASE("P_dt satisfies the standard symplectic relation, not the literal J_t one") {
    SpMatrix p55 = make_P_dt(5, 5, 1, 4);
    CHECK(similitude_member(p55, GroupKind::Sp_t, SP1));
    CHECK(!similitude_member(p55, GroupKind::Sp_t, GroupContext{5, 5, 1, 1, std::nullopt, std::nullopt}));
    // entries in (1/sqrt 5) Z[sqrt 5]: rational parts zero, sqrt parts in (1/5)Z
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const QuadExt& e = p55.at(i, j);
            CHECK(e.rat().is_zero());
            CHECK((e.irr() * Rational(5)).is_integer());
        }
    CHECK(similitude_member(make_P_dt(2, 6), GroupKind::Sp_t, SP1));
    CHECK(similitude_member(make_P_dt(3, 21), GroupKind::Sp_t, SP1));
}

TEST_CASE("H_p(N) construction") {
    SpMatrix h = make_Hp(5, 4);
    // U = [[6, -1], [-5, 1]] sits in the lower-right block of the first factor
    // and the (4,3) divisibility is the paper's N | (sqrt p H)_{4,3}
    QuadExt chk = QuadExt::sqrt_of(5) * h.at(3, 2);
    CHECK(chk == QuadExt(Rational(-20)));
    GroupContext ctx{5, 1, 4, 1, std::nullopt, std::nullopt};
    CHECK(similitude_member(h, GroupKind::GammaStar, ctx));
    CHECK(!similitude_member(h, GroupKind::Gamma21_level, ctx));
    CHECK(similitude_member(h * h, GroupKind::Gamma21_level, ctx));

    // N = 1: p* = 0 convention, divisibility trivial
    SpMatrix h1 = make_Hp(7, 1);
    QuadExt c1 = QuadExt::sqrt_of(7) * h1.at(3, 2);
    CHECK(c1.is_integer());
    CHECK_THROWS(make_Hp(6, 5));  // p not prime
    CHECK_THROWS(make_Hp(5, 10)); // gcd(p, N) != 1
}

TEST_CASE("classification of explicit rows") {
    GroupContext ctx{5, 1, 4, 1, std::nullopt, std::nullopt};
    auto rt = classify_last_row(SpMatrix::identity(), ctx);
    CHECK(rt.variant == RowVariant::T1);
    CHECK(rt.lambda == std::array<i64, 4>{0, 0, 0, 1});
    CHECK(rt.unit_flag == 3);

    SpMatrix h = make_Hp(5, 4);
    auto rh = classify_last_row(h, ctx);
    CHECK((rh.variant == RowVariant::T3 || rh.variant == RowVariant::T4));

    // transversal products are type 1
    GroupContext ctx2{5, 1, 4, 2, std::nullopt, std::nullopt};
    SpMatrix m = make_M_dgamma(ctx2, 1, 3, 2) * make_M_lambda(1, 2);
    auto rm = classify_last_row(m, ctx2);
    CHECK(rm.variant == RowVariant::T1);
}

TEST_CASE("coset representative counts and equivalence") {
    GroupContext ctx{3, 1, 2, 1, {2}, {1}};
    // nu = 1, theta = N: N matrices
    auto reps1 = coset_reps(GroupContext{3, 1, 2, 1, std::nullopt, std::nullopt}, 1, 2);
    CHECK(reps1.size() == 2);
    // nu = 2, theta = 1: full box 4*(4+1) = 20, primitive 16
    auto reps_full = coset_reps(ctx, 2, 1, LambdaMode::full_box);
    auto reps_prim = coset_reps(ctx, 2, 1, LambdaMode::primitive);
    CHECK(reps_full.size() == 20);
    CHECK(reps_prim.size() == 16);

    GroupContext fine{3, 1, 4, 1, std::nullopt, std::nullopt};
    auto pred = [&](const SpMatrix& m) { return similitude_member(m, GroupKind::Gamma21_level, fine); };
    CHECK(coset_equivalent(reps_prim[0], reps_prim[0], pred));
    int classes = 0;
    std::vector<int> cls(reps_prim.size(), -1);
    for (size_t i = 0; i < reps_prim.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = classes++;
        for (size_t j = i + 1; j < reps_prim.size(); ++j)
            if (cls[j] < 0 && coset_equivalent(reps_prim[i], reps_prim[j], pred)) cls[j] = cls[i];
    }
    CHECK(classes == 16); // pairwise inequivalent
}

TEST_CASE("extended character values") {
    GroupContext ctx{5, 1, 4, 1, std::nullopt, std::nullopt};
    auto chi = enumerate_characters(4)[1];
    SpMatrix h = make_Hp(5, 4);
    auto plus = extended_char_eval_exact(h, chi, SignChoice::plus, 0, ctx);
    CHECK(!plus.zero);
    CHECK(plus.angle == Rational(0)); // chi+(H) = 1
    auto minus_even = extended_char_eval_exact(h, chi, SignChoice::k_minus, 8, ctx);
    CHECK(minus_even.angle == Rational(0));
    auto minus_odd = extended_char_eval_exact(h, chi, SignChoice::k_minus, 9, ctx);
    CHECK(minus_odd.angle == Rational(1, 2)); // (-1)^k = -1
    auto ident = extended_char_eval_exact(SpMatrix::identity(), chi, SignChoice::plus, 0, ctx);
    CHECK(ident.angle == Rational(0));
    CHECK_THROWS(extended_char_eval_exact(make_J(), chi, SignChoice::plus, 0, ctx));
}

TEST_CASE("matrix inverse and serialization") {
    std::mt19937_64 rng(7);
    SpMatrix m = make_Hp(7, 6) * make_M_lambda(2, 3) * make_M_eta(Rational(2));
    SpMatrix mi = m.inverse();
    CHECK(m * mi == SpMatrix::identity());
    CHECK(SpMatrix::parse(m.str()) == m);
    CHECK(m.det() * mi.det() == QuadExt(Rational(1)));
}

TEST_CASE("fj conjugators of Lemma 6.1") {
    GroupContext ctx{5, 1, 4, 1, std::nullopt, std::nullopt};
    // trivial parameters at nu = 1: C = N nu = 4, gamma = gamma* = mu = mu* = 1,
    // d = 1, r = (eps_gamma - gamma*)/nu = 0
    FjParams fp{4, 1, 1, /*p_s*/ 1, 1, 1, 1, /*eps_gamma*/ 1};
    auto hs = build_fj_conjugators(fp, ctx, 1);
    for (const SpMatrix* h : {&hs.H1, &hs.H2, &hs.H3, &hs.H4}) {
        CHECK(similitude_member(*h, GroupKind::Sp_t, SP1));
        CHECK(h->is_integral());
        CHECK(h->det() == QuadExt(Rational(1)));
    }
    // H3 is the identity at r = 0 and H4 a pure translation block
    CHECK(hs.H3 == SpMatrix::identity());
    CHECK(hs.H4.at(2, 2) == QuadExt(Rational(1)));
    CHECK(hs.H4.at(0, 2) == QuadExt(Rational(4 * 25 * 1 / 4))); // N d^2 p^2 p* eps / (C nu)

    // nu = 2 with C = 4 = N d mu at mu = 1: N nu / C = 2, p p* = 1 mod 2
    FjParams fp2{4, 1, 1, 1, 1, 1, 1, 1};
    auto hs2 = build_fj_conjugators(fp2, ctx, 2);
    for (const SpMatrix* h : {&hs2.H1, &hs2.H2, &hs2.H3, &hs2.H4}) {
        CHECK(similitude_member(*h, GroupKind::Sp_t, SP1));
        CHECK(h->is_integral());
    }

    // violated congruences throw
    FjParams bad{4, 1, 2, 1, 1, 1, 1, 2}; // gamma gamma* = 2, not 1 mod 2
    CHECK_THROWS(build_fj_conjugators(bad, ctx, 2));
    FjParams bad2{8, 1, 1, 1, 1, 1, 1, 1}; // C = 8 does not divide N d mu = 4
    CHECK_THROWS(build_fj_conjugators(bad2, ctx, 2));
}

TEST_CASE("random words stay in the star group and classify uniquely") {
    std::mt19937_64 rng(2024);
    for (auto [p, N] : {std::pair<i64, i64>{5, 4}, {7, 3}}) {
        GroupContext ctx{p, 1, N, 1, std::nullopt, std::nullopt};
        SpMatrix h = make_Hp(p, N);
        std::vector<SpMatrix> gens{make_M_eta(Rational(1)), make_M_lambda(1, 1), make_M_lambda(0, 1),
                                   make_M_dgamma(ctx, 1, 1, 1), h};
        {
            SpMatrix low = SpMatrix::identity();
            low.at(2, 0) = QuadExt(1);
            low.at(3, 1) = QuadExt(p * N * N);
            low.at(3, 0) = QuadExt(0);
            gens.push_back(low);
        }
        for (int t = 0; t < 50; ++t) {
            SpMatrix m = SpMatrix::identity();
            int len = 1 + static_cast<int>(rng() % 8);
            for (int i = 0; i < len; ++i) m = m * gens[rng() % gens.size()];
            CHECK(similitude_member(m, GroupKind::GammaStar, ctx));
            CHECK_NOTHROW(classify_last_row(m, ctx));
        }
    }
}
