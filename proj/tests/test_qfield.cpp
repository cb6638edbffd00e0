#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paramod/quadext.hpp"
#include "paramod/real.hpp"

using namespace paramod;

namespace {

QuadExt rand_elt(std::mt19937_64& rng, long long d) {
    auto ri = [&]() { return static_cast<long long>(rng() % 41) - 20; };
    long long den1 = 1 + static_cast<long long>(rng() % 9);
    long long den2 = 1 + static_cast<long long>(rng() % 9);
    return QuadExt(Rational(ri(), den1), Rational(ri(), den2), d);
}

} // namespace

TEST_CASE("rational normalization and equality") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational::parse("-14/21") == Rational(-2, 3));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("quadext arithmetic examples") {
    QuadExt one_plus(Rational(1), Rational(1), 5);
    QuadExt one_minus(Rational(1), Rational(-1), 5);
    CHECK(one_plus * one_minus == QuadExt(Rational(-4)));

    QuadExt x(Rational(2), Rational(1), 5);
    QuadExt inv = QuadExt(Rational(1)) / x;
    CHECK(inv == QuadExt(Rational(-2), Rational(1), 5));

    QuadExt r5 = QuadExt::sqrt_of(5);
    CHECK(r5 * r5 == QuadExt(Rational(5)));
    CHECK((r5 * r5).is_rational());
}

TEST_CASE("quadext radicand discipline") {
    QuadExt a(Rational(1), Rational(1), 5);
    QuadExt b(Rational(1), Rational(1), 7);
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
    // rational operands mix with anything
    CHECK((a + QuadExt(Rational(3))).radicand() == 5);
    CHECK_THROWS(QuadExt(Rational(1), Rational(1), 12)); // not square-free
    CHECK_THROWS(QuadExt(Rational(1), Rational(1), 0));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 200; ++t) {
        QuadExt a = rand_elt(rng, 5), b = rand_elt(rng, 5), c = rand_elt(rng, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * (QuadExt(Rational(1)) / a) == QuadExt(Rational(1)));
    }
}

TEST_CASE("embed_real correctness and monotonicity") {
    QuadExt x(Rational(1), Rational(1), 2);
    Real r = embed_real(x, 53);
    CHECK(std::abs(r.to_double() - 2.414213562373095) < 1e-15);
    CHECK(embed_real(QuadExt(Rational(3, 4)), 53).to_double() == 0.75);
    QuadExt five = QuadExt::sqrt_of(5) * QuadExt::sqrt_of(5);
    CHECK(embed_real(five, 64).to_double() == 5.0);
    CHECK_THROWS(embed_real(x, 50));

    // precision is monotone: higher precision stays within the coarse ulp
    Real lo = embed_real(x, 60), hi = embed_real(x, 200);
    CHECK(std::abs(lo.to_double() - hi.to_double()) < 1e-15);
}

TEST_CASE("embedding is multiplicative to 2 ulp") {
    std::mt19937_64 rng(999);
    for (int t = 0; t < 100; ++t) {
        QuadExt a = rand_elt(rng, 3), b = rand_elt(rng, 3);
        long double lhs = embed_ld(a * b);
        long double rhs = embed_ld(a) * embed_ld(b);
        long double scale = std::max<long double>(1, std::fabs(lhs));
        CHECK(std::fabs(lhs - rhs) <= 4e-19L * scale);
    }
}

TEST_CASE("serialization round trip") {
    QuadExt x(Rational(-3, 7), Rational(5, 2), 13);
    CHECK(QuadExt::parse(x.str()) == x);
    QuadExt y(Rational(4), Rational(-1, 3), 5);
    CHECK(QuadExt::parse(y.str()) == y);
}
