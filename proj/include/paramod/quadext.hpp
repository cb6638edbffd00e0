#pragma once

#include <string>

#include "paramod/rational.hpp"

namespace paramod {

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), d a positive
/// square-free integer (d = 1 encodes a plain rational; then b = 0).
///
/// The radicand travels with the value. Arithmetic between distinct
/// non-trivial radicands throws: each computation fixes one prime p, and
/// mixing contexts is a bug we want surfaced, not coerced away.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(1) {}
    QuadExt(long long a) : a_(a), b_(0), d_(1) {}
    QuadExt(Rational a, Rational b, long long d);

    const Rational& rat() const { return a_; }
    const Rational& irr() const { return b_; }
    long long radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    /// Entry of Z (plain rational integer).
    bool is_integer() const { return b_.is_zero() && a_.is_integer(); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    /// Field norm a^2 - d b^2.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// sqrt(p) as a value.
    static QuadExt sqrt_of(long long p) { return QuadExt(Rational(0), Rational(1), p); }

    /// Serialized as "a/b+c/d*sqrt(p)", the CLI matrix entry format.
    std::string str() const;
    static QuadExt parse(const std::string& s);

private:
    Rational a_, b_;
    long long d_;
};

} // namespace paramod
