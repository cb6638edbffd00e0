#include "paramod/quadext.hpp"

namespace paramod {

namespace {

long long common_radicand(const QuadExt& x, const QuadExt& y) {
    long long dx = x.is_rational() ? 1 : x.radicand();
    long long dy = y.is_rational() ? 1 : y.radicand();
    if (dx == 1) return dy;
    if (dy == 1) return dx;
    if (dx != dy) throw std::invalid_argument("QuadExt: radicand mismatch");
    return dx;
}

} // namespace

QuadExt::QuadExt(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 1) throw std::invalid_argument("QuadExt: radicand must be positive");
    if (d_ == 1) {
        // sqrt(1) = 1, fold into the rational part
        a_ += b_;
        b_ = Rational(0);
    } else if (!is_squarefree(d_)) {
        throw std::invalid_argument("QuadExt: radicand must be square-free");
    }
    if (b_.is_zero()) d_ = 1;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    long long d = common_radicand(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    long long d = common_radicand(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    long long d = common_radicand(x, y);
    return QuadExt(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
    long long d = common_radicand(x, y);
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - d b^2)
    Rational n = y.norm();
    QuadExt num = x * y.conj();
    return QuadExt(num.a_ / n, num.b_ / n, d);
}

std::string QuadExt::str() const {
    return a_.str() + "+" + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

QuadExt QuadExt::parse(const std::string& s) {
    auto star = s.find("*sqrt(");
    if (star == std::string::npos) return QuadExt(Rational::parse(s));
    // "a/b+c/d*sqrt(p)": the separator is the last sign before '*' that
    // follows a digit (signs at position 0 or after '/' belong to a fraction)
    size_t sep = std::string::npos;
    for (size_t i = star; i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] >= '0' && s[i - 1] <= '9') {
            sep = i;
            break;
        }
    }
    if (sep == std::string::npos) throw std::invalid_argument("QuadExt::parse: bad format: " + s);
    std::string a_part = s.substr(0, sep);
    std::string b_part = s.substr(s[sep] == '+' ? sep + 1 : sep, star - (s[sep] == '+' ? sep + 1 : sep));
    auto close = s.find(')', star);
    long long d = std::stoll(s.substr(star + 6, close - star - 6));
    return QuadExt(Rational::parse(a_part), Rational::parse(b_part), d);
}

} // namespace paramod
