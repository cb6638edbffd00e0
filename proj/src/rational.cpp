#include "paramod/rational.hpp"

namespace paramod {

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
}

bool Rational::is_int_multiple_of(long long m) const {
    if (m == 0) return is_zero();
    if (!is_integer()) return false;
    return mpz_divisible_ui_p(num().get_mpz_t(), static_cast<unsigned long>(iabs(m))) != 0;
}

long long Rational::to_ll() const {
    if (!is_integer()) throw std::domain_error("Rational::to_ll: not an integer");
    mpz_class n = num();
    if (!n.fits_slong_p()) throw std::domain_error("Rational::to_ll: overflow");
    return n.get_si();
}

} // namespace paramod
