#include "paramod/real.hpp"

#include <vector>

namespace paramod {

std::string Real::str(size_t digits) const {
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string dig = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    out += "0." + dig + "e" + std::to_string(e);
    return out;
}

Real embed_real(const QuadExt& x, mpfr_prec_t prec) {
    if (prec < 53) throw std::invalid_argument("embed_real: precision must be >= 53 bits");
    mpfr_prec_t work = prec + 32;
    mpfr_t a, b, s, r;
    mpfr_init2(a, work);
    mpfr_init2(b, work);
    mpfr_init2(s, work);
    mpfr_init2(r, work);
    mpfr_set_q(a, x.rat().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(b, x.irr().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt_ui(s, static_cast<unsigned long>(x.radicand()), MPFR_RNDN);
    mpfr_fma(r, b, s, a, MPFR_RNDN);
    Real out(prec);
    mpfr_set(out.raw(), r, MPFR_RNDN);
    mpfr_clears(a, b, s, r, static_cast<mpfr_ptr>(nullptr));
    return out;
}

long double embed_ld(const QuadExt& x) { return embed_real(x, 64).to_long_double(); }

long double embed_ld(const Rational& x) {
    mpfr_t r;
    mpfr_init2(r, 64);
    mpfr_set_q(r, x.raw().get_mpq_t(), MPFR_RNDN);
    long double out = mpfr_get_ld(r, MPFR_RNDN);
    mpfr_clear(r);
    return out;
}

} // namespace paramod
