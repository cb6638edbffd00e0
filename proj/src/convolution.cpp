#include "paramod/convolution.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace paramod {

namespace {

cplx cpow(real_t base, cplx e) { return std::exp(e * std::log(cplx(base, 0))); }

} // namespace

void CoeffSeries::validate() const {
    for (size_t i = 0; i < c.size(); ++i) {
        real_t m = static_cast<real_t>(i + 1);
        if (std::abs(c[i]) > growth_constant * std::pow(m, growth_exponent) * (1 + 1e-12L))
            throw std::invalid_argument("CoeffSeries: growth bound violated at m = " + std::to_string(i + 1));
    }
}

CoeffSeries CoeffSeries::load(const std::string& path, int k, real_t growth_exponent, real_t growth_constant) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("CoeffSeries::load: cannot open " + path);
    CoeffSeries out;
    out.k = k;
    out.growth_exponent = growth_exponent;
    out.growth_constant = growth_constant;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long m;
        double re, im;
        if (!(ls >> m >> re >> im)) throw std::runtime_error("CoeffSeries::load: bad line: " + line);
        if (m < 1) throw std::runtime_error("CoeffSeries::load: indices start at 1");
        if (m > (long long)out.c.size()) out.c.resize(static_cast<size_t>(m), cplx(0, 0));
        out.c[static_cast<size_t>(m - 1)] = cplx(re, im);
    }
    out.validate();
    return out;
}

SeriesValue dirichlet_D(const CoeffSeries& c, const DirichletCharacter& chi, cplx s, i64 cutoff) {
    real_t sigma = s.real();
    if (!(sigma > c.growth_exponent + 1))
        throw std::invalid_argument("dirichlet_D: Re(s) > growth_exponent + 1 required");
    cplx sum(0, 0);
    i64 M = std::min<i64>(cutoff, (i64)c.c.size());
    for (i64 m = 1; m <= M; ++m) {
        cplx w = chi.value(m);
        if (w == cplx(0, 0)) continue;
        sum += c.at(m) * w * cpow((real_t)m, -s);
    }
    // integral tail estimate: C int_cutoff^inf x^{g - sigma} dx
    real_t tail = c.growth_constant * std::pow((real_t)cutoff, c.growth_exponent + 1 - sigma) /
                  (sigma - c.growth_exponent - 1);
    return {sum, tail};
}

SeriesValue completed_D(const CoeffSeries& c, const DirichletCharacter& chi, cplx s, i64 cutoff) {
    auto d = dirichlet_D(c, chi, s, cutoff);
    cplx arg = 2.0L * s - 2.0L * c.k + 2.0L * CoeffSeries::n;
    if (!(arg.real() > 1))
        throw std::invalid_argument("completed_D: L(2s - 2k + 2n, chi^2) outside the direct region");
    cplx lfac = dirichlet_L(arg, chi.power(2));
    cplx pref = cpow(2.0L * PI_R / chi.modulus(), -2.0L * s) * gamma_cplx(s) *
                gamma_cplx(s - (real_t)c.k + (real_t)CoeffSeries::n) * lfac;
    return {pref * d.value, std::abs(pref) * d.tail_bound};
}

CoeffSeries twist_coeffs(const CoeffSeries& c, const DirichletCharacter& chi) {
    CoeffSeries out = c;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] *= chi.value(static_cast<i64>(i + 1));
    return out;
}

cplx fe_factor(const DirichletCharacter& chi, i64 p, int k, cplx s) {
    if (!is_prime_ll(p)) throw std::invalid_argument("fe_factor: p must be prime");
    i64 N = chi.modulus();
    if (mod_ll(p, N) != mod_ll(1, N)) throw std::invalid_argument("fe_factor: p = 1 mod N required");
    if (!is_primitive(chi)) throw std::invalid_argument("fe_factor: chi must be primitive");
    cplx g = gauss_sum(chi);
    cplx g4 = g * g * g * g / (static_cast<real_t>(N) * N);
    cplx den = 1.0L + cpow((real_t)p, -(s - (real_t)k + 2.0L));
    if (std::abs(den) < 1e-15L) throw std::domain_error("fe_factor: denominator zero");
    return g4 * cpow((real_t)p, 3.0L * ((real_t)k - s - 1.0L)) * (1.0L + cpow((real_t)p, -((real_t)k - s))) /
           den;
}

cplx spinor_fe_factor(const DirichletCharacter& chi, int k) {
    if (!is_primitive(chi)) throw std::invalid_argument("spinor_fe_factor: chi must be primitive");
    i64 N = chi.modulus();
    cplx g = gauss_sum(chi);
    cplx v = g * g * g * g / (static_cast<real_t>(N) * N);
    return (k % 2 == 0) ? v : -v;
}

cplx euler_factor_gritsenko(i64 p, int k, cplx s) {
    cplx pk = cpow((real_t)p, (real_t)k - 2.0L - s);
    cplx pk2 = cpow((real_t)p, (real_t)k - s);
    real_t sign = (k % 2 == 0) ? 1 : -1;
    return cpow((real_t)p, -s) * (1.0L - pk) * ((real_t)p + sign * pk2);
}

i64 find_prime(i64 N, i64 bound) {
    if (N < 1) throw std::invalid_argument("find_prime: N >= 1 required");
    for (i64 p = 2; p <= bound; ++p)
        if (mod_ll(p, N) == mod_ll(1, N) && is_prime_ll(p)) return p;
    return -1;
}

} // namespace paramod
