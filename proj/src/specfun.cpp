#include "paramod/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace paramod {

namespace {

// Lanczos, g = 607/128, 15 terms; accurate to ~1e-15 relative on the half
// plane Re s > 0.5 after the rational prefactor.
const long double LANCZOS_G = 607.0L / 128.0L;
const long double LANCZOS_C[15] = {
    0.99999999999999709182L,
    57.156235665862923517L,
    -59.597960355475491248L,
    14.136097974741747174L,
    -0.49191381609762019978L,
    0.33994649984811888699e-4L,
    0.46523628927048575665e-4L,
    -0.98374475304879564677e-4L,
    0.15808870322491248884e-3L,
    -0.21026444172410488319e-3L,
    0.21743961811521264320e-3L,
    -0.16431810653676389022e-3L,
    0.84418223983852743293e-4L,
    -0.26190838401581408670e-4L,
    0.36899182659531622704e-5L,
};

cplx lgamma_core(cplx s) {
    // requires Re s > 0.5
    cplx x = LANCZOS_C[0];
    for (int k = 1; k < 15; ++k) x += LANCZOS_C[k] / (s + cplx(k - 1, 0));
    cplx t = s + (LANCZOS_G - 0.5L);
    const long double half_log_2pi = 0.91893853320467274178032973640562L;
    return half_log_2pi + (s - 0.5L) * std::log(t) - t + std::log(x);
}

} // namespace

cplx lgamma_cplx(cplx s) {
    if (s.real() >= 0.5L) return lgamma_core(s);
    // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
    cplx lg = std::log(cplx(PI_R, 0)) - std::log(std::sin(cplx(PI_R, 0) * s)) - lgamma_core(cplx(1, 0) - s);
    return lg;
}

cplx gamma_cplx(cplx s) { return std::exp(lgamma_cplx(s)); }

cplx upper_gamma(cplx s, real_t x) {
    if (x <= 0) throw std::invalid_argument("upper_gamma: x > 0 required");
    if (x < s.real() + 1.0L || x < 1.0L) {
        bool nonpos_int = std::fabs(s.imag()) < 1e-14L &&
                          std::fabs(s.real() - std::llround(s.real())) < 1e-13L && s.real() < 0.5L;
        if (nonpos_int) {
            // Gamma(0,x) = E1(x), then the downward recurrence
            // Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x}) / s
            long k = -std::llround(s.real());
            const real_t euler = 0.57721566490153286060651209008240243L;
            real_t e1 = -euler - std::log(x);
            real_t term = 1; // (-x)^n / n!
            for (int n = 1; n < 400; ++n) {
                term *= -x / n;
                real_t add = term / n;
                e1 -= add;
                if (std::fabs(add) < 1e-25L * (1 + std::fabs(e1))) break;
            }
            real_t cur = e1; // Gamma(0, x)
            real_t ex = std::exp(-x);
            real_t xpow = 1;
            for (long j = 1; j <= k; ++j) {
                xpow /= x; // x^{-j}
                cur = (cur - xpow * ex) / static_cast<real_t>(-j);
            }
            return cplx(cur, 0);
        }
        // Gamma(s,x) = Gamma(s) - x^s e^{-x} sum_n x^n / (s (s+1) ... (s+n))
        cplx sum(0, 0);
        cplx term = cplx(1, 0) / s;
        sum = term;
        for (int n = 1; n < 600; ++n) {
            term *= x / (s + cplx(n, 0));
            sum += term;
            if (std::abs(term) < 1e-24L * std::abs(sum)) break;
        }
        cplx lower = std::exp(s * std::log(cplx(x, 0)) - x) * sum;
        return gamma_cplx(s) - lower;
    }
    // Lentz continued fraction: Gamma(s,x) = e^{-x} x^s / (x + 1 - s - 1/(x + 3 - s - ...))
    const real_t tiny = 1e-300L;
    cplx b = x + 1.0L - s;
    cplx c = 1.0L / tiny;
    cplx d = 1.0L / b;
    cplx h = d;
    for (int i = 1; i < 600; ++i) {
        cplx an = -cplx(i, 0) * (cplx(i, 0) - s);
        b += 2.0L;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0L / d;
        cplx delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0L) < 1e-22L) break;
    }
    return std::exp(-x + s * std::log(cplx(x, 0))) * h;
}

RadialTable::RadialTable(cplx sigma, real_t t_min, real_t t_max, int deg)
    : sigma_(sigma), t_min_(t_min), t_max_(t_max), deg_(deg) {
    if (deg_ < 4 || deg_ > MAX_DEG) throw std::invalid_argument("RadialTable: degree out of range");
    if (!(t_min > 0) || !(t_max > t_min)) throw std::invalid_argument("RadialTable: bad range");
    // dyadic intervals below t = 2 (power-law region), unit-width intervals
    // above (the e^{-pi t} region, where octaves cost Chebyshev accuracy)
    geo_split_ = std::min<real_t>(2.0L, t_max);
    n_geo_ = 0;
    for (real_t lo = t_min; lo < geo_split_; lo *= 1.5L) ++n_geo_;
    int n_lin = 0;
    if (t_max > geo_split_) n_lin = static_cast<int>(std::ceil(t_max - geo_split_));
    n_intervals_ = n_geo_ + n_lin;
    coeff_.resize(static_cast<size_t>(n_intervals_) * (deg_ + 1));
    lo_.resize(n_intervals_);
    hi_.resize(n_intervals_);
    real_t lo = t_min;
    for (int iv = 0; iv < n_intervals_; ++iv) {
        real_t hi = (iv < n_geo_) ? std::min(geo_split_, lo * 1.5L) : std::min(t_max, lo + 1);
        lo_[iv] = lo;
        hi_[iv] = hi;
        std::array<cplx, MAX_DEG + 1> fv;
        for (int k = 0; k <= deg_; ++k) {
            real_t xk = std::cos(PI_R * (k + 0.5L) / (deg_ + 1));
            real_t t = 0.5L * (lo + hi) + 0.5L * (hi - lo) * xk;
            real_t pt = PI_R * t;
            fv[static_cast<size_t>(k)] = std::exp(-sigma_ * std::log(cplx(pt, 0))) * upper_gamma(sigma_, pt);
        }
        for (int j = 0; j <= deg_; ++j) {
            cplx cj(0, 0);
            for (int k = 0; k <= deg_; ++k)
                cj += fv[static_cast<size_t>(k)] * std::cos(PI_R * j * (k + 0.5L) / (deg_ + 1));
            cj *= 2.0L / (deg_ + 1);
            coeff_[static_cast<size_t>(iv) * (deg_ + 1) + j] = cj;
        }
        lo = hi;
    }
}

cplx RadialTable::eval(real_t t) const {
    if (t > t_max_) return cplx(0, 0);
    if (t < t_min_) {
        // out of table; fall back to the direct special function
        real_t pt = PI_R * t;
        return std::exp(-sigma_ * std::log(cplx(pt, 0))) * upper_gamma(sigma_, pt);
    }
    int iv;
    if (t < geo_split_) {
        iv = static_cast<int>(std::floor(std::log(t / t_min_) / std::log(1.5L)));
        if (iv >= n_geo_) iv = n_geo_ - 1;
        if (iv < 0) iv = 0;
    } else {
        iv = n_geo_ + static_cast<int>(std::floor(t - geo_split_));
    }
    if (iv >= n_intervals_) iv = n_intervals_ - 1;
    while (iv > 0 && t < lo_[iv]) --iv;
    while (iv + 1 < n_intervals_ && t > hi_[iv]) ++iv;
    real_t x = (2 * t - lo_[iv] - hi_[iv]) / (hi_[iv] - lo_[iv]);
    // Clenshaw
    const cplx* c = &coeff_[static_cast<size_t>(iv) * (deg_ + 1)];
    cplx b1(0, 0), b2(0, 0);
    for (int j = deg_; j >= 1; --j) {
        cplx b0 = 2 * x * b1 - b2 + c[j];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + 0.5L * c[0];
}

real_t zeta_real(real_t s) {
    if (!(s > 1)) throw std::invalid_argument("zeta_real: s > 1 required");
    return hurwitz_zeta(cplx(s, 0), 1.0L).real();
}

cplx hurwitz_zeta(cplx s, real_t a) {
    if (s.real() <= 1.0L) throw std::invalid_argument("hurwitz_zeta: Re s > 1 required");
    if (!(a > 0 && a <= 1)) throw std::invalid_argument("hurwitz_zeta: 0 < a <= 1 required");
    const int M = 32; // direct terms
    cplx sum(0, 0);
    for (int n = 0; n < M; ++n) sum += std::exp(-s * std::log(cplx(n + a, 0)));
    // Euler-Maclaurin tail from x = M + a
    real_t x = M + a;
    cplx lx = std::log(cplx(x, 0));
    cplx tail = std::exp((1.0L - s) * lx) / (s - 1.0L); // integral
    tail += 0.5L * std::exp(-s * lx);
    // Bernoulli corrections B2/2! s x^{-s-1}, B4/4! s(s+1)(s+2) x^{-s-3}, ...
    static const real_t bern[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730};
    cplx fac = s;
    cplx xp = std::exp(-(s + 1.0L) * lx);
    for (int k = 0; k < 6; ++k) {
        static const real_t fact2k[] = {2, 24, 720, 40320, 3628800, 479001600};
        tail += bern[k] / fact2k[k] * fac * xp;
        fac *= (s + cplx(2 * k + 1, 0)) * (s + cplx(2 * k + 2, 0));
        xp /= x * x;
    }
    return sum + tail;
}

cplx dirichlet_L(cplx s, const DirichletCharacter& chi) {
    i64 N = chi.modulus();
    if (N == 1) return hurwitz_zeta(s, 1.0L);
    cplx out(0, 0);
    for (i64 r = 1; r <= N; ++r) {
        cplx v = chi.value(r);
        if (v == cplx(0, 0)) continue;
        out += v * hurwitz_zeta(s, static_cast<real_t>(r) / N);
    }
    return out * std::exp(-s * std::log(cplx(static_cast<real_t>(N), 0)));
}

} // namespace paramod
