#include "paramod/epstein.hpp"

#include <cstdlib>

namespace paramod {

RatVec4 RatVec4::of(std::array<i64, 4> n, std::array<i64, 4> d) {
    RatVec4 v;
    for (int i = 0; i < 4; ++i) {
        if (d[i] == 0) throw std::invalid_argument("RatVec4: zero denominator");
        i64 g = gcd_ll(n[i], d[i]);
        if (g == 0) g = 1;
        i64 sgn = d[i] < 0 ? -1 : 1;
        v.num[i] = sgn * n[i] / g;
        v.den[i] = sgn * d[i] / g;
    }
    return v;
}

bool RatVec4::is_integral() const {
    for (int i = 0; i < 4; ++i)
        if (den[i] != 1) return false;
    return true;
}

std::pair<RatVec4, std::array<i64, 4>> RatVec4::split_mod1() const {
    RatVec4 frac;
    std::array<i64, 4> ip{};
    for (int i = 0; i < 4; ++i) {
        i64 q = num[i] >= 0 ? num[i] / den[i] : -((-num[i] + den[i] - 1) / den[i]);
        ip[i] = q;
        frac.num[i] = num[i] - q * den[i];
        frac.den[i] = den[i];
        i64 g = gcd_ll(frac.num[i], frac.den[i]);
        if (g > 1) {
            frac.num[i] /= g;
            frac.den[i] /= g;
        }
        if (frac.num[i] == 0) frac.den[i] = 1;
    }
    return {frac, ip};
}

RatVec4 RatVec4::negated() const {
    RatVec4 v = *this;
    for (auto& n : v.num) n = -n;
    return v;
}

std::array<real_t, 4> RatVec4::to_real() const {
    return {static_cast<real_t>(num[0]) / den[0], static_cast<real_t>(num[1]) / den[1],
            static_cast<real_t>(num[2]) / den[2], static_cast<real_t>(num[3]) / den[3]};
}

Rational RatVec4::dot_int(const std::array<i64, 4>& w) const {
    Rational s(0);
    for (int i = 0; i < 4; ++i) s += Rational(num[i] * w[i], den[i]);
    return s;
}

Rational RatVec4::dot(const RatVec4& o) const {
    Rational s(0);
    for (int i = 0; i < 4; ++i) s += Rational(num[i], den[i]) * Rational(o.num[i], o.den[i]);
    return s;
}

cplx phase_of(const Rational& q) {
    // reduce mod 1 exactly, then one trig call
    mpz_class n = q.num(), d = q.den(), f;
    mpz_fdiv_r(f.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    real_t frac = static_cast<real_t>(f.get_d()) / static_cast<real_t>(d.get_d());
    real_t th = 2.0L * PI_R * frac;
    return cplx(std::cos(th), std::sin(th));
}

void EpsteinParams::validate() const {
    if (precision_bits < 53) throw std::invalid_argument("EpsteinParams: precision >= 53 bits required");
    if (!(truncation_radius > 0)) throw std::invalid_argument("EpsteinParams: positive radius required");
    real_t scale = 0;
    for (auto x : Q) scale = std::max(scale, std::fabs(x));
    auto sym = [&](int i, int j) { return std::fabs(Q[i * 4 + j] - Q[j * 4 + i]) <= 1e-15L * scale; };
    if (!(sym(0, 1) && sym(0, 2) && sym(0, 3) && sym(1, 2) && sym(1, 3) && sym(2, 3)))
        throw std::invalid_argument("EpsteinParams: form must be symmetric");
}

int worker_count() {
    if (const char* env = std::getenv("PARAMOD_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace {

/// C-infinity switch: 1 at tau <= 0, 0 at tau >= 1.
real_t smooth_off(real_t tau) {
    if (tau <= 0) return 1;
    if (tau >= 1) return 0;
    auto phi = [](real_t x) { return std::exp(-1.0L / x); };
    return phi(1 - tau) / (phi(tau) + phi(1 - tau));
}

struct GaussRule {
    std::vector<real_t> nodes, weights;
};

const GaussRule& gauss_rule_64() {
    static const GaussRule rule = [] {
        GaussRule g;
        const int n = 64;
        g.nodes.resize(n);
        g.weights.resize(n);
        for (int i = 0; i < n; ++i) {
            real_t x = std::cos(PI_R * (i + 0.75L) / (n + 0.5L));
            real_t p0 = 1, p1 = x, dp = 0;
            for (int it = 0; it < 100; ++it) {
                p0 = 1;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    real_t p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                real_t dx = p1 / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-19L) break;
            }
            g.nodes[i] = x;
            g.weights[i] = 2.0L / ((1 - x * x) * dp * dp);
        }
        return g;
    }();
    return rule;
}

/// 64-point Gauss-Legendre on [a, b].
template <class F>
cplx gauss_integrate(real_t a, real_t b, F&& f) {
    const GaussRule& g = gauss_rule_64();
    cplx s(0, 0);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        real_t t = 0.5L * (a + b) + 0.5L * (b - a) * g.nodes[i];
        s += g.weights[i] * f(t);
    }
    return s * (0.5L * (b - a));
}

struct WindowedSum {
    cplx value;
    unsigned long long terms;
};

/// Windowed lattice sum + complement integral at window [T0, 4*T0].
WindowedSum direct_estimate(const EpsteinParams& p, real_t T0, const std::vector<std::array<i64, 4>>& pts,
                            const std::vector<real_t>& tvals, const std::vector<cplx>& phases,
                            bool phase_trivial, real_t det_q) {
    real_t T1 = 4 * T0;
    cplx s = p.s;
    cplx sum(0, 0);
    unsigned long long used = 0;
    for (size_t i = 0; i < tvals.size(); ++i) {
        real_t t = tvals[i];
        if (t > T1) continue;
        real_t w = smooth_off((t - T0) / (T1 - T0));
        if (w == 0) continue;
        ++used;
        cplx term = std::exp(-s * std::log(cplx(t, 0)));
        if (!phase_trivial) term *= phases[i];
        sum += w * term;
    }
    if (phase_trivial) {
        // complement integral: (det Q)^{-1/2} pi^2 int (1 - W(t)) t^{1-s} dt
        cplx corr = gauss_integrate(T0, T1, [&](real_t t) {
            real_t w = smooth_off((t - T0) / (T1 - T0));
            return (1 - w) * std::exp((1.0L - s) * std::log(cplx(t, 0)));
        });
        corr += std::exp((2.0L - s) * std::log(cplx(T1, 0))) / (s - 2.0L);
        sum += corr * PI_R * PI_R / std::sqrt(det_q);
    }
    return {sum, used};
}

} // namespace

DirectResult epstein_direct(const EpsteinParams& p) {
    p.validate();
    if (!(p.s.real() > 2))
        throw std::invalid_argument("epstein_direct: Re(s) > 2 required (divergent otherwise)");
    auto [u0, u_int] = p.u.split_mod1();
    auto [v0, v_int] = p.v.split_mod1();
    (void)v_int;
    bool u_integral = u0.is_integral();
    bool v_integral = v0.is_integral(); // phases trivial on Z^4
    real_t T0 = p.truncation_radius * p.truncation_radius;
    real_t T1 = 4 * T0;
    real_t det_q = mat4_det(p.Q);

    // phase of e^{2 pi i v.l}: correction for the folded integer shift
    cplx fold_phase = phase_of(-p.v.dot_int(u_int));

    std::array<real_t, 4> shift = u0.to_real();
    std::vector<std::array<i64, 4>> pts;
    std::vector<real_t> tvals;
    ball_enumerate(p.Q, shift, T1, [&](const std::array<i64, 4>& l, real_t t) {
        if (u_integral && l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return; // l + u = 0
        pts.push_back(l);
        tvals.push_back(t);
    });
    std::vector<cplx> phases;
    if (!v_integral) {
        phases.resize(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) phases[i] = phase_of(v0.dot_int(pts[i]));
    }
    WindowedSum full = direct_estimate(p, T0, pts, tvals, phases, v_integral, det_q);
    WindowedSum half = direct_estimate(p, T0 / 2, pts, tvals, phases, v_integral, det_q);
    cplx value = fold_phase * full.value;
    real_t bound = 4 * std::abs(full.value - half.value) + 1e-17L * (1 + std::abs(value));
    return {value, bound, full.terms};
}

namespace {

cplx continued_reduced(const Mat4& Q, const RatVec4& u0, const RatVec4& v0, cplx s, real_t det_q) {
    bool u_int = u0.is_integral(), v_int = v0.is_integral();
    real_t t_max = 17.0L + 0.6L * std::fabs(s.real());
    RadialTable primal(s, 1e-9L, t_max);
    RadialTable dual(cplx(2, 0) - s, 1e-9L, t_max);

    cplx sum1(0, 0);
    {
        std::array<real_t, 4> shift = u0.to_real();
        ball_enumerate(Q, shift, t_max, [&](const std::array<i64, 4>& l, real_t t) {
            if (u_int && l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return;
            cplx g = primal.eval(t);
            if (!v_int) g *= phase_of(v0.dot_int(l));
            sum1 += g;
        });
    }
    cplx sum2(0, 0);
    {
        Mat4 qinv = mat4_inv(Q);
        std::array<real_t, 4> shift = v0.to_real();
        ball_enumerate(qinv, shift, t_max, [&](const std::array<i64, 4>& l, real_t t) {
            if (v_int && l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return;
            cplx g = dual.eval(t);
            if (!u_int) g *= phase_of(-u0.dot_int(l));
            sum2 += g;
        });
        sum2 *= phase_of(-u0.dot(v0)) / std::sqrt(det_q);
    }
    cplx total = sum1 + sum2;
    if (v_int) total -= cplx(1, 0) / (std::sqrt(det_q) * (cplx(2, 0) - s));
    if (u_int) total -= phase_of(-u0.dot(v0)) / s;
    return total;
}

} // namespace

cplx epstein_continued(const EpsteinParams& p) {
    p.validate();
    auto [u0, u_int] = p.u.split_mod1();
    auto [v0, v_ip] = p.v.split_mod1();
    (void)v_ip;
    real_t det_q = mat4_det(p.Q);
    cplx fold_phase = phase_of(-p.v.dot_int(u_int));
    return fold_phase * continued_reduced(p.Q, u0, v0, p.s, det_q);
}

FeCheckResult epstein_functional_check(const EpsteinParams& p) {
    cplx lhs = epstein_continued(p);
    EpsteinParams refl = p;
    refl.Q = mat4_inv(p.Q);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            real_t m = (refl.Q[i * 4 + j] + refl.Q[j * 4 + i]) / 2;
            refl.Q[i * 4 + j] = refl.Q[j * 4 + i] = m;
        }
    refl.u = p.v;
    refl.v = p.u.negated();
    refl.s = cplx(2, 0) - p.s;
    cplx rhs = phase_of(-p.u.dot(p.v)) / std::sqrt(mat4_det(p.Q)) * epstein_continued(refl);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

} // namespace paramod
