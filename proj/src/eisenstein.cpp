#include "paramod/eisenstein.hpp"

#include <algorithm>
#include <cmath>

namespace paramod {

namespace {

cplx cpow(real_t base, cplx e) {
    if (!(base > 0)) throw std::domain_error("cpow: positive base required");
    return std::exp(e * std::log(cplx(base, 0)));
}

cplx phase_frac(i64 num, i64 den) {
    real_t th = 2.0L * PI_R * (static_cast<real_t>(mod_ll(num, den)) / den);
    return cplx(std::cos(th), std::sin(th));
}

std::vector<cplx> neg_roots(i64 M) {
    std::vector<cplx> r(static_cast<size_t>(M));
    for (i64 k = 0; k < M; ++k) {
        real_t th = -2.0L * PI_R * (static_cast<real_t>(k) / M);
        r[static_cast<size_t>(k)] = cplx(std::cos(th), std::sin(th));
    }
    return r;
}

Mat4 scale_form(const Mat4& P, const std::array<i64, 4>& D) {
    Mat4 q{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            q[i * 4 + j] = static_cast<real_t>(D[i]) * P[i * 4 + j] * static_cast<real_t>(D[j]);
    return q;
}

real_t pick_tmax(cplx s) {
    // the count-weighted tail of the incomplete-gamma sums is ~ e^{-pi T}
    // independent of the form's determinant
    return 12.5L + 0.6L * std::fabs(s.real() - 1);
}

/// zeta*(s, (0,0,0,delta/m), 0, D P D) for delta = 0..m-1, one shared dual
/// pass bucketed by mu_4 mod m. A common scalar factor of D is pulled out
/// through the exact homogeneity zeta(s, u, 0, g^2 Q) = g^{-2s} zeta(s, u, 0, Q),
/// which keeps the dual ball small.
std::vector<cplx> scaled_zeta_star_by_delta(const Mat4& P, const std::array<i64, 4>& D_in, i64 m, cplx s) {
    i64 g = gcd_ll(gcd_ll(D_in[0], D_in[1]), gcd_ll(D_in[2], D_in[3]));
    std::array<i64, 4> D{D_in[0] / g, D_in[1] / g, D_in[2] / g, D_in[3] / g};
    cplx gfac = cpow((real_t)g, -2.0L * s);
    Mat4 Q = scale_form(P, D);
    Mat4 Qi = mat4_inv(Q);
    real_t detq = mat4_det(Q);
    real_t sq = std::sqrt(detq);
    real_t tmax = pick_tmax(s);
    RadialTable prim(s, 1e-9L, tmax);
    RadialTable dual(cplx(2, 0) - s, 1e-9L, tmax);

    std::vector<cplx> bucket(static_cast<size_t>(m), cplx(0, 0));
    {
        // |mu_4| box bound: Qi[x] >= x4^2 / Q[3][3]
        real_t b3 = std::sqrt(tmax * Q[15]);
        i64 lo = -(i64)std::floor(b3 + 1), hi = (i64)std::floor(b3 + 1);
        i64 span = hi - lo + 1;
        i64 n_chunks = std::max<i64>(1, std::min<i64>(span, 4 * worker_count()));
        auto partials = parallel_map_chunks<std::vector<cplx>>(n_chunks, [&](i64 ci) {
            std::vector<cplx> part(static_cast<size_t>(m), cplx(0, 0));
            i64 a = lo + span * ci / n_chunks;
            i64 b = lo + span * (ci + 1) / n_chunks;
            ball_enumerate_slice(Qi, {0, 0, 0, 0}, tmax, a, b,
                                 [&](const std::array<i64, 4>& l, real_t t) {
                                     if (l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return;
                                     part[static_cast<size_t>(mod_ll(l[3], m))] += dual.eval(t);
                                 });
            return part;
        });
        for (auto& part : partials)
            for (i64 r = 0; r < m; ++r) bucket[static_cast<size_t>(r)] += part[static_cast<size_t>(r)];
    }

    std::vector<cplx> out(static_cast<size_t>(m));
    for (i64 delta = 0; delta < m; ++delta) {
        cplx dual_part(0, 0);
        for (i64 r = 0; r < m; ++r)
            dual_part += phase_frac(-delta * r, m) * bucket[static_cast<size_t>(r)];
        dual_part /= sq;
        cplx prim_part(0, 0);
        std::array<real_t, 4> shift{0, 0, 0, static_cast<real_t>(delta) / m};
        ball_enumerate(Q, shift, tmax, [&](const std::array<i64, 4>& l, real_t t) {
            if (delta == 0 && l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return;
            prim_part += prim.eval(t);
        });
        cplx v = prim_part + dual_part;
        v -= cplx(1, 0) / (sq * (cplx(2, 0) - s)); // phase characteristic 0 is integral
        if (delta == 0) v -= cplx(1, 0) / s;       // shift characteristic integral
        out[static_cast<size_t>(delta)] = gfac * v;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sliced smoothed direct summation for the scaled forms: coordinate 2 carries
// the coarse N^2 p / kappa scale and is summed pointwise, the smooth window
// lives on the fine (1,3,4) section.
// ---------------------------------------------------------------------------

struct Mat3 {
    std::array<real_t, 9> a{};
    real_t det() const {
        return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    }
};

template <class F>
void ball_enumerate3(const Mat3& A, const std::array<real_t, 3>& shift, real_t T, F&& fn) {
    std::array<real_t, 9> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            real_t s = A.a[i * 3 + j];
            for (int k = 0; k < i; ++k) s -= r[k * 3 + i] * r[k * 3 + j];
            if (i == j) {
                if (!(s > 0)) throw std::domain_error("ball_enumerate3: not positive definite");
                r[i * 3 + i] = std::sqrt(s);
            } else {
                r[i * 3 + j] = s / r[i * 3 + i];
            }
        }
    const real_t eps = 1e-12L;
    auto sq = [](real_t x) { return x * x; };
    real_t b2 = std::sqrt(T) / r[8];
    for (i64 l2 = (i64)std::ceil(-shift[2] - b2 - eps); (real_t)l2 <= -shift[2] + b2 + eps; ++l2) {
        real_t x2 = l2 + shift[2];
        real_t t2 = sq(r[8] * x2);
        if (t2 > T + eps) continue;
        real_t rem1 = T - t2;
        real_t bb1 = std::sqrt(std::max<real_t>(0, rem1)) / r[4];
        real_t ctr1 = -shift[1] - r[5] * x2 / r[4];
        for (i64 l1 = (i64)std::ceil(ctr1 - bb1 - eps); (real_t)l1 <= ctr1 + bb1 + eps; ++l1) {
            real_t x1 = l1 + shift[1];
            real_t t1 = sq(r[4] * x1 + r[5] * x2);
            if (t2 + t1 > T + eps) continue;
            real_t lin0 = r[1] * x1 + r[2] * x2;
            real_t rem0 = T - t2 - t1;
            real_t bb0 = std::sqrt(std::max<real_t>(0, rem0)) / r[0];
            real_t ctr0 = -shift[0] - lin0 / r[0];
            for (i64 l0 = (i64)std::ceil(ctr0 - bb0 - eps); (real_t)l0 <= ctr0 + bb0 + eps; ++l0) {
                real_t x0 = l0 + shift[0];
                real_t t = sq(r[0] * x0 + lin0) + t1 + t2;
                if (t > T) continue;
                fn(std::array<i64, 3>{l0, l1, l2}, t);
            }
        }
    }
}

real_t smooth_off(real_t tau) {
    if (tau <= 0) return 1;
    if (tau >= 1) return 0;
    auto phi = [](real_t x) { return std::exp(-1.0L / x); };
    return phi(1 - tau) / (phi(tau) + phi(1 - tau));
}

const std::vector<std::pair<real_t, real_t>>& gauss64() {
    static const std::vector<std::pair<real_t, real_t>> rule = [] {
        std::vector<std::pair<real_t, real_t>> g(64);
        const int n = 64;
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
            g[static_cast<size_t>(i)] = {x, 2.0L / ((1 - x * x) * dp * dp)};
        }
        return g;
    }();
    return rule;
}

template <class F>
cplx gauss_on(real_t a, real_t b, F&& f) {
    if (!(b > a)) return cplx(0, 0);
    cplx s(0, 0);
    for (auto [x, w] : gauss64()) {
        real_t t = 0.5L * (a + b) + 0.5L * (b - a) * x;
        s += w * f(t);
    }
    return s * (0.5L * (b - a));
}

/// int_{max(0,T0-m)}^{infty} sqrt(t) (1 - W(t + m)) (t + m)^{-s} dt, window
/// active on [T0, T1].
cplx slice_complement_integral(real_t m, real_t T0, real_t T1, cplx s) {
    real_t lo = std::max<real_t>(0, T0 - m);
    real_t mid = std::max<real_t>(lo, T1 - m);
    cplx part1 = gauss_on(lo, mid, [&](real_t t) {
        real_t w = smooth_off((t + m - T0) / (T1 - T0));
        return (1 - w) * std::sqrt(t) * std::exp(-s * std::log(cplx(t + m, 0)));
    });
    real_t big = 64 * std::max(T1, m + 1);
    cplx part2(0, 0);
    real_t a = mid;
    while (a < big) {
        real_t b = std::min(big, a * 4 + 1);
        part2 += gauss_on(a, b,
                          [&](real_t t) { return std::sqrt(t) * std::exp(-s * std::log(cplx(t + m, 0))); });
        a = b;
    }
    cplx part3 = cpow(big, cplx(1.5L, 0) - s) / (s - 1.5L);
    part3 -= s * m * cpow(big, cplx(0.5L, 0) - s) / (s - 0.5L);
    part3 += s * (s + 1.0L) / 2.0L * m * m * cpow(big, cplx(-0.5L, 0) - s) / (s + 0.5L);
    part3 -= s * (s + 1.0L) * (s + 2.0L) / 6.0L * m * m * m * cpow(big, cplx(-1.5L, 0) - s) / (s + 1.5L);
    return part1 + part2 + part3;
}

struct SlicedDirectResult {
    std::vector<cplx> zeta; // plain zeta values per delta
    real_t tail_bound;
    unsigned long long terms;
};

SlicedDirectResult scaled_zeta_direct_by_delta(const Mat4& P, const std::array<i64, 4>& D, i64 m, cplx s,
                                               real_t T0_user) {
    if (!(s.real() > 2)) throw std::invalid_argument("direct lattice sum: Re(s) > 2 required");
    Mat4 Q = scale_form(P, D);
    Mat3 A;
    const int idx[3] = {0, 2, 3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A.a[i * 3 + j] = Q[idx[i] * 4 + idx[j]];
    std::array<real_t, 3> col{Q[0 * 4 + 1], Q[2 * 4 + 1], Q[3 * 4 + 1]};
    real_t q22 = Q[1 * 4 + 1];
    real_t detA = A.det();
    std::array<real_t, 3> h{};
    for (int i = 0; i < 3; ++i) {
        Mat3 Ai = A;
        for (int r = 0; r < 3; ++r) Ai.a[r * 3 + i] = col[r];
        h[i] = Ai.det() / detA;
    }
    real_t schur = q22 - (col[0] * h[0] + col[1] * h[1] + col[2] * h[2]);

    real_t maxdiag = std::max({A.a[0], A.a[4], A.a[8]});
    real_t T0 = (T0_user > 0) ? T0_user * T0_user : 140.0L * maxdiag;
    real_t T1 = 4 * T0;

    std::vector<cplx> full(static_cast<size_t>(m), cplx(0, 0)), half(static_cast<size_t>(m), cplx(0, 0));
    unsigned long long terms = 0;
    real_t geom = 2 * PI_R / std::sqrt(detA);

    auto do_slice = [&](i64 a) {
        real_t ma = schur * a * a;
        cplx corr_full = slice_complement_integral(ma, T0, T1, s) * geom;
        cplx corr_half = slice_complement_integral(ma, T0 / 2, T1 / 2, s) * geom;
        for (i64 delta = 0; delta < m; ++delta) {
            full[static_cast<size_t>(delta)] += corr_full;
            half[static_cast<size_t>(delta)] += corr_half;
        }
        if (ma > T1) return;
        for (i64 delta = 0; delta < m; ++delta) {
            std::array<real_t, 3> shift{h[0] * a, h[1] * a, h[2] * a + static_cast<real_t>(delta) / m};
            ball_enumerate3(A, shift, T1 - ma, [&](const std::array<i64, 3>& l, real_t t3) {
                if (a == 0 && delta == 0 && l[0] == 0 && l[1] == 0 && l[2] == 0) return;
                real_t t = t3 + ma;
                cplx term = std::exp(-s * std::log(cplx(t, 0)));
                ++terms;
                real_t wf = smooth_off((t - T0) / (T1 - T0));
                real_t wh = smooth_off((t - T0 / 2) / (T1 / 2 - T0 / 2));
                if (wf > 0) full[static_cast<size_t>(delta)] += wf * term;
                if (wh > 0) half[static_cast<size_t>(delta)] += wh * term;
            });
        }
    };
    do_slice(0);
    i64 a_win = (i64)std::floor(std::sqrt(T1 / schur)) + 1;
    i64 last_done = 0;
    for (i64 aa = 1;; ++aa) {
        real_t ma = schur * aa * aa;
        real_t mag = 2 * geom * std::exp((1.5L - s.real()) * std::log(ma > 1 ? ma : 1.0L));
        real_t total_scale = 0;
        for (auto& v : full) total_scale = std::max(total_scale, std::abs(v));
        if (aa > a_win && mag * m < 1e-15L * (1 + total_scale)) break;
        do_slice(aa);
        do_slice(-aa);
        last_done = aa;
        if (aa > 4 * a_win + 64) break;
    }
    // Hurwitz tail of the slice integrals for |a'| > last_done
    cplx beta_factor = gamma_cplx(cplx(1.5L, 0)) * gamma_cplx(s - 1.5L) / gamma_cplx(s);
    cplx hz = hurwitz_zeta(2.0L * s - 3.0L, 1.0L);
    for (i64 k = 1; k <= last_done; ++k) hz -= std::exp(-(2.0L * s - 3.0L) * std::log(cplx((real_t)k, 0)));
    cplx tail_slices = 2.0L * geom * beta_factor * std::exp((1.5L - s) * std::log(cplx(schur, 0))) * hz;
    for (i64 delta = 0; delta < m; ++delta) {
        full[static_cast<size_t>(delta)] += tail_slices;
        half[static_cast<size_t>(delta)] += tail_slices;
    }

    real_t bound = 0;
    for (i64 delta = 0; delta < m; ++delta) {
        real_t dd = std::abs(full[static_cast<size_t>(delta)] - half[static_cast<size_t>(delta)]);
        bound = std::max(bound, 4 * dd + 1e-16L * (1 + std::abs(full[static_cast<size_t>(delta)])));
    }
    return {std::move(full), bound, terms};
}

std::vector<cplx> char_weights(const DirichletCharacter& chi, i64 m, i64 mult = 1) {
    std::vector<cplx> w(static_cast<size_t>(m));
    for (i64 d = 0; d < m; ++d) w[static_cast<size_t>(d)] = chi.value(mult * d);
    return w;
}

cplx e1_continued(i64 p, i64 N, i64 kappa, const std::vector<cplx>& w, const Mat4& P, cplx s) {
    std::array<i64, 4> D1{N, N * N * p / kappa, N, N};
    std::array<i64, 4> D2{N * p, N * N * p / kappa, N * p, N};
    auto z1 = scaled_zeta_star_by_delta(P, D1, N, s);
    auto z2 = scaled_zeta_star_by_delta(P, D2, N, s);
    cplx acc(0, 0);
    for (i64 d = 0; d < N; ++d)
        acc += w[static_cast<size_t>(d)] *
               (cpow((real_t)p, -s) * z1[static_cast<size_t>(d)] + z2[static_cast<size_t>(d)]);
    return cpow((real_t)p, 1.5L * s) * cpow((real_t)N, 2.0L * s) * acc;
}

} // namespace

void EisParams::validate() const {
    ctx.validate();
    if (chi.modulus() != ctx.N) throw std::invalid_argument("EisParams: chi modulus must equal N");
    Z.validate();
}

SiegelPoint w_point(const SiegelPoint& Z, i64 eta) { return siegel_action(make_W_eta(Rational(eta)), Z); }

EvalResult eis_lattice_rep(const EisParams& p) {
    p.validate();
    if (!(p.s.real() > 2)) throw std::invalid_argument("eis_lattice_rep: Re(s) > 2 required");
    i64 P = p.ctx.p, N = p.ctx.N, K = p.ctx.kappa;
    Mat4 PZ = pz_form(p.Z).P;
    std::array<i64, 4> D1{N, N * N * P / K, N, N};
    std::array<i64, 4> D2{N * P, N * N * P / K, N * P, N};
    auto r1 = scaled_zeta_direct_by_delta(PZ, D1, N, p.s, p.direct_radius);
    auto r2 = scaled_zeta_direct_by_delta(PZ, D2, N, p.s, p.direct_radius);
    cplx acc(0, 0);
    real_t wsum = 0;
    for (i64 d = 0; d < N; ++d) {
        cplx w = p.chi.value(d);
        wsum += std::abs(w);
        acc += w * (cpow((real_t)P, -p.s) * r1.zeta[static_cast<size_t>(d)] + r2.zeta[static_cast<size_t>(d)]);
    }
    cplx pref = cpow(PI_R, -p.s) * gamma_cplx(p.s) * cpow((real_t)P, 1.5L * p.s) * cpow((real_t)N, 2.0L * p.s);
    cplx value = pref * acc;
    real_t tail =
        std::abs(pref) * wsum * (std::abs(cpow((real_t)P, -p.s)) * r1.tail_bound + r2.tail_bound);
    return {value, tail};
}

EisGridDirect eis_lattice_rep_grid(const EisGrid& g, real_t direct_radius) {
    g.ctx_base.validate();
    if (!(g.s.real() > 2)) throw std::invalid_argument("eis_lattice_rep_grid: Re(s) > 2 required");
    i64 P = g.ctx_base.p, N = g.ctx_base.N;
    Mat4 PZ = pz_form(g.Z).P;
    cplx pref = cpow(PI_R, -g.s) * gamma_cplx(g.s) * cpow((real_t)P, 1.5L * g.s) * cpow((real_t)N, 2.0L * g.s);
    EisGridDirect out;
    out.values.assign(g.kappas.size(), std::vector<cplx>(g.chis.size(), cplx(0, 0)));
    out.tail_bound = 0;
    for (size_t ki = 0; ki < g.kappas.size(); ++ki) {
        i64 K = g.kappas[ki];
        std::array<i64, 4> D1{N, N * N * P / K, N, N};
        std::array<i64, 4> D2{N * P, N * N * P / K, N * P, N};
        auto r1 = scaled_zeta_direct_by_delta(PZ, D1, N, g.s, direct_radius);
        auto r2 = scaled_zeta_direct_by_delta(PZ, D2, N, g.s, direct_radius);
        for (size_t c = 0; c < g.chis.size(); ++c) {
            cplx acc(0, 0);
            real_t wsum = 0;
            for (i64 d = 0; d < N; ++d) {
                cplx w = g.chis[c].value(d);
                wsum += std::abs(w);
                acc += w * (cpow((real_t)P, -g.s) * r1.zeta[static_cast<size_t>(d)] +
                            r2.zeta[static_cast<size_t>(d)]);
            }
            out.values[ki][c] = pref * acc;
            out.tail_bound = std::max(out.tail_bound,
                                      std::abs(pref) * wsum *
                                          (std::abs(cpow((real_t)P, -g.s)) * r1.tail_bound + r2.tail_bound));
        }
    }
    return out;
}

std::vector<std::vector<cplx>> eis_epstein_rep_grid(const EisGrid& g, EisVariant variant) {
    g.ctx_base.validate();
    i64 p = g.ctx_base.p, N = g.ctx_base.N;
    for (i64 k : g.kappas)
        if (N % k != 0) throw std::invalid_argument("grid: kappa | N required");
    for (auto& c : g.chis)
        if (c.modulus() != N) throw std::invalid_argument("grid: chi modulus mismatch");
    Mat4 P = pz_form(g.Z).P;
    Mat4 Pi = mat4_inv(P);
    real_t detp = mat4_det(P);
    real_t sqd = std::sqrt(detp);
    cplx s = g.s;
    real_t tmax = 11.0L + 0.6L * std::fabs(s.real() - 1);
    RadialTable prim(s, 1e-9L, tmax, 12);
    RadialTable dual(cplx(2, 0) - s, 1e-9L, tmax, 12);

    const size_t nk = g.kappas.size(), nc = g.chis.size();
    std::vector<std::vector<cplx>> acc(nk, std::vector<cplx>(nc, cplx(0, 0)));
    auto accumulate = [&](std::vector<std::vector<std::vector<cplx>>>& partials) {
        for (auto& part : partials)
            for (size_t ki = 0; ki < nk; ++ki)
                for (size_t c = 0; c < nc; ++c) acc[ki][c] += part[ki][c];
    };

    struct DualPoint {
        std::array<i64, 4> mu;
        cplx gval;
    };
    auto dual_list = [&](const std::array<real_t, 4>& vshift, bool exclude_zero) {
        std::vector<DualPoint> out;
        ball_enumerate(Pi, vshift, tmax, [&](const std::array<i64, 4>& l, real_t t) {
            if (exclude_zero && l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return;
            out.push_back({l, dual.eval(t)});
        });
        return out;
    };

    // term 2, common to both variants: N^{-2s} p^{-s/2}, shifts
    // (alpha/N, beta_f/N, gamma/N, a4/(N^2 p)), phase 0
    auto dual0 = dual_list({0, 0, 0, 0}, true);
    struct DualPre {
        i64 c0, c1, c2, c3;
        cplx gval;
    };
    auto precompute = [](const std::vector<DualPoint>& list, i64 M, std::array<i64, 4> coef) {
        std::vector<DualPre> out(list.size());
        for (size_t i = 0; i < list.size(); ++i)
            out[i] = {mod_ll(coef[0] * list[i].mu[0], M), mod_ll(coef[1] * list[i].mu[1], M),
                      mod_ll(coef[2] * list[i].mu[2], M), mod_ll(coef[3] * list[i].mu[3], M), list[i].gval};
        return out;
    };
    {
        const i64 M2 = N * N * p;
        auto roots2 = neg_roots(M2);
        auto pre2 = precompute(dual0, M2, {N * p, N * p, N * p, 1});
        cplx pref2 = cpow((real_t)N, -2.0L * s) * cpow((real_t)p, -0.5L * s);
        i64 n_chunks = std::max<i64>(1, std::min<i64>(N, 4 * worker_count()));
        auto partials = parallel_map_chunks<std::vector<std::vector<cplx>>>(n_chunks, [&](i64 ci) {
            std::vector<std::vector<cplx>> part(nk, std::vector<cplx>(nc, cplx(0, 0)));
            for (i64 alpha = N * ci / n_chunks; alpha < N * (ci + 1) / n_chunks; ++alpha)
                for (i64 betaf = 0; betaf < N; ++betaf)
                    for (i64 gamma = 0; gamma < N; ++gamma)
                        for (i64 a4 = 0; a4 < N * N * p; ++a4) {
                            bool u_zero = (alpha == 0 && betaf == 0 && gamma == 0 && a4 == 0);
                            std::array<real_t, 4> ush{(real_t)alpha / N, (real_t)betaf / N,
                                                      (real_t)gamma / N, (real_t)a4 / (N * N * p)};
                            cplx z(0, 0);
                            ball_enumerate(P, ush, tmax, [&](const std::array<i64, 4>& l, real_t t) {
                                if (u_zero && l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return;
                                z += prim.eval(t);
                            });
                            cplx zd(0, 0);
                            for (const auto& dp : pre2) {
                                i64 idxp = (alpha * dp.c0 + betaf * dp.c1 + gamma * dp.c2 + a4 * dp.c3) % M2;
                                zd += dp.gval * roots2[static_cast<size_t>(idxp)];
                            }
                            z += zd / sqd;
                            z -= cplx(1, 0) / (sqd * (cplx(2, 0) - s));
                            if (u_zero) z -= cplx(1, 0) / s;
                            for (size_t ki = 0; ki < nk; ++ki) {
                                if (betaf % (N / g.kappas[ki]) != 0) continue;
                                for (size_t c = 0; c < nc; ++c) {
                                    cplx w = g.chis[c].value(a4);
                                    if (w == cplx(0, 0)) continue;
                                    part[ki][c] += pref2 * w * z;
                                }
                            }
                        }
            return part;
        });
        accumulate(partials);
    }

    if (variant == EisVariant::second) {
        // term 1: N^{-2s} p^{s/2-1}, shifts (alpha/N, p beta_f/N, gamma/N,
        // delta/N^2), phases (0, h/p, 0, 0)
        std::vector<std::vector<DualPoint>> dual_h(static_cast<size_t>(p));
        for (i64 hh = 0; hh < p; ++hh)
            dual_h[static_cast<size_t>(hh)] = dual_list({0, (real_t)hh / p, 0, 0}, hh == 0);
        const i64 M1 = N * N;
        auto roots1 = neg_roots(M1);
        std::vector<std::vector<DualPre>> pre_h(static_cast<size_t>(p));
        for (i64 hh = 0; hh < p; ++hh)
            pre_h[static_cast<size_t>(hh)] = precompute(dual_h[static_cast<size_t>(hh)], M1, {N, N, N, 1});
        cplx pref1 = cpow((real_t)N, -2.0L * s) * cpow((real_t)p, 0.5L * s - 1.0L);
        i64 n_chunks = std::max<i64>(1, std::min<i64>(N, 4 * worker_count()));
        auto partials = parallel_map_chunks<std::vector<std::vector<cplx>>>(n_chunks, [&](i64 ci) {
            std::vector<std::vector<cplx>> part(nk, std::vector<cplx>(nc, cplx(0, 0)));
            std::vector<cplx> pbucket(static_cast<size_t>(p));
            for (i64 alpha = N * ci / n_chunks; alpha < N * (ci + 1) / n_chunks; ++alpha)
                for (i64 betaf = 0; betaf < N; ++betaf)
                    for (i64 gamma = 0; gamma < N; ++gamma)
                        for (i64 delta = 0; delta < N * N; ++delta) {
                            i64 pb = mod_ll(p * betaf, N);
                            // folding the integer part of the shift p beta/kappa
                            // into the lattice variable shifts the h-phases
                            i64 fold2 = (p * betaf - pb) / N;
                            bool u_zero = (alpha == 0 && pb == 0 && gamma == 0 && delta == 0);
                            std::array<real_t, 4> ush{(real_t)alpha / N, (real_t)pb / N, (real_t)gamma / N,
                                                      (real_t)delta / (N * N)};
                            std::fill(pbucket.begin(), pbucket.end(), cplx(0, 0));
                            ball_enumerate(P, ush, tmax, [&](const std::array<i64, 4>& l, real_t t) {
                                if (u_zero && l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return;
                                pbucket[static_cast<size_t>(mod_ll(l[1], p))] += prim.eval(t);
                            });
                            for (i64 hh = 0; hh < p; ++hh) {
                                cplx z(0, 0);
                                for (i64 j = 0; j < p; ++j)
                                    z += phase_frac(hh * (j - fold2), p) * pbucket[static_cast<size_t>(j)];
                                cplx zd(0, 0);
                                for (const auto& dp : pre_h[static_cast<size_t>(hh)]) {
                                    i64 idxp = (alpha * dp.c0 + pb * dp.c1 + gamma * dp.c2 + delta * dp.c3) % M1;
                                    zd += dp.gval * roots1[static_cast<size_t>(idxp)];
                                }
                                zd *= phase_frac(-betaf * hh, N) / sqd; // e^{-2 pi i u.v}
                                z += zd;
                                if (hh == 0) z -= cplx(1, 0) / (sqd * (cplx(2, 0) - s));
                                if (u_zero) z -= phase_frac(-betaf * hh, N) / s;
                                for (size_t ki = 0; ki < nk; ++ki) {
                                    if (betaf % (N / g.kappas[ki]) != 0) continue;
                                    for (size_t c = 0; c < nc; ++c) {
                                        cplx w = g.chis[c].value(delta);
                                        if (w == cplx(0, 0)) continue;
                                        part[ki][c] += pref1 * w * z;
                                    }
                                }
                            }
                        }
            return part;
        });
        accumulate(partials);
    } else {
        // third, term 1: N^{-2s} p^{-3s/2}, shifts
        // (a1/(Np), beta_f/N, a3/(Np), a4/(N^2 p)), phase 0
        const i64 M3 = N * N * p;
        auto roots3 = neg_roots(M3);
        auto pre3 = precompute(dual0, M3, {N, N * p, N, 1});
        cplx pref3 = cpow((real_t)N, -2.0L * s) * cpow((real_t)p, -1.5L * s);
        i64 n_chunks = std::max<i64>(1, std::min<i64>(N * p, 8 * worker_count()));
        auto partials = parallel_map_chunks<std::vector<std::vector<cplx>>>(n_chunks, [&](i64 ci) {
            std::vector<std::vector<cplx>> part(nk, std::vector<cplx>(nc, cplx(0, 0)));
            i64 lo = (N * p) * ci / n_chunks, hi = (N * p) * (ci + 1) / n_chunks;
            for (i64 a1 = lo; a1 < hi; ++a1)
                for (i64 betaf = 0; betaf < N; ++betaf)
                    for (i64 a3 = 0; a3 < N * p; ++a3)
                        for (i64 a4 = 0; a4 < N * N * p; ++a4) {
                            bool u_zero = (a1 == 0 && betaf == 0 && a3 == 0 && a4 == 0);
                            std::array<real_t, 4> ush{(real_t)a1 / (N * p), (real_t)betaf / N,
                                                      (real_t)a3 / (N * p), (real_t)a4 / (N * N * p)};
                            cplx z(0, 0);
                            ball_enumerate(P, ush, tmax, [&](const std::array<i64, 4>& l, real_t t) {
                                if (u_zero && l[0] == 0 && l[1] == 0 && l[2] == 0 && l[3] == 0) return;
                                z += prim.eval(t);
                            });
                            cplx zd(0, 0);
                            for (const auto& dp : pre3) {
                                i64 idxp = (a1 * dp.c0 + betaf * dp.c1 + a3 * dp.c2 + a4 * dp.c3) % M3;
                                zd += dp.gval * roots3[static_cast<size_t>(idxp)];
                            }
                            z += zd / sqd;
                            z -= cplx(1, 0) / (sqd * (cplx(2, 0) - s));
                            if (u_zero) z -= cplx(1, 0) / s;
                            for (size_t ki = 0; ki < nk; ++ki) {
                                if (betaf % (N / g.kappas[ki]) != 0) continue;
                                for (size_t c = 0; c < nc; ++c) {
                                    cplx w = g.chis[c].value(a4);
                                    if (w == cplx(0, 0)) continue;
                                    part[ki][c] += pref3 * w * z;
                                }
                            }
                        }
            return part;
        });
        accumulate(partials);
    }
    return acc;
}

cplx eis_epstein_rep(const EisParams& p, EisVariant variant) {
    p.validate();
    EisGrid g{p.ctx, {p.ctx.kappa}, {p.chi}, p.Z, p.s};
    return eis_epstein_rep_grid(g, variant)[0][0];
}

cplx eis_coset_rep(const EisParams& par, i64 H) {
    par.validate();
    if (!(par.s.real() > 2)) throw std::invalid_argument("eis_coset_rep: Re(s) > 2 required");
    i64 p = par.ctx.p, N = par.ctx.N, K = par.ctx.kappa;
    Mat4 PZ = pz_form(par.Z).P;
    SpMatrix hp_inv = make_Hp(p, N).inverse();
    i64 n2k = p * N * N / K;
    cplx sum(0, 0);
    auto power_term = [&](const std::array<real_t, 4>& row, real_t extra_scale) {
        real_t t = extra_scale * quad_form(PZ, row);
        return std::exp(-par.s * std::log(cplx(t, 0)));
    };
    auto sqrt_weight = [&](const std::array<i64, 4>& w) -> cplx {
        // chi of the H-conjugated delta: ((sqrt(p) w) Hp^{-1})_4
        QuadExt e4(0);
        for (int i = 0; i < 4; ++i)
            e4 += QuadExt(Rational(0), Rational(w[i]), p) * hp_inv.at(i, 3);
        if (!e4.is_integer()) throw std::logic_error("coset weight: H-conjugated delta not integral");
        return par.chi.value(e4.rat().to_ll());
    };
    for (i64 l1 = -H; l1 <= H; ++l1)
        for (i64 l2 = -H; l2 <= H; ++l2)
            for (i64 l3 = -H; l3 <= H; ++l3)
                for (i64 l4 = -H; l4 <= H; ++l4) {
                    if (gcd_ll(gcd_ll(l1, l2), gcd_ll(l3, l4)) != 1) continue;
                    if (gcd_ll(l4, N) != 1) continue;
                    if (mod_ll(l4, p) != 0)
                        sum += par.chi.value(l4) * power_term({(real_t)(p * N * l1), (real_t)(n2k * l2),
                                                               (real_t)(p * N * l3), (real_t)l4},
                                                              1);
                    if (mod_ll(l2, p) != 0)
                        sum += par.chi.value(p * l4) * power_term({(real_t)(p * N * l1), (real_t)(n2k * l2),
                                                                   (real_t)(p * N * l3), (real_t)(p * l4)},
                                                                  1);
                    if (mod_ll(l1, p) != 0)
                        sum += sqrt_weight({N * l1, n2k * l2, N * l3, l4}) *
                               power_term({(real_t)(N * l1), (real_t)(n2k * l2), (real_t)(N * l3), (real_t)l4},
                                          (real_t)p);
                    if (mod_ll(l3, p) != 0)
                        sum += sqrt_weight({p * N * l1, n2k * l2, N * l3, l4}) *
                               power_term({(real_t)(p * N * l1), (real_t)(n2k * l2), (real_t)(N * l3),
                                           (real_t)l4},
                                          (real_t)p);
                }
    return sum;
}

ResidueResult eis_residue(const EisParams& par) {
    par.validate();
    auto value_at = [&](real_t eps) {
        EisParams q = par;
        q.s = cplx(2 + eps, 0);
        return (eis_epstein_rep(q, EisVariant::second) * cplx(eps, 0)).real();
    };
    real_t f1 = value_at(1e-2L), f2 = value_at(5e-3L), f3 = value_at(2.5e-3L);
    real_t r1 = 2 * f2 - f1, r2 = 2 * f3 - f2;
    real_t numeric = (4 * r2 - r1) / 3;
    real_t expected = par.chi.is_principal()
                          ? 2.0L * par.ctx.kappa * euler_phi(par.ctx.N) / static_cast<real_t>(par.ctx.N)
                          : 0.0L;
    return {numeric, expected};
}

CheckResult eis_fe_check(const EisParams& par, FeForm form) {
    par.validate();
    i64 p = par.ctx.p, N = par.ctx.N, K = par.ctx.kappa;
    if (mod_ll(p, N) != mod_ll(1, N)) throw std::invalid_argument("eis_fe_check: p = 1 mod N required");
    auto dec = decompose(par.chi);
    i64 L = dec.conductor, R = dec.R;
    const DirichletCharacter& chiL = dec.primitive_core;
    if (form == FeForm::corollary && L % K != 0)
        throw std::invalid_argument("eis_fe_check corollary: kappa | L required");

    EisParams lhs_par = par;
    lhs_par.s = cplx(2, 0) - par.s;
    cplx lhs = eis_epstein_rep(lhs_par, EisVariant::second);

    SiegelPoint W = w_point(par.Z, N * p);
    cplx gbar = gauss_sum(chiL.conj());
    cplx pref = static_cast<real_t>(euler_phi(R)) / R * static_cast<real_t>(K) / gbar;
    cplx rhs(0, 0);
    for (i64 r : divisors(R)) {
        if (mobius(r) == 0) continue;
        cplx coef = chiL.value(r) * (static_cast<real_t>(mobius(r)) / static_cast<real_t>(euler_phi(r)));
        i64 Lr = L * r;
        DirichletCharacter chir = (principal_character(r).induce(Lr) * chiL.induce(Lr)).conj();
        if (form == FeForm::corollary) {
            EisParams q;
            q.ctx = GroupContext{p, 1, Lr, Lr / K, std::nullopt, std::nullopt};
            q.chi = chir;
            q.Z = W;
            q.s = par.s;
            rhs += coef * eis_epstein_rep(q, EisVariant::second);
        } else {
            Mat4 PW = pz_form(W).P;
            std::array<i64, 4> DA{Lr * p, Lr * K * p, Lr * p, Lr};
            std::array<i64, 4> DB{Lr, Lr * K * p, Lr, Lr};
            auto za = scaled_zeta_star_by_delta(PW, DA, Lr, par.s);
            auto zb = scaled_zeta_star_by_delta(PW, DB, Lr, par.s);
            cplx inner(0, 0);
            for (i64 d = 0; d < Lr; ++d) {
                cplx w = chir.value(d);
                if (w == cplx(0, 0)) continue;
                inner += w * (cpow((real_t)p, 1.5L * par.s) * za[static_cast<size_t>(d)] +
                              cpow((real_t)p, 0.5L * par.s) * zb[static_cast<size_t>(d)]);
            }
            rhs += coef * cpow((real_t)Lr, 2.0L * par.s) * inner;
        }
    }
    rhs *= pref;
    real_t abs_err = std::abs(lhs - rhs);
    return {lhs, rhs, abs_err, abs_err / (1 + std::abs(lhs))};
}

bool moebius_telescoping_exact(i64 R) {
    if (!is_squarefree(R)) throw std::invalid_argument("moebius_telescoping: R must be square-free");
    for (i64 r : divisors(R)) {
        Rational lhs(0);
        for (i64 th : divisors(R)) {
            if ((R / th) % r != 0) continue;
            lhs += Rational(mobius(th) * euler_phi(th), th) * Rational(euler_phi(R / th), R / th);
        }
        i64 mob_sum = 0;
        for (i64 th : divisors(R / r)) mob_sum += mobius(th);
        Rational rhs = Rational(euler_phi(R), R) * Rational(mob_sum);
        if (lhs != rhs) return false;
        if ((r == R) != (mob_sum == 1)) return false;
    }
    return true;
}

CheckResult smart_sum_check(const EisParams& par, const SmartSumOptions& opt) {
    par.validate();
    i64 p = par.ctx.p, N = par.ctx.N, K = par.ctx.kappa;
    if (mod_ll(p, N) != mod_ll(1, N)) throw std::invalid_argument("smart_sum_check: p = 1 mod N required");
    auto dec = decompose(par.chi);
    i64 L = dec.conductor, R = dec.R;
    const DirichletCharacter& chiL = dec.primitive_core;
    if (L % K != 0) throw std::invalid_argument("smart_sum_check: kappa | L required");

    cplx lhs(0, 0);
    for (i64 th : divisors(R)) {
        if (mobius(th) == 0) continue;
        i64 Nt = L * R / th;
        i64 pr_mod = opt.principal_R_over_theta ? R / th : R;
        DirichletCharacter chit = principal_character(pr_mod).induce(Nt) * chiL.induce(Nt);
        if (opt.conjugate_lhs) chit = chit.conj();
        EisParams q;
        q.ctx = GroupContext{p, 1, Nt, K, std::nullopt, std::nullopt};
        q.chi = chit;
        q.Z = w_point(par.Z, Nt * p);
        q.s = cplx(2, 0) - par.s;
        lhs += (static_cast<real_t>(mobius(th) * euler_phi(th)) / static_cast<real_t>(th)) *
               eis_epstein_rep(q, EisVariant::second);
    }
    cplx rhs;
    {
        i64 NR = L * R;
        DirichletCharacter chiR = (principal_character(R).induce(NR) * chiL.induce(NR)).conj();
        EisParams q;
        q.ctx = GroupContext{p, 1, NR, NR / K, std::nullopt, std::nullopt};
        q.chi = chiR;
        q.Z = par.Z;
        q.s = par.s;
        cplx gbar = gauss_sum(chiL.conj());
        rhs = (static_cast<real_t>(mobius(R)) / static_cast<real_t>(R)) * chiL.value(R) / gbar *
              static_cast<real_t>(K) * eis_epstein_rep(q, EisVariant::second);
    }
    real_t abs_err = std::abs(lhs - rhs);
    return {lhs, rhs, abs_err, abs_err / (1 + std::abs(lhs))};
}

void DiffParams::validate() const {
    base.validate();
    if (!is_prime_ll(q)) throw std::invalid_argument("DiffParams: q must be prime");
    if (r < 1 || gcd_ll(base.ctx.p, base.ctx.N * q * r) != 1)
        throw std::invalid_argument("DiffParams: gcd(p, N q r) = 1 required");
}

cplx diff_series_eval(const DiffParams& d, const SiegelPoint& at, cplx s) {
    d.validate();
    i64 p = d.base.ctx.p, N = d.base.ctx.N, K = d.base.ctx.kappa, q = d.q, r = d.r;
    Mat4 P = pz_form(at).P;
    i64 c2 = N * N * q * q * r * r / K * p;
    std::array<i64, 4> D1{N * q * r, c2, N * q * r, q * N};
    std::array<i64, 4> D2{N * q * r * p, c2, N * q * r * p, q * N};
    auto z1 = scaled_zeta_star_by_delta(P, D1, N, s);
    auto z2 = scaled_zeta_star_by_delta(P, D2, N, s);
    cplx acc(0, 0);
    for (i64 delta = 0; delta < N; ++delta) {
        cplx w = d.base.chi.value(q * delta);
        if (w == cplx(0, 0)) continue;
        acc += w * (cpow((real_t)p, 0.5L * s) * z1[static_cast<size_t>(delta)] +
                    cpow((real_t)p, 1.5L * s) * z2[static_cast<size_t>(delta)]);
    }
    return cpow((real_t)(N * r * q), 2.0L * s) * acc;
}

std::pair<cplx, cplx> diff_series_defining_parts(const DiffParams& d, const SiegelPoint& Z0, cplx s) {
    d.validate();
    i64 p = d.base.ctx.p, N = d.base.ctx.N, K = d.base.ctx.kappa, q = d.q;
    Mat4 PA = pz_form(w_point(Z0, N * p)).P;
    cplx A = e1_continued(p, N, K, char_weights(d.base.chi, N), PA, s);
    Mat4 PB = pz_form(w_point(Z0, N * q * p)).P;
    DirichletCharacter chiq = d.base.chi.induce(N * q);
    cplx B = e1_continued(p, N * q, K, char_weights(chiq, N * q), PB, s);
    return {A, B};
}

cplx diff_series_defining(const DiffParams& d, const SiegelPoint& Z0, cplx s) {
    auto [A, B] = diff_series_defining_parts(d, Z0, s);
    return A - B;
}

VanishingSumResult vanishing_sum_check(const EisParams& par, i64 q) {
    par.validate();
    i64 p = par.ctx.p, N = par.ctx.N, K = par.ctx.kappa;
    if (N % q != 0 || !is_prime_ll(q)) throw std::invalid_argument("vanishing_sum: prime q | N required");
    Mat4 P = pz_form(par.Z).P;
    std::array<i64, 4> D1{N, N * N * p / K, N, N};
    std::array<i64, 4> D2{N * p, N * N * p / K, N * p, N};
    auto z1 = scaled_zeta_star_by_delta(P, D1, N, par.s);
    auto z2 = scaled_zeta_star_by_delta(P, D2, N, par.s);
    cplx pref = cpow((real_t)p, 1.5L * par.s) * cpow((real_t)N, 2.0L * par.s);
    cplx total(0, 0);
    real_t scale = 0;
    for (i64 nu = 0; nu < q; ++nu) {
        cplx a(0, 0);
        for (i64 delta = 0; delta < N; ++delta) {
            cplx w = par.chi.value(delta);
            if (w == cplx(0, 0)) continue;
            w *= phase_frac(nu * delta, q);
            a += w * (cpow((real_t)p, -par.s) * z1[static_cast<size_t>(delta)] +
                      z2[static_cast<size_t>(delta)]);
        }
        a *= pref;
        total += a;
        scale += std::abs(a);
    }
    return {total, scale};
}

} // namespace paramod
