#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include "paramod/majorant.hpp"
#include "paramod/rational.hpp"
#include "paramod/specfun.hpp"

namespace paramod {

/// Rational 4-vector (reduced componentwise) for Epstein characteristics.
struct RatVec4 {
    std::array<i64, 4> num{0, 0, 0, 0};
    std::array<i64, 4> den{1, 1, 1, 1};

    static RatVec4 of(std::array<i64, 4> n, std::array<i64, 4> d);
    static RatVec4 zero() { return RatVec4{}; }

    bool is_integral() const;
    /// Componentwise fractional part in [0,1); second return is the integer part.
    std::pair<RatVec4, std::array<i64, 4>> split_mod1() const;
    RatVec4 negated() const;
    std::array<real_t, 4> to_real() const;
    /// Exact dot with an integer vector, as a rational.
    Rational dot_int(const std::array<i64, 4>& w) const;
    /// Exact rational dot with another RatVec4.
    Rational dot(const RatVec4& o) const;
    bool operator==(const RatVec4& o) const { return num == o.num && den == o.den; }
};

/// e^{2 pi i q} for an exact rational angle.
cplx phase_of(const Rational& q);

/// All parameters of one Epstein evaluation:
/// zeta(s, u, v, Q) = sum_{l in Z^4, l + u != 0} e^{2 pi i v.l} Q[l+u]^{-s},
/// u the shift characteristic, v the phase characteristic.
struct EpsteinParams {
    Mat4 Q{};
    RatVec4 u, v;
    cplx s;
    real_t truncation_radius = 8; // direct sums window from radius^2 in Q-value
    int precision_bits = 64;

    void validate() const;
};

struct DirectResult {
    cplx value; // plain zeta (not completed)
    real_t tail_bound;
    unsigned long long terms_used;
};

/// Smoothed direct summation, Re s > 2: window-weighted lattice sum plus the
/// exact radial integral of the window complement. tail_bound is a realized
/// two-scale error estimate; doubling the radius moves the value by less.
DirectResult epstein_direct(const EpsteinParams& p);

/// Completed zeta*(s,u,v,Q) = pi^{-s} Gamma(s) zeta(s,u,v,Q) by the
/// incomplete-gamma theta split; entire in s apart from the simple poles at
/// s = 2 (v integral) and s = 0 (u integral). Valid for all s off poles.
cplx epstein_continued(const EpsteinParams& p);

struct FeCheckResult {
    cplx lhs, rhs;
    real_t abs_err;
};

/// zeta*(s,u,v,Q) against e^{-2 pi i u.v} (det Q)^{-1/2} zeta*(2-s, v, -u, Q^{-1}).
FeCheckResult epstein_functional_check(const EpsteinParams& p);

/// Enumerate l in Z^4 with Q[l + shift] <= T and l[3] in [slice_lo, slice_hi)
/// (Fincke-Pohst on the Cholesky factor); fn(l, t) receives t = Q[l + shift].
/// Deterministic order: lexicographic in (l4, l3, l2, l1).
template <class F>
void ball_enumerate_slice(const Mat4& Q, const std::array<real_t, 4>& shift, real_t T, i64 slice_lo,
                          i64 slice_hi, F&& fn) {
    // Cholesky Q = R^T R, R upper triangular
    Mat4 r{};
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            real_t s = Q[i * 4 + j];
            for (int k = 0; k < i; ++k) s -= r[k * 4 + i] * r[k * 4 + j];
            if (i == j) {
                if (!(s > 0)) throw std::domain_error("ball_enumerate: form not positive definite");
                r[i * 4 + i] = std::sqrt(s);
            } else {
                r[i * 4 + j] = s / r[i * 4 + i];
            }
        }
    }
    // Q[x] = sum_i (R_ii x_i + sum_{j>i} R_ij x_j)^2, x = l + shift
    const real_t eps = 1e-12L;
    auto sq = [](real_t a) { return a * a; };
    const real_t r00 = r[0], r01 = r[1], r02 = r[2], r03 = r[3];
    const real_t r11 = r[5], r12 = r[6], r13 = r[7];
    const real_t r22 = r[10], r23 = r[11];
    const real_t r33 = r[15];
    real_t b3 = std::sqrt(T) / r33;
    i64 l3_begin = std::max<i64>(slice_lo, (i64)std::ceil(-shift[3] - b3 - eps));
    for (i64 l3 = l3_begin; l3 < slice_hi && (real_t)l3 <= -shift[3] + b3 + eps; ++l3) {
        real_t x3 = l3 + shift[3];
        real_t t3 = sq(r33 * x3);
        if (t3 > T + eps) continue;
        real_t rem2 = T - t3;
        real_t b2 = std::sqrt(std::max<real_t>(0, rem2)) / r22;
        real_t ctr2 = -shift[2] - r23 * x3 / r22;
        for (i64 l2 = (i64)std::ceil(ctr2 - b2 - eps); (real_t)l2 <= ctr2 + b2 + eps; ++l2) {
            real_t x2 = l2 + shift[2];
            real_t t2 = sq(r22 * x2 + r23 * x3);
            if (t3 + t2 > T + eps) continue;
            real_t lin1 = r12 * x2 + r13 * x3;
            real_t rem1 = T - t3 - t2;
            real_t b1 = std::sqrt(std::max<real_t>(0, rem1)) / r11;
            real_t ctr1 = -shift[1] - lin1 / r11;
            for (i64 l1 = (i64)std::ceil(ctr1 - b1 - eps); (real_t)l1 <= ctr1 + b1 + eps; ++l1) {
                real_t x1 = l1 + shift[1];
                real_t t1 = sq(r11 * x1 + lin1);
                if (t3 + t2 + t1 > T + eps) continue;
                real_t lin0 = r01 * x1 + r02 * x2 + r03 * x3;
                real_t rem0 = T - t3 - t2 - t1;
                real_t b0 = std::sqrt(std::max<real_t>(0, rem0)) / r00;
                real_t ctr0 = -shift[0] - lin0 / r00;
                for (i64 l0 = (i64)std::ceil(ctr0 - b0 - eps); (real_t)l0 <= ctr0 + b0 + eps; ++l0) {
                    real_t x0 = l0 + shift[0];
                    real_t t = sq(r00 * x0 + lin0) + t1 + t2 + t3;
                    if (t > T) continue;
                    fn(std::array<i64, 4>{l0, l1, l2, l3}, t);
                }
            }
        }
    }
}

template <class F>
void ball_enumerate(const Mat4& Q, const std::array<real_t, 4>& shift, real_t T, F&& fn) {
    constexpr i64 big = std::numeric_limits<i64>::max() / 4;
    ball_enumerate_slice(Q, shift, T, -big, big, std::forward<F>(fn));
}

/// Worker count: PARAMOD_WORKERS env var, else hardware concurrency.
int worker_count();

/// Ordered-chunk parallel map: results are reduced in chunk order, so the
/// output never depends on the worker count.
template <class T, class F>
std::vector<T> parallel_map_chunks(i64 n_chunks, F&& fn) {
    std::vector<T> out(static_cast<size_t>(n_chunks));
    int workers = std::min<i64>(worker_count(), n_chunks);
    if (workers <= 1) {
        for (i64 i = 0; i < n_chunks; ++i) out[static_cast<size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<i64> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                i64 i = next.fetch_add(1);
                if (i >= n_chunks) return;
                out[static_cast<size_t>(i)] = fn(i);
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

} // namespace paramod
