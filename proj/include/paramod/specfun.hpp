#pragma once

#include <complex>
#include <vector>

#include "paramod/characters.hpp"

namespace paramod {

using real_t = long double;

inline constexpr real_t PI_R = 3.14159265358979323846264338327950288L;

/// log Gamma(s), principal branch (Lanczos with reflection).
cplx lgamma_cplx(cplx s);
cplx gamma_cplx(cplx s);

/// Upper incomplete gamma Gamma(s, x) for complex s and real x > 0
/// (series for small x, Lentz continued fraction otherwise).
cplx upper_gamma(cplx s, real_t x);

/// Piecewise-Chebyshev table of t -> (pi t)^{-sigma} Gamma(sigma, pi t) on
/// (t_min, t_max], the radial weight of the incomplete-gamma lattice sums.
/// The dual-side weight is the same object at 2 - sigma.
class RadialTable {
public:
    RadialTable(cplx sigma, real_t t_min, real_t t_max, int deg = 20);
    cplx eval(real_t t) const;
    cplx sigma() const { return sigma_; }
    real_t t_max() const { return t_max_; }

private:
    cplx sigma_;
    real_t t_min_, t_max_;
    real_t geo_split_ = 2;
    int n_geo_ = 0;
    int n_intervals_;
    int deg_ = 20;
    static constexpr int MAX_DEG = 24;
    std::vector<cplx> coeff_; // n_intervals * (DEG+1), Chebyshev coefficients
    std::vector<real_t> lo_, hi_;
};

/// Riemann zeta for real s > 1 (Euler-Maclaurin).
real_t zeta_real(real_t s);

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s} for complex s, Re s > 1, 0 < a <= 1
/// (Euler-Maclaurin; used for Dirichlet L-values).
cplx hurwitz_zeta(cplx s, real_t a);

/// L(s, chi) = N^{-s} sum_r chi(r) zeta_H(s, r/N), Re s > 1.
cplx dirichlet_L(cplx s, const DirichletCharacter& chi);

} // namespace paramod
