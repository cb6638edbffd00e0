#pragma once

#include <string>
#include <vector>

#include "paramod/characters.hpp"
#include "paramod/specfun.hpp"

namespace paramod {

/// Abstract coefficient sequence c_m, m >= 1 (the role of <f_m, g_m> for a
/// pair of cusp forms, or a single form's Fourier-Jacobi norms).
struct CoeffSeries {
    std::vector<cplx> c; // c[0] is c_1
    int k = 10;          // weight
    static constexpr int n = 2; // genus
    real_t growth_exponent = 0; // |c_m| <= C m^growth
    real_t growth_constant = 1;

    cplx at(i64 m) const { return (m >= 1 && m <= (i64)c.size()) ? c[static_cast<size_t>(m - 1)] : cplx(0, 0); }

    /// Verify the growth bound on the stored prefix; throws when violated.
    void validate() const;

    /// Lines "m re im"; missing m default to zero.
    static CoeffSeries load(const std::string& path, int k, real_t growth_exponent, real_t growth_constant);
};

struct SeriesValue {
    cplx value;
    real_t tail_bound;
};

/// D_{f,g,chi}(s) = sum chi(m) c_m m^{-s} to the cutoff, with the integral
/// tail estimate from the growth bound; requires Re s > growth + 1.
SeriesValue dirichlet_D(const CoeffSeries& c, const DirichletCharacter& chi, cplx s, i64 cutoff);

/// Completed series (2 pi / N)^{-2s} Gamma(s) Gamma(s - k + n) L(2s - 2k + 2n, chi^2) D(s).
SeriesValue completed_D(const CoeffSeries& c, const DirichletCharacter& chi, cplx s, i64 cutoff);

/// Coefficient-level twist: c_m -> chi(m) c_m.
CoeffSeries twist_coeffs(const CoeffSeries& c, const DirichletCharacter& chi);

/// Scalar factor relating D*_{f,g,chi}(s) to D*_{f,g,conj chi}(2k-2-s):
/// G_chi^4/N^2 p^{3(k-s-1)} (1 + p^{-(k-s)}) (1 + p^{-(s-k+2)})^{-1}.
cplx fe_factor(const DirichletCharacter& chi, i64 p, int k, cplx s);

/// Constant of the twisted spinor functional equation: (-1)^k G_chi^4 / N^2.
cplx spinor_fe_factor(const DirichletCharacter& chi, int k);

/// Euler factor of the Gritsenko chain: p^{-s} (1 - p^{k-2-s}) (p + (-1)^k p^{k-s}).
cplx euler_factor_gritsenko(i64 p, int k, cplx s);

/// Smallest prime p <= bound with p = 1 mod N; -1 when none exists below it.
i64 find_prime(i64 N, i64 bound);

} // namespace paramod
