#pragma once

#include "paramod/characters.hpp"
#include "paramod/epstein.hpp"
#include "paramod/majorant.hpp"
#include "paramod/spmatrix.hpp"

namespace paramod {

/// Parameters of one completed Klingen-Eisenstein evaluation
/// E*(Z, s) for the group Gamma^(p)*_{2,1}(Np, p N^2 / kappa) with character
/// chi mod N (the plus-extension).
struct EisParams {
    GroupContext ctx;       // p, N, kappa
    DirichletCharacter chi; // modulus N
    SiegelPoint Z;
    cplx s;
    real_t direct_radius = 0; // lattice route window start, 0 = automatic

    void validate() const;
};

struct EvalResult {
    cplx value;
    real_t tail_bound;
};

/// First (lattice) representation by smoothed direct summation; Re s > 2.
EvalResult eis_lattice_rep(const EisParams& p);

enum class EisVariant { second, third };

/// Second/third representation through the continued Epstein functions;
/// usable on both sides of Re s = 2.
cplx eis_epstein_rep(const EisParams& p, EisVariant variant);

/// All (kappa, chi) values of one representation in a single pass over the
/// residue tuples (the fine tuple set is shared; kappa | N selects a subset).
struct EisGrid {
    GroupContext ctx_base; // p, N (kappa ignored)
    std::vector<i64> kappas;
    std::vector<DirichletCharacter> chis; // all mod N
    SiegelPoint Z;
    cplx s;
};
std::vector<std::vector<cplx>> eis_epstein_rep_grid(const EisGrid& g, EisVariant variant);

/// Lattice-representation values on the same (kappa, chi) grid, direct route;
/// the per-delta sums are shared across the characters.
struct EisGridDirect {
    std::vector<std::vector<cplx>> values;
    real_t tail_bound;
};
EisGridDirect eis_lattice_rep_grid(const EisGrid& g, real_t direct_radius = 0);

/// Slow reference: sum over the four last-row types with primitive lambda,
/// gcd(lambda_4, N) = 1 and sup-norm height bound; weight is the extended
/// character evaluated through H_p(N)^{-1} on the sqrt(p) rows.
cplx eis_coset_rep(const EisParams& p, i64 height_bound);

struct ResidueResult {
    real_t numeric;
    real_t expected; // 2 kappa phi(N) / N for principal chi, else 0
};

/// Richardson-extrapolated (s-2) E*(2+eps) over eps = 1e-2, 5e-3, 2.5e-3.
ResidueResult eis_residue(const EisParams& p);

struct CheckResult {
    cplx lhs, rhs;
    real_t abs_err;
    real_t rel_err; // abs_err / (1 + |lhs|)
};

enum class FeForm { proposition, corollary };

/// Functional equation E*(Z, 2-s) against the P_{W_{Np}<Z>} decomposition
/// (proposition) or the Eisenstein-series form (corollary, needs kappa | L).
CheckResult eis_fe_check(const EisParams& p, FeForm form);

struct SmartSumOptions {
    /// Conjugate the principal-part characters on the lhs (the paper's
    /// statement carries a bar there that its own proof does not support;
    /// default follows the proof).
    bool conjugate_lhs = false;
    /// Principal-part modulus inside the theta sum: R/theta (default; the
    /// statement's unbound "R/r" is read as a typo for this).
    bool principal_R_over_theta = true;
};

CheckResult smart_sum_check(const EisParams& p, const SmartSumOptions& opt = {});

/// Exact rational check of the Moebius telescoping used in the smart-sum
/// proof: sum_{theta | R} mu(theta) phi(theta)/theta * phi(R/theta)/(R/theta)
/// * [r | R/theta] collapses via sum_{theta | R/r} mu(theta) = [r = R].
bool moebius_telescoping_exact(i64 R);

struct DiffParams {
    EisParams base; // p, N, kappa, chi
    i64 q;          // prime
    i64 r;          // positive, gcd(p, N q r) = 1

    void validate() const;
};

/// Difference series at the point given: the lattice form of Prop 4.4 (i),
/// continued-Epstein route.
cplx diff_series_eval(const DiffParams& d, const SiegelPoint& at, cplx s);

/// Defining route: E*_{Np,...,chi}(W_{Np}<Z0>, s) - E*_{Nqp,...,1_q chi}(W_{Nqp}<Z0>, s),
/// which equals the lattice form at W_{Nqrp}<Z0>.
cplx diff_series_defining(const DiffParams& d, const SiegelPoint& Z0, cplx s);
std::pair<cplx, cplx> diff_series_defining_parts(const DiffParams& d, const SiegelPoint& Z0, cplx s);

/// Average of the phase-twisted lattice sums over nu mod q; vanishes exactly
/// for prime q | N and primitive chi because chi kills q-divisible indices.
struct VanishingSumResult {
    cplx total;
    real_t scale; // sum of magnitudes of the individual twisted sums
};
VanishingSumResult vanishing_sum_check(const EisParams& p, i64 q);

/// W_eta action helper.
SiegelPoint w_point(const SiegelPoint& Z, i64 eta);

} // namespace paramod
