#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paramod/quadext.hpp"

namespace paramod {

class DirichletCharacter; // characters.hpp

/// 4x4 matrix over Q(sqrt(p)), exact arithmetic throughout.
class SpMatrix {
public:
    SpMatrix();

    QuadExt& at(int i, int j) { return e_[i * 4 + j]; }
    const QuadExt& at(int i, int j) const { return e_[i * 4 + j]; }

    static SpMatrix identity();

    SpMatrix transpose() const;
    SpMatrix inverse() const; // throws if singular
    QuadExt det() const;
    bool is_integral() const;

    friend SpMatrix operator*(const SpMatrix& a, const SpMatrix& b);
    friend SpMatrix operator-(const SpMatrix& m);
    friend bool operator==(const SpMatrix& a, const SpMatrix& b) { return a.e_ == b.e_; }
    friend bool operator!=(const SpMatrix& a, const SpMatrix& b) { return !(a.e_ == b.e_); }

    /// 16 entries row-major, each "a/b+c/d*sqrt(p)", space separated.
    std::string str() const;
    static SpMatrix parse(const std::string& s);

private:
    std::array<QuadExt, 16> e_;
};

/// Scalar parameters of one group setting: polarization prime p, level N
/// coprime to p, kappa | N, and optionally nu, theta | N with nu*theta = N.
struct GroupContext {
    i64 p = 1;
    i64 t = 1; // polarization of the J_t form used by Sp_t / Paramodular_t
    i64 N = 1;
    i64 kappa = 1;
    std::optional<i64> nu;
    std::optional<i64> theta;

    void validate() const;
};

enum class GroupKind {
    Sp_t,            // M J_t M^tr = J_t exactly
    Paramodular_t,   // Sp_t and integral entries
    Gamma21,         // Klingen stabilizer: c2 = d2 = 0, gamma = 0, delta = 1
    Gamma21_level,   // Gamma^(p)_{2,1}(Np, pN^2/kappa) row-4 congruences
    Gamma21_level_1, // plus delta = +-1 mod N
    GammaStar,       // index-2 extension by H_p(N)
};

SpMatrix j_form(i64 t);

bool similitude_member(const SpMatrix& M, GroupKind kind, const GroupContext& ctx);

/// Generators of section-2 type. eta is rational for the slash-operator
/// variants; group elements use integral eta.
SpMatrix make_M_eta(const Rational& eta);
SpMatrix make_W_eta(const Rational& eta); // eta != 0
SpMatrix make_D_eta(const Rational& eta); // eta != 0
SpMatrix make_J();                        // = W_1

/// P_{d,t}: d | t, gcd(d, t/d) = 1, x*d - y*(t/d) = 1. If x,y are not given
/// the canonical pair with 0 <= x < t/d is used (x = 0, y = -1 when t = d).
SpMatrix make_P_dt(i64 d, i64 t, std::optional<i64> x = std::nullopt,
                   std::optional<i64> y = std::nullopt);
std::pair<i64, i64> canonical_bezout_dt(i64 d, i64 t);

/// M_lambda with the completion of the primitive vector lambda = (l1, l2) to
/// an SL2(Z) matrix chosen deterministically by the extended Euclidean
/// algorithm.
SpMatrix make_M_lambda(i64 l1, i64 l2);

/// M_{d,gamma} for the transversal of section 2 (genus 2, e = 1).
SpMatrix make_M_dgamma(const GroupContext& ctx, i64 d, i64 gamma, i64 theta);

/// H_p(N) = diag-block(U^{-tr}, U) * P_{p,p}, U = [[1+p*p, -1], [-p*p, 1]]
/// with p* an inverse of p mod N. Construction checks det U = 1 and
/// N | (sqrt(p) * H)_{4,3} exactly.
SpMatrix make_Hp(i64 p, i64 N);

enum class RowVariant { T1, T2, T3, T4 };

struct RowType {
    RowVariant variant;
    std::array<i64, 4> lambda; // primitive
    int unit_flag;             // index (0-based) of the coordinate with p∤lambda_i
};

/// Classify the last row of a GammaStar member into the four types of the
/// section-2 list and extract the primitive lambda. Throws if no pattern or
/// more than one pattern fits.
RowType classify_last_row(const SpMatrix& M, const GroupContext& ctx);

/// Lambda range in the transversal: the full box {1..nu/d}^2 (count
/// sum_{d|nu} theta nu^2 (nu/d)^2), or primitive pairs only (count
/// theta nu^4, matching the trace index N nu^3 at theta = N/nu). Section 6
/// writes the range as {1..nu/d}^{2x}, which reads as primitive pairs; both
/// are exposed and the group suite reports both counts.
enum class LambdaMode { full_box, primitive };

/// {M_{d,gamma} M_lambda : gamma in Z/(theta nu^2), d | nu, lambda}.
std::vector<SpMatrix> coset_reps(const GroupContext& ctx, i64 nu, i64 theta,
                                 LambdaMode mode = LambdaMode::full_box);

using MembershipPredicate = std::function<bool(const SpMatrix&)>;

/// Left-coset equivalence: M1 ~ M2 iff M1 * M2^{-1} is in the subgroup.
bool coset_equivalent(const SpMatrix& M1, const SpMatrix& M2, const MembershipPredicate& in_subgroup);

enum class SignChoice { plus, k_minus };

/// Exact value of the extended character: zero flag plus a rational angle
/// q with value e^{2 pi i q}.
struct CharValue {
    bool zero = false;
    Rational angle; // in [0,1)
    bool operator==(const CharValue& o) const { return zero == o.zero && angle == o.angle; }
};

/// chi(M) = chi(delta) on the congruence subgroup, extended over H_p(N) with
/// chi^+(H) = 1 or chi^{k-}(H) = (-1)^k. Requires p = 1 mod N for the +-
/// convention; M must lie in the extended group.
CharValue extended_char_eval_exact(const SpMatrix& M, const DirichletCharacter& chi,
                                   SignChoice sign, int k, const GroupContext& ctx);

/// Complex value of the same.
std::complex<long double> extended_char_eval(const SpMatrix& M, const DirichletCharacter& chi,
                                             SignChoice sign, int k, const GroupContext& ctx);

/// Parameters of Lemma 6.1 and the four conjugator matrices H1..H4.
struct FjParams {
    i64 C;       // C | N nu
    i64 gamma;   // gcd(gamma, N nu / C) = 1
    i64 gamma_s; // gamma * gamma_s = 1 mod (N nu / C)
    i64 p_s;     // p * p_s = 1 mod (N nu / C)
    i64 mu;      // minimal mu | nu with C | N d mu
    i64 mu_s;    // mu * mu_s = 1 mod (N d mu p / C)
    i64 d;       // d | nu
    i64 eps_gamma; // = gamma mod nu
};

struct FjConjugators {
    SpMatrix H1, H2, H3, H4;
};

/// Exact H1..H4 of the Lemma 6.1 proof; throws when a congruence that is
/// needed for integrality fails. H4 belongs to the refined branch
/// (mu = 1 and C nu | N) and is the identity outside it.
FjConjugators build_fj_conjugators(const FjParams& fp, const GroupContext& ctx, i64 nu);

} // namespace paramod
