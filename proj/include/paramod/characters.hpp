#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "paramod/intutil.hpp"
#include "paramod/rational.hpp"

namespace paramod {

using cplx = std::complex<long double>;

/// Dirichlet character mod N with exact root-of-unity values: chi(m) is
/// stored as a rational angle q in [0,1) meaning e^{2 pi i q}, zero on
/// non-units. Character identities are therefore exact; complex values are
/// produced only on output.
class DirichletCharacter {
public:
    /// Principal character mod N (N = 1: identically one on all of Z).
    explicit DirichletCharacter(i64 N = 1);

    i64 modulus() const { return N_; }

    bool is_unit_arg(i64 m) const { return N_ == 1 || gcd_ll(mod_ll(m, N_), N_) == 1; }
    /// Angle of chi(m); nullopt when chi(m) = 0.
    std::optional<Rational> angle(i64 m) const;
    cplx value(i64 m) const;

    bool is_principal() const;
    bool is_real() const; // chi = conj(chi)
    int parity() const;   // chi(-1) = +1 or -1

    DirichletCharacter conj() const;
    DirichletCharacter power(i64 e) const;
    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
    bool operator==(const DirichletCharacter& o) const;

    /// Induce to a larger modulus M (N | M).
    DirichletCharacter induce(i64 M) const;

    /// Canonical index in enumerate_characters(N) order.
    i64 canonical_index() const;

    /// Internal: build from an angle table (validated).
    static DirichletCharacter from_angles(i64 N, std::vector<std::optional<Rational>> angles);

private:
    i64 N_;
    std::vector<std::optional<Rational>> ang_; // size N, ang_[m] set iff unit
};

/// All phi(N) characters mod N in the documented canonical order: the unit
/// group is factored as prod over prime powers q^e | N (ascending q; for
/// 2^e, e >= 3, the order-2 factor generated by -1 precedes the factor
/// generated by 5), and characters are indexed by the lexicographic exponent
/// vector on those cyclic factors, first factor most significant.
std::vector<DirichletCharacter> enumerate_characters(i64 N);

DirichletCharacter character_by_index(i64 N, i64 index);
DirichletCharacter principal_character(i64 r);

struct CharacterDecomposition {
    i64 conductor;                  // L
    DirichletCharacter primitive_core; // mod L
    i64 R;   // product of primes dividing N but not L
    i64 LR;  // minimal period of the zero-extended function m -> chi(m)
    std::optional<i64> nu; // N / (L R) when integral
};

bool is_primitive(const DirichletCharacter& chi);
CharacterDecomposition decompose(const DirichletCharacter& chi);

/// G_chi = sum_{gamma mod N} chi(gamma) e^{2 pi i gamma / N}.
cplx gauss_sum(const DirichletCharacter& chi);

/// Double character sum of Lemma 6.2, brute force:
/// A_{chi,nu}(m) = sum over beta, gamma in (Z/N nu)^* with beta = gamma (nu)
/// of chi((beta-gamma)/nu) e^{2 pi i m (gamma* - beta*)/(N nu)},
/// inverses taken mod N nu.
cplx achisum_bruteforce(const DirichletCharacter& chi, i64 nu, i64 m);

/// All of A_{chi,nu}(m) for m = 0..N nu - 1 in one pass over the (beta,
/// gamma) pairs (bucketed by gamma* - beta* mod N nu).
std::vector<cplx> achisum_bruteforce_all(const DirichletCharacter& chi, i64 nu);

/// Closed form of Lemma 6.2:
/// (nu/LR) chi(-m) chi2(R) conj(chi2)(LR nu / N) mu(r) phi(R/r) G_{conj chi}^3 G_{chi2}
/// when N/(LR) | nu, else 0; chi2 primitive inducing chi^2, LR the least
/// period of chi^2, r = N / gcd(N, L nu).
cplx achisum_closed(const DirichletCharacter& chi, i64 nu, i64 m);

} // namespace paramod
