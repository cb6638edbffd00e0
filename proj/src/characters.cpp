#include "paramod/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace paramod {

namespace {

constexpr long double PI_L = 3.14159265358979323846264338327950288L;

Rational angle_mod1(const Rational& q) {
    mpz_class n = q.num(), d = q.den();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return Rational(n - f * d, d);
}

long double angle_ld(const Rational& q) {
    // exact numerator/denominator are small in every use (den <= N nu)
    return static_cast<long double>(q.num().get_d()) / static_cast<long double>(q.den().get_d());
}

cplx unit_root(const Rational& q) {
    long double th = 2.0L * PI_L * angle_ld(q);
    return cplx(std::cos(th), std::sin(th));
}

struct CyclicFactor {
    i64 q;
    int e;
    i64 pe;
    i64 gen;
    i64 order;
};

struct UnitStructure {
    i64 N;
    std::vector<CyclicFactor> factors;
    std::vector<std::vector<i64>> dlog; // per factor, indexed by m in [0,N)

    i64 char_count() const {
        i64 c = 1;
        for (auto& f : factors) c *= f.order;
        return c;
    }
};

i64 pow_mod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b = mod_ll(b, m);
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % m;
        b = (__int128)b * b % m;
        e >>= 1;
    }
    return r;
}

i64 find_primitive_root(i64 q, int e) {
    i64 pe = 1;
    for (int i = 0; i < e; ++i) pe *= q;
    i64 ord = pe / q * (q - 1);
    auto ord_facts = factorize(ord);
    for (i64 g = 2; g < pe; ++g) {
        if (gcd_ll(g, pe) != 1) continue;
        bool ok = true;
        for (auto [f, unused] : ord_facts) {
            (void)unused;
            if (pow_mod(g, ord / f, pe) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

UnitStructure build_unit_structure(i64 N) {
    UnitStructure us;
    us.N = N;
    for (auto [q, e] : factorize(N)) {
        if (q == 2) {
            if (e == 1) continue;
            if (e == 2) {
                us.factors.push_back({q, e, 4, 3, 2});
            } else {
                i64 pe = 1;
                for (int i = 0; i < e; ++i) pe *= 2;
                us.factors.push_back({q, e, pe, pe - 1, 2}); // <-1>
                us.factors.push_back({q, e, pe, 5, pe / 4}); // <5>
            }
        } else {
            i64 pe = 1;
            for (int i = 0; i < e; ++i) pe *= q;
            us.factors.push_back({q, e, pe, find_primitive_root(q, e), pe / q * (q - 1)});
        }
    }
    us.dlog.assign(us.factors.size(), std::vector<i64>(static_cast<size_t>(N), -1));
    for (size_t fi = 0; fi < us.factors.size(); ++fi) {
        auto& f = us.factors[fi];
        if (f.q == 2 && f.e >= 3) {
            if (f.gen != f.pe - 1) continue; // pair handled at the <-1> slot
            size_t fj = fi + 1;
            auto& f5 = us.factors[fj];
            std::vector<std::pair<i64, i64>> where(static_cast<size_t>(f.pe), {-1, -1});
            for (i64 s = 0; s < 2; ++s) {
                for (i64 a = 0; a < f5.order; ++a) {
                    i64 v = pow_mod(f5.gen, a, f.pe);
                    if (s) v = mod_ll(-v, f.pe);
                    where[v] = {s, a};
                }
            }
            for (i64 m = 0; m < us.N; ++m) {
                if (gcd_ll(m, us.N) != 1) continue;
                auto [s, a] = where[mod_ll(m, f.pe)];
                us.dlog[fi][m] = s;
                us.dlog[fj][m] = a;
            }
        } else {
            std::vector<i64> where(static_cast<size_t>(f.pe), -1);
            i64 v = 1 % f.pe;
            for (i64 a = 0; a < f.order; ++a) {
                where[v] = a;
                v = (__int128)v * f.gen % f.pe;
            }
            for (i64 m = 0; m < us.N; ++m) {
                if (gcd_ll(m, us.N) != 1) continue;
                us.dlog[fi][m] = where[mod_ll(m, f.pe)];
            }
        }
    }
    return us;
}

const UnitStructure& unit_structure(i64 N) {
    static std::map<i64, UnitStructure> cache;
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, build_unit_structure(N)).first;
    return it->second;
}

} // namespace

DirichletCharacter::DirichletCharacter(i64 N) : N_(N) {
    if (N < 1) throw std::invalid_argument("DirichletCharacter: modulus must be >= 1");
    ang_.assign(static_cast<size_t>(N_ == 1 ? 1 : N_), std::nullopt);
    if (N_ == 1) {
        ang_[0] = Rational(0);
    } else {
        for (i64 m = 0; m < N_; ++m)
            if (gcd_ll(m, N_) == 1) ang_[m] = Rational(0);
    }
}

DirichletCharacter DirichletCharacter::from_angles(i64 N, std::vector<std::optional<Rational>> angles) {
    DirichletCharacter chi(N);
    chi.ang_ = std::move(angles);
    return chi;
}

std::optional<Rational> DirichletCharacter::angle(i64 m) const {
    if (N_ == 1) return Rational(0);
    return ang_[mod_ll(m, N_)];
}

cplx DirichletCharacter::value(i64 m) const {
    auto a = angle(m);
    if (!a) return cplx(0, 0);
    return unit_root(*a);
}

bool DirichletCharacter::is_principal() const {
    if (N_ == 1) return true;
    for (i64 m = 0; m < N_; ++m)
        if (ang_[m] && !ang_[m]->is_zero()) return false;
    return true;
}

bool DirichletCharacter::is_real() const { return *this == conj(); }

int DirichletCharacter::parity() const {
    auto a = angle(-1);
    return (a && a->is_zero()) ? 1 : -1;
}

DirichletCharacter DirichletCharacter::conj() const {
    auto angles = ang_;
    for (auto& a : angles)
        if (a) a = angle_mod1(-*a);
    return from_angles(N_, std::move(angles));
}

DirichletCharacter DirichletCharacter::power(i64 e) const {
    auto angles = ang_;
    for (auto& a : angles)
        if (a) a = angle_mod1(Rational(e) * *a);
    return from_angles(N_, std::move(angles));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.N_ != b.N_) throw std::invalid_argument("character product: modulus mismatch");
    auto angles = a.ang_;
    for (size_t m = 0; m < angles.size(); ++m) {
        if (angles[m] && b.ang_[m])
            angles[m] = angle_mod1(*angles[m] + *b.ang_[m]);
        else
            angles[m] = std::nullopt;
    }
    return DirichletCharacter::from_angles(a.N_, std::move(angles));
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    if (N_ != o.N_) return false;
    for (size_t m = 0; m < ang_.size(); ++m) {
        if (ang_[m].has_value() != o.ang_[m].has_value()) return false;
        if (ang_[m] && *ang_[m] != *o.ang_[m]) return false;
    }
    return true;
}

DirichletCharacter DirichletCharacter::induce(i64 M) const {
    if (M % N_ != 0) throw std::invalid_argument("induce: N must divide M");
    std::vector<std::optional<Rational>> angles(static_cast<size_t>(M), std::nullopt);
    for (i64 m = 0; m < M; ++m)
        if (gcd_ll(m, M) == 1) angles[m] = angle(m);
    return from_angles(M, std::move(angles));
}

std::vector<DirichletCharacter> enumerate_characters(i64 N) {
    if (N == 1) return {DirichletCharacter(1)};
    const auto& us = unit_structure(N);
    i64 count = us.char_count();
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<i64> expo(us.factors.size(), 0);
    for (i64 idx = 0; idx < count; ++idx) {
        i64 rem = idx;
        for (size_t i = us.factors.size(); i-- > 0;) {
            expo[i] = rem % us.factors[i].order;
            rem /= us.factors[i].order;
        }
        std::vector<std::optional<Rational>> angles(static_cast<size_t>(N), std::nullopt);
        for (i64 m = 0; m < N; ++m) {
            if (gcd_ll(m, N) != 1) continue;
            Rational a(0);
            for (size_t i = 0; i < us.factors.size(); ++i)
                a += Rational(expo[i] * us.dlog[i][m], us.factors[i].order);
            angles[m] = angle_mod1(a);
        }
        out.push_back(DirichletCharacter::from_angles(N, std::move(angles)));
    }
    return out;
}

DirichletCharacter character_by_index(i64 N, i64 index) {
    auto all = enumerate_characters(N);
    if (index < 0 || index >= static_cast<i64>(all.size()))
        throw std::invalid_argument("character_by_index: index out of range");
    return all[static_cast<size_t>(index)];
}

i64 DirichletCharacter::canonical_index() const {
    auto all = enumerate_characters(N_);
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == *this) return static_cast<i64>(i);
    throw std::logic_error("canonical_index: character not found");
}

DirichletCharacter principal_character(i64 r) { return DirichletCharacter(r); }

bool is_primitive(const DirichletCharacter& chi) { return decompose(chi).conductor == chi.modulus(); }

CharacterDecomposition decompose(const DirichletCharacter& chi) {
    i64 N = chi.modulus();
    CharacterDecomposition d{1, DirichletCharacter(1), 1, 1, std::nullopt};
    for (i64 L : divisors(N)) {
        bool ok = true;
        for (i64 m = 0; m < N && ok; ++m) {
            if (gcd_ll(m, N) != 1 && N > 1) continue;
            if (mod_ll(m, L) == mod_ll(1, L)) {
                auto a = chi.angle(m);
                if (a && !a->is_zero()) ok = false;
            }
        }
        if (ok) {
            d.conductor = L;
            break;
        }
    }
    i64 L = d.conductor;
    std::vector<std::optional<Rational>> core(static_cast<size_t>(L == 1 ? 1 : L), std::nullopt);
    if (L == 1) {
        core[0] = Rational(0);
    } else {
        for (i64 a = 0; a < L; ++a) {
            if (gcd_ll(a, L) != 1) continue;
            for (i64 k = 0; k <= N / L; ++k) {
                i64 m = a + L * k;
                if (gcd_ll(mod_ll(m, N), N) == 1) {
                    core[a] = chi.angle(m);
                    break;
                }
            }
            if (!core[a]) throw std::logic_error("decompose: no coprime lift");
        }
    }
    d.primitive_core = DirichletCharacter::from_angles(L, std::move(core));
    d.R = 1;
    for (auto [q, e] : factorize(N)) {
        (void)e;
        if (L % q != 0) d.R *= q;
    }
    d.LR = L * d.R;
    if (N % d.LR == 0) d.nu = N / d.LR;
    return d;
}

cplx gauss_sum(const DirichletCharacter& chi) {
    i64 N = chi.modulus();
    if (N == 1) return cplx(1, 0);
    cplx s(0, 0);
    for (i64 g = 0; g < N; ++g) {
        auto a = chi.angle(g);
        if (!a) continue;
        s += unit_root(angle_mod1(*a + Rational(g, N)));
    }
    return s;
}

cplx achisum_bruteforce(const DirichletCharacter& chi, i64 nu, i64 m) {
    i64 N = chi.modulus();
    if (nu < 1 || N % nu != 0) throw std::invalid_argument("achisum: nu must divide N");
    i64 M = N * nu;
    std::vector<i64> inv(static_cast<size_t>(M), -1);
    for (i64 a = 0; a < M; ++a)
        if (gcd_ll(a, M) == 1) inv[a] = inv_mod(a, M);
    cplx s(0, 0);
    for (i64 b = 0; b < M; ++b) {
        if (inv[b] < 0) continue;
        for (i64 g = mod_ll(b, nu); g < M; g += nu) {
            if (inv[g] < 0) continue;
            auto ca = chi.angle((b - g) / nu);
            if (!ca) continue;
            Rational ph = angle_mod1(*ca + Rational(mod_ll(m * mod_ll(inv[g] - inv[b], M), M), M));
            s += unit_root(ph);
        }
    }
    return s;
}

std::vector<cplx> achisum_bruteforce_all(const DirichletCharacter& chi, i64 nu) {
    i64 N = chi.modulus();
    if (nu < 1 || N % nu != 0) throw std::invalid_argument("achisum: nu must divide N");
    i64 M = N * nu;
    std::vector<i64> inv(static_cast<size_t>(M), -1);
    for (i64 a = 0; a < M; ++a)
        if (gcd_ll(a, M) == 1) inv[static_cast<size_t>(a)] = inv_mod(a, M);
    // bucket[d] = sum of chi((beta - gamma)/nu) over pairs with
    // gamma* - beta* = d (mod M)
    std::vector<cplx> bucket(static_cast<size_t>(M), cplx(0, 0));
    for (i64 b = 0; b < M; ++b) {
        if (inv[static_cast<size_t>(b)] < 0) continue;
        for (i64 g = mod_ll(b, nu); g < M; g += nu) {
            if (inv[static_cast<size_t>(g)] < 0) continue;
            auto ca = chi.angle((b - g) / nu);
            if (!ca) continue;
            bucket[static_cast<size_t>(mod_ll(inv[static_cast<size_t>(g)] - inv[static_cast<size_t>(b)], M))] +=
                unit_root(*ca);
        }
    }
    std::vector<cplx> roots(static_cast<size_t>(M));
    for (i64 k = 0; k < M; ++k) roots[static_cast<size_t>(k)] = unit_root(Rational(k, M));
    std::vector<cplx> out(static_cast<size_t>(M), cplx(0, 0));
    for (i64 m = 0; m < M; ++m)
        for (i64 d = 0; d < M; ++d)
            out[static_cast<size_t>(m)] += bucket[static_cast<size_t>(d)] * roots[static_cast<size_t>(mod_ll(m * d, M))];
    return out;
}

cplx achisum_closed(const DirichletCharacter& chi, i64 nu, i64 m) {
    i64 N = chi.modulus();
    if (nu < 1 || N % nu != 0) throw std::invalid_argument("achisum: nu must divide N");
    auto dec = decompose(chi.power(2)); // chi^2 data: L, R, LR
    i64 L = dec.conductor;
    i64 LR = dec.LR;
    if (N % LR != 0) throw std::logic_error("achisum_closed: LR must divide N");
    if (nu % (N / LR) != 0) return cplx(0, 0);
    auto chi2 = dec.primitive_core;
    i64 r = N / gcd_ll(N, L * nu);
    if (mobius(r) == 0) return cplx(0, 0);
    auto am = chi.angle(-m);
    auto aR = chi2.angle(dec.R);
    auto aLRnuN = chi2.conj().angle(LR * nu / N);
    if (!am || !aR || !aLRnuN) return cplx(0, 0);
    cplx gbar = gauss_sum(chi.conj());
    cplx g2 = gauss_sum(chi2);
    cplx val = unit_root(angle_mod1(*am + *aR + *aLRnuN));
    val *= static_cast<long double>(mobius(r) * euler_phi(dec.R / r));
    val *= gbar * gbar * gbar * g2;
    val *= static_cast<long double>(nu) / static_cast<long double>(LR);
    return val;
}

} // namespace paramod
