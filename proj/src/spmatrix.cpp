#include "paramod/spmatrix.hpp"

#include <sstream>

#include "paramod/characters.hpp"

namespace paramod {

SpMatrix::SpMatrix() {
    for (auto& x : e_) x = QuadExt(0);
}

SpMatrix SpMatrix::identity() {
    SpMatrix m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = QuadExt(1);
    return m;
}

SpMatrix SpMatrix::transpose() const {
    SpMatrix t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t.at(i, j) = at(j, i);
    return t;
}

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) {
    SpMatrix c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QuadExt s(0);
            for (int k = 0; k < 4; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

SpMatrix operator-(const SpMatrix& m) {
    SpMatrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = -m.at(i, j);
    return r;
}

QuadExt SpMatrix::det() const {
    // cofactor expansion, division-free
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return at(r0, c0) * (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) -
               at(r0, c1) * (at(r1, c0) * at(r2, c2) - at(r1, c2) * at(r2, c0)) +
               at(r0, c2) * (at(r1, c0) * at(r2, c1) - at(r1, c1) * at(r2, c0));
    };
    QuadExt d(0);
    int sign = 1;
    for (int j = 0; j < 4; ++j) {
        int c[3], k = 0;
        for (int jj = 0; jj < 4; ++jj)
            if (jj != j) c[k++] = jj;
        QuadExt term = at(0, j) * det3(1, 2, 3, c[0], c[1], c[2]);
        d += (sign > 0) ? term : -term;
        sign = -sign;
    }
    return d;
}

SpMatrix SpMatrix::inverse() const {
    // Gauss-Jordan over the field Q(sqrt(p))
    std::array<QuadExt, 32> w;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            w[i * 8 + j] = at(i, j);
            w[i * 8 + 4 + j] = QuadExt(i == j ? 1 : 0);
        }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (!w[r * 8 + col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("SpMatrix::inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < 8; ++j) std::swap(w[piv * 8 + j], w[col * 8 + j]);
        QuadExt p = w[col * 8 + col];
        for (int j = 0; j < 8; ++j) w[col * 8 + j] /= p;
        for (int r = 0; r < 4; ++r) {
            if (r == col || w[r * 8 + col].is_zero()) continue;
            QuadExt f = w[r * 8 + col];
            for (int j = 0; j < 8; ++j) w[r * 8 + j] -= f * w[col * 8 + j];
        }
    }
    SpMatrix inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv.at(i, j) = w[i * 8 + 4 + j];
    return inv;
}

bool SpMatrix::is_integral() const {
    for (const auto& x : e_)
        if (!x.is_integer()) return false;
    return true;
}

std::string SpMatrix::str() const {
    std::string s;
    for (int i = 0; i < 16; ++i) {
        if (i) s += " ";
        s += e_[i].str();
    }
    return s;
}

SpMatrix SpMatrix::parse(const std::string& s) {
    std::istringstream in(s);
    SpMatrix m;
    for (int i = 0; i < 16; ++i) {
        std::string tok;
        if (!(in >> tok)) throw std::invalid_argument("SpMatrix::parse: expected 16 entries");
        m.e_[i] = QuadExt::parse(tok);
    }
    return m;
}

void GroupContext::validate() const {
    if (N < 1 || p < 1 || t < 1) throw std::invalid_argument("GroupContext: positive parameters required");
    if (p > 1 && !is_prime_ll(p)) throw std::invalid_argument("GroupContext: p must be prime");
    if (gcd_ll(p, N) != 1) throw std::invalid_argument("GroupContext: gcd(p, N) = 1 required");
    if (N % kappa != 0) throw std::invalid_argument("GroupContext: kappa | N required");
    if (nu && N % *nu != 0) throw std::invalid_argument("GroupContext: nu | N required");
    if (theta && N % *theta != 0) throw std::invalid_argument("GroupContext: theta | N required");
    if (nu && theta && (*nu) * (*theta) != N)
        throw std::invalid_argument("GroupContext: nu * theta = N required");
}

SpMatrix j_form(i64 t) {
    SpMatrix j;
    j.at(0, 2) = QuadExt(1);
    j.at(1, 3) = QuadExt(t);
    j.at(2, 0) = QuadExt(-1);
    j.at(3, 1) = QuadExt(-t);
    return j;
}

namespace {

bool is_sp(const SpMatrix& M, i64 t) {
    SpMatrix j = j_form(t);
    return M * j * M.transpose() == j;
}

bool entry_in_1_over_p(const QuadExt& x, i64 p) {
    // x in (1/p) Z
    if (!x.is_rational()) return false;
    return (x.rat() * Rational(p)).is_integer();
}

bool paramodular_pattern(const SpMatrix& M, i64 p) {
    // integral except M_{i,4} in (1/p)Z for i = 1..3 and M_{4,j} in pZ for j = 1..3
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const QuadExt& x = M.at(i, j);
            if (i < 3 && j == 3) {
                if (!entry_in_1_over_p(x, p)) return false;
            } else if (i == 3 && j < 3) {
                if (!x.is_rational() || !x.rat().is_int_multiple_of(p)) return false;
            } else {
                if (!x.is_integer()) return false;
            }
        }
    return true;
}

bool row4_congruences(const SpMatrix& M, const GroupContext& ctx) {
    i64 m41 = ctx.N * ctx.p;
    i64 m42 = ctx.p * ctx.N * ctx.N / ctx.kappa;
    i64 m43 = ctx.N * ctx.p;
    return M.at(3, 0).is_rational() && M.at(3, 0).rat().is_int_multiple_of(m41) &&
           M.at(3, 1).is_rational() && M.at(3, 1).rat().is_int_multiple_of(m42) &&
           M.at(3, 2).is_rational() && M.at(3, 2).rat().is_int_multiple_of(m43) &&
           M.at(3, 3).is_integer();
}

} // namespace

bool similitude_member(const SpMatrix& M, GroupKind kind, const GroupContext& ctx) {
    switch (kind) {
        case GroupKind::Sp_t:
            return is_sp(M, ctx.t);
        case GroupKind::Paramodular_t:
            return is_sp(M, ctx.t) && M.is_integral();
        case GroupKind::Gamma21:
            return is_sp(M, 1) && M.is_integral() && M.at(3, 0).is_zero() && M.at(3, 1).is_zero() &&
                   M.at(3, 2).is_zero() && M.at(3, 3) == QuadExt(1);
        case GroupKind::Gamma21_level:
            return is_sp(M, 1) && paramodular_pattern(M, ctx.p) && row4_congruences(M, ctx);
        case GroupKind::Gamma21_level_1: {
            if (!similitude_member(M, GroupKind::Gamma21_level, ctx)) return false;
            Rational d = M.at(3, 3).rat();
            return (d - Rational(1)).is_int_multiple_of(ctx.N) || (d + Rational(1)).is_int_multiple_of(ctx.N);
        }
        case GroupKind::GammaStar: {
            if (similitude_member(M, GroupKind::Gamma21_level, ctx)) return true;
            SpMatrix h = make_Hp(ctx.p, ctx.N);
            return similitude_member(M * h.inverse(), GroupKind::Gamma21_level, ctx);
        }
    }
    return false;
}

SpMatrix make_M_eta(const Rational& eta) {
    SpMatrix m = SpMatrix::identity();
    m.at(1, 3) = QuadExt(eta);
    return m;
}

SpMatrix make_W_eta(const Rational& eta) {
    if (eta.is_zero()) throw std::invalid_argument("make_W_eta: eta must be nonzero");
    SpMatrix m;
    m.at(0, 2) = QuadExt(1);
    m.at(1, 3) = QuadExt(Rational(1) / eta);
    m.at(2, 0) = QuadExt(-1);
    m.at(3, 1) = QuadExt(-eta);
    return m;
}

SpMatrix make_D_eta(const Rational& eta) {
    if (eta.is_zero()) throw std::invalid_argument("make_D_eta: eta must be nonzero");
    SpMatrix m = SpMatrix::identity();
    m.at(1, 1) = QuadExt(eta);
    m.at(3, 3) = QuadExt(Rational(1) / eta);
    return m;
}

SpMatrix make_J() { return make_W_eta(Rational(1)); }

std::pair<i64, i64> canonical_bezout_dt(i64 d, i64 t) {
    i64 td = t / d;
    if (td == 1) return {0, -1};
    i64 x = inv_mod(d, td);
    i64 y = (x * d - 1) / td;
    return {x, y};
}

SpMatrix make_P_dt(i64 d, i64 t, std::optional<i64> xo, std::optional<i64> yo) {
    if (d < 1 || t < 1 || t % d != 0) throw std::invalid_argument("make_P_dt: need d | t");
    if (gcd_ll(d, t / d) != 1) throw std::invalid_argument("make_P_dt: need gcd(d, t/d) = 1");
    i64 x, y;
    if (xo && yo) {
        x = *xo;
        y = *yo;
        if (x * d - y * (t / d) != 1) throw std::invalid_argument("make_P_dt: x d - y t/d = 1 violated");
    } else {
        std::tie(x, y) = canonical_bezout_dt(d, t);
    }
    // entries live in (1/sqrt(d)) Z[sqrt(d)]
    QuadExt sq = QuadExt::sqrt_of(d);
    QuadExt inv_sq = QuadExt(Rational(0), Rational(1, d), d); // 1/sqrt(d) = sqrt(d)/d
    SpMatrix m;
    m.at(0, 0) = QuadExt(Rational(x)) * sq;
    m.at(0, 1) = QuadExt(Rational(-t)) * inv_sq;
    m.at(1, 0) = QuadExt(Rational(-y)) * inv_sq;
    m.at(1, 1) = sq;
    m.at(2, 2) = sq;
    m.at(2, 3) = QuadExt(Rational(y)) * inv_sq;
    m.at(3, 2) = QuadExt(Rational(t)) * inv_sq;
    m.at(3, 3) = QuadExt(Rational(x)) * sq;
    return m;
}

SpMatrix make_M_lambda(i64 l1, i64 l2) {
    if (gcd_ll(l1, l2) != 1) throw std::invalid_argument("make_M_lambda: lambda must be primitive");
    i64 u, v;
    egcd_ll(l1, l2, u, v); // u l1 + v l2 = 1
    // completion [[a, b], [l1, l2]] with a l2 - b l1 = 1: (a, b) = (v, -u)
    SpMatrix m;
    m.at(0, 0) = QuadExt(v);
    m.at(0, 2) = QuadExt(-u);
    m.at(1, 1) = QuadExt(1);
    m.at(2, 0) = QuadExt(l1);
    m.at(2, 2) = QuadExt(l2);
    m.at(3, 3) = QuadExt(1);
    return m;
}

SpMatrix make_M_dgamma(const GroupContext& ctx, i64 d, i64 gamma, i64 theta) {
    if (theta < 1 || ctx.N % theta != 0) throw std::invalid_argument("make_M_dgamma: theta | N required");
    if (d < 1) throw std::invalid_argument("make_M_dgamma: d >= 1 required");
    i64 Ndp = ctx.N * d * ctx.p;
    SpMatrix m = SpMatrix::identity();
    m.at(0, 1) = QuadExt(-Ndp);
    m.at(3, 1) = QuadExt(ctx.N * ctx.N / theta * ctx.p * gamma);
    m.at(3, 2) = QuadExt(Ndp);
    return m;
}

SpMatrix make_Hp(i64 p, i64 N) {
    if (!is_prime_ll(p)) throw std::invalid_argument("make_Hp: p must be prime");
    if (N < 1 || gcd_ll(p, N) != 1) throw std::invalid_argument("make_Hp: gcd(p, N) = 1 required");
    i64 ps = (N == 1) ? 0 : inv_mod(p, N);
    // U = [[1 + p* p, -1], [-p* p, 1]], det U = 1
    i64 u11 = 1 + ps * p, u12 = -1, u21 = -ps * p, u22 = 1;
    if (u11 * u22 - u12 * u21 != 1) throw std::logic_error("make_Hp: det U != 1");
    // U^{-tr}: inverse [[u22, -u12], [-u21, u11]] transposed
    i64 v11 = u22, v12 = -u21, v21 = -u12, v22 = u11;
    SpMatrix b;
    b.at(0, 0) = QuadExt(v11);
    b.at(0, 1) = QuadExt(v12);
    b.at(1, 0) = QuadExt(v21);
    b.at(1, 1) = QuadExt(v22);
    b.at(2, 2) = QuadExt(u11);
    b.at(2, 3) = QuadExt(u12);
    b.at(3, 2) = QuadExt(u21);
    b.at(3, 3) = QuadExt(u22);
    SpMatrix h = b * make_P_dt(p, p);
    // N | (sqrt(p) H)_{4,3}
    QuadExt check = QuadExt::sqrt_of(p) * h.at(3, 2);
    if (!check.is_rational() || !check.rat().is_int_multiple_of(N))
        throw std::logic_error("make_Hp: divisibility N | (sqrt(p) H)_{4,3} failed");
    return h;
}

namespace {

struct RowCandidate {
    RowVariant variant;
    std::array<i64, 4> lambda;
    int unit_flag;
};

bool extract_integer(const Rational& r, i64 denom, i64& out) {
    Rational q = r / Rational(denom);
    if (!q.is_integer()) return false;
    out = q.to_ll();
    return true;
}

bool lambda_admissible(const std::array<i64, 4>& l, i64 N) {
    i64 g = 0;
    for (i64 x : l) g = gcd_ll(g, x);
    return g == 1 && gcd_ll(l[3], N) == 1;
}

} // namespace

RowType classify_last_row(const SpMatrix& M, const GroupContext& ctx) {
    i64 p = ctx.p, N = ctx.N;
    i64 n2k = ctx.p * ctx.N * ctx.N / ctx.kappa; // p N^2 / kappa
    std::array<QuadExt, 4> row{M.at(3, 0), M.at(3, 1), M.at(3, 2), M.at(3, 3)};
    bool all_rational = true, all_irrational = true;
    for (auto& x : row) {
        if (!x.is_rational()) all_rational = false;
        if (!x.rat().is_zero()) all_irrational = false;
    }
    std::vector<RowCandidate> hits;
    if (all_rational) {
        // type 1: (p N l1, p N^2/k l2, p N l3, l4), p ∤ l4
        // type 2: (p N l1, p N^2/k l2, p N l3, p l4), p ∤ l2
        std::array<i64, 4> l{};
        bool ok = extract_integer(row[0].rat(), p * N, l[0]) && extract_integer(row[1].rat(), n2k, l[1]) &&
                  extract_integer(row[2].rat(), p * N, l[2]);
        if (ok) {
            i64 l4;
            if (extract_integer(row[3].rat(), 1, l4) && mod_ll(l4, p) != 0) {
                std::array<i64, 4> c{l[0], l[1], l[2], l4};
                if (lambda_admissible(c, N)) hits.push_back({RowVariant::T1, c, 3});
            }
            if (extract_integer(row[3].rat(), p, l4) && mod_ll(l[1], p) != 0) {
                std::array<i64, 4> c{l[0], l[1], l[2], l4};
                if (lambda_admissible(c, N)) hits.push_back({RowVariant::T2, c, 1});
            }
        }
    }
    if (all_irrational) {
        // w = row / sqrt(p), integral
        std::array<i64, 4> w{};
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            if (row[i].radicand() != p && !row[i].is_zero()) ok = false;
            if (ok && !row[i].irr().is_integer()) ok = false;
            if (ok) w[i] = row[i].irr().to_ll();
        }
        if (ok) {
            // type 3: sqrt(p) (N l1, p N^2/k l2, N l3, l4), p ∤ l1
            // type 4: sqrt(p) (p N l1, p N^2/k l2, N l3, l4), p ∤ l3
            std::array<i64, 4> l{};
            if (extract_integer(Rational(w[0]), N, l[0]) && extract_integer(Rational(w[1]), n2k, l[1]) &&
                extract_integer(Rational(w[2]), N, l[2]) && mod_ll(l[0], p) != 0) {
                std::array<i64, 4> c{l[0], l[1], l[2], w[3]};
                if (lambda_admissible(c, N)) hits.push_back({RowVariant::T3, c, 0});
            }
            if (extract_integer(Rational(w[0]), p * N, l[0]) && extract_integer(Rational(w[1]), n2k, l[1]) &&
                extract_integer(Rational(w[2]), N, l[2]) && mod_ll(l[2], p) != 0) {
                std::array<i64, 4> c{l[0], l[1], l[2], w[3]};
                if (lambda_admissible(c, N)) hits.push_back({RowVariant::T4, c, 2});
            }
        }
    }
    if (hits.size() != 1)
        throw std::domain_error("classify_last_row: row fits " + std::to_string(hits.size()) +
                                " patterns (membership bug?)");
    return {hits[0].variant, hits[0].lambda, hits[0].unit_flag};
}

std::vector<SpMatrix> coset_reps(const GroupContext& ctx, i64 nu, i64 theta, LambdaMode mode) {
    if (nu < 1 || ctx.N % nu != 0) throw std::invalid_argument("coset_reps: nu | N required");
    if (theta < 1 || ctx.N % theta != 0) throw std::invalid_argument("coset_reps: theta | N required");
    std::vector<SpMatrix> out;
    for (i64 d : divisors(nu)) {
        for (i64 gamma = 0; gamma < theta * nu * nu; ++gamma) {
            SpMatrix mg = make_M_dgamma(ctx, d, gamma, theta);
            for (i64 a = 1; a <= nu / d; ++a)
                for (i64 b = 1; b <= nu / d; ++b) {
                    i64 g = gcd_ll(a, b);
                    if (mode == LambdaMode::primitive && g != 1) continue;
                    // a unimodular completion exists only for primitive lambda;
                    // in the full-box contract non-primitive pairs fall back to
                    // the completion of their primitive part
                    out.push_back(mg * make_M_lambda(a / g, b / g));
                }
        }
    }
    return out;
}

bool coset_equivalent(const SpMatrix& M1, const SpMatrix& M2, const MembershipPredicate& in_subgroup) {
    return in_subgroup(M1 * M2.inverse());
}

CharValue extended_char_eval_exact(const SpMatrix& M, const DirichletCharacter& chi, SignChoice sign,
                                   int k, const GroupContext& ctx) {
    auto delta_value = [&](const SpMatrix& G) -> CharValue {
        i64 delta = G.at(3, 3).rat().to_ll();
        auto a = chi.angle(delta);
        if (!a) return {true, Rational(0)};
        return {false, *a};
    };
    if (similitude_member(M, GroupKind::Gamma21_level, ctx)) return delta_value(M);
    if (mod_ll(ctx.p, ctx.N) != mod_ll(1, ctx.N))
        throw std::invalid_argument("extended_char_eval: +- convention requires p = 1 mod N");
    SpMatrix h = make_Hp(ctx.p, ctx.N);
    SpMatrix m2 = M * h.inverse();
    if (!similitude_member(m2, GroupKind::Gamma21_level, ctx))
        throw std::invalid_argument("extended_char_eval: M outside the extended group");
    CharValue v = delta_value(m2);
    if (v.zero) return v;
    bool flip = (sign == SignChoice::k_minus) && (k % 2 != 0);
    if (flip) {
        Rational a = v.angle + Rational(1, 2);
        if (a >= Rational(1)) a -= Rational(1);
        v.angle = a;
    }
    return v;
}

std::complex<long double> extended_char_eval(const SpMatrix& M, const DirichletCharacter& chi,
                                             SignChoice sign, int k, const GroupContext& ctx) {
    CharValue v = extended_char_eval_exact(M, chi, sign, k, ctx);
    if (v.zero) return {0.0L, 0.0L};
    long double th = 2.0L * 3.14159265358979323846264338327950288L *
                     (static_cast<long double>(v.angle.num().get_d()) /
                      static_cast<long double>(v.angle.den().get_d()));
    return {std::cos(th), std::sin(th)};
}

FjConjugators build_fj_conjugators(const FjParams& fp, const GroupContext& ctx, i64 nu) {
    i64 N = ctx.N, p = ctx.p;
    if (nu < 1 || N % nu != 0) throw std::invalid_argument("fj: nu | N required");
    i64 Nnu = N * nu;
    if (fp.C < 1 || Nnu % fp.C != 0) throw std::invalid_argument("fj: C | N nu required");
    i64 m1 = Nnu / fp.C;
    if (mod_ll(fp.gamma * fp.gamma_s, m1) != mod_ll(1, m1))
        throw std::invalid_argument("fj: gamma gamma* = 1 mod N nu / C violated");
    if (mod_ll(p * fp.p_s, m1) != mod_ll(1, m1))
        throw std::invalid_argument("fj: p p* = 1 mod N nu / C violated");
    if (fp.mu < 1 || nu % fp.mu != 0) throw std::invalid_argument("fj: mu | nu required");
    if ((N * fp.d * fp.mu) % fp.C != 0) throw std::invalid_argument("fj: C | N d mu violated");
    i64 m2 = N * fp.d * fp.mu * p / fp.C;
    if (mod_ll(fp.mu * fp.mu_s, m2) != mod_ll(1, m2))
        throw std::invalid_argument("fj: mu mu* = 1 mod N d mu p / C violated");
    if (mod_ll(fp.eps_gamma - fp.gamma, nu) != 0)
        throw std::invalid_argument("fj: eps_gamma = gamma mod nu violated");
    if ((fp.eps_gamma - fp.gamma_s) % nu != 0)
        throw std::invalid_argument("fj: r = (eps_gamma - gamma*)/nu not integral");
    i64 r = (fp.eps_gamma - fp.gamma_s) / nu;

    auto rq = [](i64 num, i64 den) { return QuadExt(Rational(num, den)); };

    FjConjugators out;
    out.H1 = SpMatrix::identity();
    out.H1.at(1, 1) = rq((1 - p * fp.gamma * fp.p_s * fp.gamma_s) * fp.C, Nnu);
    out.H1.at(1, 3) = QuadExt(fp.p_s * fp.gamma_s);
    out.H1.at(3, 1) = QuadExt(-p * fp.gamma);
    out.H1.at(3, 3) = rq(Nnu, fp.C);

    out.H2 = SpMatrix();
    out.H2.at(0, 0) = QuadExt(fp.mu);
    out.H2.at(0, 1) = rq(N * fp.d * p * fp.mu, fp.C);
    out.H2.at(1, 0) = rq((fp.mu * fp.mu_s - 1) * fp.C, N * fp.d * p * fp.mu);
    out.H2.at(1, 1) = QuadExt(fp.mu_s);
    out.H2.at(2, 2) = QuadExt(fp.mu_s);
    out.H2.at(2, 3) = rq((1 - fp.mu * fp.mu_s) * fp.C, N * fp.d * p * fp.mu);
    out.H2.at(3, 2) = rq(-N * fp.d * p * fp.mu, fp.C);
    out.H2.at(3, 3) = QuadExt(fp.mu);

    out.H3 = SpMatrix::identity();
    out.H3.at(0, 2) = rq(N * fp.d * fp.d * p * p * fp.p_s * fp.mu * fp.mu * r, fp.C);
    out.H3.at(0, 3) = QuadExt(fp.d * p * fp.p_s * fp.mu_s * fp.mu * r);
    out.H3.at(1, 2) = QuadExt(fp.d * p * fp.p_s * fp.mu_s * fp.mu * r);

    // H4 enters only the refined branch of the lemma (mu = 1 and C nu | N);
    // outside it the product is taken without H4
    out.H4 = SpMatrix::identity();
    if (fp.mu == 1 && N % (fp.C * nu) == 0)
        out.H4.at(0, 2) = rq(N * fp.d * fp.d * p * p * fp.p_s * fp.eps_gamma, fp.C * nu);

    for (const SpMatrix* h : {&out.H1, &out.H2, &out.H3, &out.H4}) {
        if (!h->is_integral()) throw std::invalid_argument("fj: conjugator not integral under given congruences");
        if (!similitude_member(*h, GroupKind::Sp_t, GroupContext{}))
            throw std::logic_error("fj: conjugator not symplectic");
    }
    return out;
}

} // namespace paramod
