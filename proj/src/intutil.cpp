#include "paramod/intutil.hpp"

#include <algorithm>

namespace paramod {

i64 gcd_ll(i64 a, i64 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm_ll(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return iabs(a) / gcd_ll(a, b) * iabs(b);
}

i64 egcd_ll(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return iabs(a);
    }
    i64 x1, y1;
    i64 g = egcd_ll(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 inv_mod(i64 a, i64 m) {
    if (m < 1) throw std::invalid_argument("inv_mod: modulus must be >= 1");
    if (m == 1) return 0;
    i64 x, y;
    i64 g = egcd_ll(mod_ll(a, m), m, x, y);
    if (g != 1) throw std::invalid_argument("inv_mod: not invertible");
    return mod_ll(x, m);
}

i64 mod_ll(i64 a, i64 m) {
    i64 r = a % m;
    if (r < 0) r += iabs(m);
    return r;
}

bool is_prime_ll(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 euler_phi(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n)) {
        i64 pe = 1;
        for (int i = 0; i < e - 1; ++i) pe *= p;
        r *= pe * (p - 1);
    }
    return r;
}

int mobius(i64 n) {
    int m = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

i64 radical(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

bool is_squarefree(i64 n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        i64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace paramod
