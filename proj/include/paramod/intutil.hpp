#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace paramod {

using i64 = long long;

constexpr i64 iabs(i64 a) { return a < 0 ? -a : a; }

i64 gcd_ll(i64 a, i64 b);
i64 lcm_ll(i64 a, i64 b);

/// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
i64 egcd_ll(i64 a, i64 b, i64& x, i64& y);

/// Inverse of a mod m (m >= 1); throws if gcd(a,m) != 1.
i64 inv_mod(i64 a, i64 m);

i64 mod_ll(i64 a, i64 m); // representative in [0, m)

bool is_prime_ll(i64 n);

/// Prime factorization by trial division, (prime, exponent) pairs, ascending.
std::vector<std::pair<i64, int>> factorize(i64 n);

i64 euler_phi(i64 n);
int mobius(i64 n);
i64 radical(i64 n);
bool is_squarefree(i64 n);
std::vector<i64> divisors(i64 n); // ascending

} // namespace paramod
