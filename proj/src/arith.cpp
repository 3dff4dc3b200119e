#include "qcyclo/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "qcyclo/error.hpp"

namespace qcyclo::arith {

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  i64 result = 1;
  i64 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  i64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is exact below 2^64.
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int v2(i64 n) {
  int k = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++k;
  }
  return k;
}

i64 isqrt(i64 n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  auto r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

Bezout extended_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_x = 1, x = 0;
  i64 old_y = 0, y = 1;
  while (r != 0) {
    i64 quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_x = std::exchange(x, old_x - quot * x);
    old_y = std::exchange(y, old_y - quot * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

bool in_S(i64 value) { return value == -1 || is_prime(value); }

SElement::SElement(i64 value) : value_(value) {
  if (!in_S(value)) {
    throw DomainError(std::to_string(value) + " is neither -1 nor a prime");
  }
}

namespace {

// Jacobi symbol (a/n) for odd n > 0 by quadratic reciprocity.
int jacobi(i64 a, i64 n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      i64 r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a = mod(a, n);
  }
  return n == 1 ? result : 0;
}

}  // namespace

int legendre(i64 a, SElement p) {
  if (!p.is_odd_prime()) return 1;
  int symbol = jacobi(a, p.value());
  if (symbol == 0) throw DomainError("symbol undefined at zero residue");
  return symbol;
}

i64 p_star(SElement p) {
  if (p.is_minus_one()) return -1;
  if (p.is_two()) return 2;
  i64 v = p.value();
  return (v % 4 == 1) ? v : -v;
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

i64 primitive_root(i64 q) {
  if (q <= 2 || !is_prime(q)) throw DomainError("primitive_root needs an odd prime");
  const auto factors = prime_divisors(q - 1);
  for (i64 g = 2; g < q; ++g) {
    bool generator = std::all_of(factors.begin(), factors.end(),
                                 [&](i64 r) { return pow_mod(g, (q - 1) / r, q) != 1; });
    if (generator) return g;
  }
  throw DomainError("no primitive root");  // unreachable for primes
}

i64 discrete_log(i64 q, i64 g, i64 x) {
  if (mod(x, q) == 0) throw DomainError("discrete_log of a multiple of q");
  const i64 n = q - 1;
  const i64 m = isqrt(n) + 1;
  std::unordered_map<i64, i64> baby;
  baby.reserve(static_cast<std::size_t>(m));
  i64 cur = 1;
  for (i64 j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mul_mod(cur, g, q);
  }
  const i64 giant = pow_mod(g, n - m % n, q);  // g^{-m}
  i64 gamma = mod(x, q);
  for (i64 i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return mod(i * m + it->second, n);
    gamma = mul_mod(gamma, giant, q);
  }
  throw DomainError("discrete_log: g is not a primitive root");
}

i64 multiplicative_order(i64 x, i64 q) {
  i64 order = q - 1;
  for (i64 r : prime_divisors(q - 1)) {
    while (order % r == 0 && pow_mod(x, order / r, q) == 1) order /= r;
  }
  return order;
}

i64 sqrt_mod(i64 a, i64 ell) {
  a = mod(a, ell);
  if (a == 0 || jacobi(a, ell) != 1) throw DomainError("no square root");
  i64 root;
  if (ell % 4 == 3) {
    root = pow_mod(a, (ell + 1) / 4, ell);
  } else {
    i64 s = ell - 1;
    int e = 0;
    while ((s & 1) == 0) {
      s >>= 1;
      ++e;
    }
    i64 z = 2;
    while (jacobi(z, ell) != -1) ++z;
    i64 c = pow_mod(z, s, ell);
    i64 r = pow_mod(a, (s + 1) / 2, ell);
    i64 t = pow_mod(a, s, ell);
    int m = e;
    while (t != 1) {
      int i = 0;
      i64 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, ell);
        ++i;
      }
      i64 b = c;
      for (int k = 0; k < m - i - 1; ++k) b = mul_mod(b, b, ell);
      r = mul_mod(r, b, ell);
      c = mul_mod(b, b, ell);
      t = mul_mod(t, c, ell);
      m = i;
    }
    root = r;
  }
  return std::min(root, ell - root);
}

bool in_P0(i64 ell) {
  for (i64 b = 0; 64 * b * b <= ell; ++b) {
    i64 rest = ell - 64 * b * b;
    i64 a = isqrt(rest);
    if (a * a == rest) return true;
  }
  return false;
}

std::vector<i64> sieve_primes(i64 bound) {
  std::vector<i64> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (i64 i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (i64 k = i * i; k <= bound; k += i) composite[static_cast<std::size_t>(k)] = true;
  }
  return primes;
}

}  // namespace qcyclo::arith
