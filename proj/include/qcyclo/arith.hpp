#pragma once

// Deterministic number-theoretic primitives on 64-bit integers.

#include <cstdint>
#include <vector>

namespace qcyclo::arith {

using i64 = std::int64_t;

/// Least non-negative residue of a modulo m (m > 0).
i64 mod(i64 a, i64 m);

i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(i64 n);

/// 2-adic valuation; n != 0.
int v2(i64 n);

/// Integer square root: largest r with r*r <= n (n >= 0).
i64 isqrt(i64 n);

struct Bezout {
  i64 gcd;
  i64 x;
  i64 y;  // x*a + y*b == gcd
};
Bezout extended_gcd(i64 a, i64 b);

/// An element of S = {-1} U {primes}.
class SElement {
 public:
  explicit SElement(i64 value);  // throws DomainError
  i64 value() const noexcept { return value_; }
  bool is_minus_one() const noexcept { return value_ == -1; }
  bool is_two() const noexcept { return value_ == 2; }
  bool is_odd_prime() const noexcept { return value_ > 2; }

 private:
  i64 value_;
};

bool in_S(i64 value);

/// Quadratic residue symbol (a/p). For p in {-1, 2} the symbol is identically
/// +1. Throws DomainError when p is an odd prime dividing a.
int legendre(i64 a, SElement p);

/// -1, 2, or (-1)^((p-1)/2) p.
i64 p_star(SElement p);

/// Smallest positive primitive root modulo the odd prime q.
i64 primitive_root(i64 q);

/// Unique b in [0, q-2] with g^b = x (mod q). Baby-step giant-step.
i64 discrete_log(i64 q, i64 g, i64 x);

/// Multiplicative order of x modulo the prime q.
i64 multiplicative_order(i64 x, i64 q);

/// The smaller of the two square roots of a modulo the odd prime ell
/// (Tonelli-Shanks). Throws DomainError for non-residues.
i64 sqrt_mod(i64 a, i64 ell);

/// True iff ell = A^2 + 64 B^2 for some integers A, B.
bool in_P0(i64 ell);

/// All primes <= bound, ascending.
std::vector<i64> sieve_primes(i64 bound);

/// Distinct prime divisors of n > 0, ascending.
std::vector<i64> prime_divisors(i64 n);

}  // namespace qcyclo::arith
