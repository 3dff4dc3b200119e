#include "qcyclo/units.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>
#include <vector>

#include "qcyclo/arith.hpp"
#include "qcyclo/error.hpp"

namespace qcyclo {

namespace {

template <class Real>
Real bracket(i64 num, i64 den) {
  const i64 r = arith::mod(num, den);
  if (r == 0) return Real(1);
  return Real(2) * std::sin(std::numbers::pi_v<Real> * static_cast<Real>(r) / static_cast<Real>(den));
}

// One factor of a product, carried as numerator and denominator brackets.
struct Term {
  std::vector<std::pair<i64, i64>> num;
  std::vector<std::pair<i64, i64>> den;
};

template <class Real>
Real accumulate(const std::vector<Term>& terms, ProductOrder order) {
  if (order == ProductOrder::log_sum) {
    Real log_abs = 0;
    int sign = 1;
    for (const auto& t : terms) {
      for (const auto& [a, b] : t.num) {
        const Real x = bracket<Real>(a, b);
        log_abs += std::log(std::fabs(x));
        if (x < 0) sign = -sign;
      }
      for (const auto& [a, b] : t.den) {
        const Real x = bracket<Real>(a, b);
        log_abs -= std::log(std::fabs(x));
        if (x < 0) sign = -sign;
      }
    }
    return static_cast<Real>(sign) * std::exp(log_abs);
  }
  Real v = 1;
  for (const auto& t : terms) {
    Real n = 1;
    Real d = 1;
    for (const auto& [a, b] : t.num) n *= bracket<Real>(a, b);
    for (const auto& [a, b] : t.den) d *= bracket<Real>(a, b);
    v *= n / d;
  }
  return v;
}

std::vector<Term> v_terms(i64 p, i64 q, ProductOrder order) {
  const i64 m = (p - 1) / 2;
  const i64 n = (q - 1) / 2;
  std::vector<Term> terms;
  auto add = [&](i64 i, i64 j) { terms.push_back({{{i * q + j, p * q}}, {{j * p + i, p * q}}}); };
  switch (order) {
    case ProductOrder::columns:
      for (i64 j = 0; j <= n; ++j)
        for (i64 i = 0; i <= m; ++i) add(i, j);
      break;
    case ProductOrder::reversed:
      for (i64 i = m; i >= 0; --i)
        for (i64 j = n; j >= 0; --j) add(i, j);
      break;
    default:
      for (i64 i = 0; i <= m; ++i)
        for (i64 j = 0; j <= n; ++j) add(i, j);
  }
  return terms;
}

std::vector<Term> v_two_terms(i64 q, ProductOrder order) {
  std::vector<Term> terms{{{{1, 4}}, {{1, 4 * q}}}};
  std::vector<i64> js;
  for (i64 j = 0; j <= (q - 1) / 2; ++j) js.push_back(j);
  if (order == ProductOrder::reversed) std::reverse(js.begin(), js.end());
  for (i64 j : js) {
    terms.push_back({{{j, 2 * q}, {2 * j - 1, 4 * q}}, {{4 * j + 1, 4 * q}, {j, q}, {2 * j - 1, 2 * q}}});
  }
  return terms;
}

void require_odd_pair(i64 p, i64 q) {
  if (p < 3 || q <= p || !arith::is_prime(p) || !arith::is_prime(q)) {
    throw DomainError("v_pq needs odd primes p < q");
  }
}

template <class Real>
UnitValue finish(Real re, Real im, Precision precision) {
  return {static_cast<long double>(re), static_cast<long double>(im), precision_bits(precision)};
}

template <class Real>
UnitValue eval(const FieldParams& fp, Precision precision, bool p2_interpretation) {
  const i64 p = fp.p;
  const i64 q = fp.q;
  if (p == -1) {
    const Real root = std::sqrt(static_cast<Real>(std::llabs(fp.q_star)));
    return fp.q_star < 0 ? finish<Real>(0, root, precision) : finish<Real>(root, 0, precision);
  }
  if (p == 2) {
    if (!p2_interpretation) {
      throw DomainError("v_2q is only evaluated with the 4j+1 reading enabled (--p2-interpretation)");
    }
    return finish<Real>(static_cast<Real>(v_two_product(q, precision)), 0, precision);
  }
  const Real v = static_cast<Real>(v_product(p, q, precision));
  Real prefactor = 1;
  if (p % 4 == 1 && q % 4 == 3) prefactor = std::sqrt(static_cast<Real>(p));
  if (p % 4 == 3 && q % 4 == 1) prefactor = std::sqrt(static_cast<Real>(q));
  if (p % 4 == 3 && q % 4 == 3) prefactor = std::sqrt(static_cast<Real>(p * q));
  return finish<Real>(prefactor * v, 0, precision);
}

}  // namespace

long double sin_bracket(i64 num, i64 den) {
  if (den <= 0 || num < 0 || num >= den) throw DomainError("sin_bracket needs 0 <= a < 1");
  return bracket<long double>(num, den);
}

int precision_bits(Precision p) {
  return p == Precision::extended ? std::numeric_limits<long double>::digits : std::numeric_limits<double>::digits;
}

long double v_product(i64 p, i64 q, Precision precision, ProductOrder order) {
  require_odd_pair(p, q);
  const auto terms = v_terms(p, q, order);
  if (precision == Precision::extended) return accumulate<long double>(terms, order);
  return accumulate<double>(terms, order);
}

long double v_two_product(i64 q, Precision precision, ProductOrder order) {
  if (q < 3 || !arith::is_prime(q)) throw DomainError("v_2q needs an odd prime q");
  const auto terms = v_two_terms(q, order);
  if (precision == Precision::extended) return accumulate<long double>(terms, order);
  return accumulate<double>(terms, order);
}

UnitValue eval_unit(const FieldParams& fp, Precision precision, bool p2_interpretation) {
  if (precision == Precision::extended) return eval<long double>(fp, precision, p2_interpretation);
  return eval<double>(fp, precision, p2_interpretation);
}

}  // namespace qcyclo
