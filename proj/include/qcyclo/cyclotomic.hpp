#pragma once

// Exact arithmetic with roots of unity.
//
// Convention: RootExp{num, den} denotes exp(2 pi i num / den); e.g. {1, 4} is i
// and {1, 2} is -1. CycSum is an integer combination of roots of unity, stored
// as an element of Z[x]/(x^n - 1) with x = exp(2 pi i / n); equality is decided
// by reducing modulo the n-th cyclotomic polynomial.

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcyclo {

using i64 = std::int64_t;

class RootExp {
 public:
  RootExp() = default;  // 1
  RootExp(i64 num, i64 den);

  static RootExp one() { return {}; }
  static RootExp minus_one() { return {1, 2}; }
  /// zeta_n^k
  static RootExp zeta(i64 n, i64 k) { return {k, n}; }

  i64 num() const noexcept { return num_; }
  i64 den() const noexcept { return den_; }
  bool is_one() const noexcept { return num_ == 0; }

  RootExp operator*(const RootExp& other) const;
  RootExp& operator*=(const RootExp& other) { return *this = *this * other; }
  RootExp inverse() const { return {-num_, den_}; }
  RootExp conj() const { return inverse(); }
  RootExp negated() const { return *this * minus_one(); }
  RootExp pow(i64 k) const;
  /// Multiplicative order.
  i64 order() const noexcept { return den_; }

  std::complex<double> to_complex() const;
  std::string to_string() const;

  auto operator<=>(const RootExp&) const = default;

 private:
  i64 num_ = 0;
  i64 den_ = 1;
};

/// Integer combination of roots of unity.
class CycSum {
 public:
  CycSum() = default;  // 0
  CycSum(i64 value);   // NOLINT: integers embed implicitly
  CycSum(const RootExp& root, i64 multiplicity = 1);

  /// Sum of the given roots with multiplicities.
  static CycSum from_terms(const std::vector<std::pair<RootExp, i64>>& terms);

  i64 conductor() const noexcept { return n_; }

  CycSum operator+(const CycSum& other) const;
  CycSum operator-(const CycSum& other) const;
  CycSum operator-() const;
  CycSum operator*(const CycSum& other) const;
  CycSum operator*(const RootExp& root) const;
  CycSum& operator+=(const CycSum& other) { return *this = *this + other; }
  CycSum& operator-=(const CycSum& other) { return *this = *this - other; }
  CycSum& operator*=(const CycSum& other) { return *this = *this * other; }
  CycSum pow(unsigned k) const;

  /// Complex conjugate (every root inverted).
  CycSum conj() const;

  /// Exact test for zero: reduction modulo Phi_n.
  bool is_zero() const;
  bool operator==(const CycSum& other) const { return (*this - other).is_zero(); }
  bool operator!=(const CycSum& other) const { return !(*this == other); }

  /// Remainder modulo Phi_n re-expressed as roots zeta_n^k, k < phi(n).
  /// Canonical among sums of the same conductor n.
  CycSum reduced() const;

  /// The same number written over the smallest cyclotomic field containing
  /// it (conductor not = 2 mod 4), reduced there. Equal numbers give equal
  /// canonical forms whatever conductor they were built in.
  CycSum canonical() const;

  /// The rational integer this sum equals, if it is one.
  std::optional<i64> as_integer() const;
  bool is_real() const { return *this == conj(); }

  /// Non-zero terms as (root, multiplicity), ascending by root.
  std::vector<std::pair<RootExp, i64>> terms() const;

  std::complex<double> to_complex() const;

  /// e.g. "2", "e(1/4)", "e(1/3) - 2*e(1/6)"; of the canonical form.
  std::string to_string() const;

 private:
  CycSum(i64 n, std::vector<i64> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}
  CycSum lifted(i64 n) const;

  i64 n_ = 1;
  std::vector<i64> coeffs_ = {0};
};

/// Coefficients (ascending) of the n-th cyclotomic polynomial. Cached;
/// safe to call concurrently.
const std::vector<i64>& cyclotomic_polynomial(i64 n);

}  // namespace qcyclo
