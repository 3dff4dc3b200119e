#pragma once

// 2x2 monomial matrices over the roots of unity: every image of a
// two-dimensional irreducible representation in this library is of the form
//
//   diag(a, b) = [[a, 0], [0, b]]      or      anti(a, b) = [[0, a], [b, 0]]
//
// with a, b roots of unity, and the set is closed under products.

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "qcyclo/cyclotomic.hpp"

namespace qcyclo {

class Mat2 {
 public:
  enum class Shape { diag, anti };

  Mat2() = default;  // identity
  Mat2(Shape shape, RootExp first, RootExp second) : shape_(shape), a_(first), b_(second) {}

  static Mat2 identity() { return {}; }
  static Mat2 scalar(RootExp z) { return {Shape::diag, z, z}; }
  static Mat2 diag(RootExp a, RootExp b) { return {Shape::diag, a, b}; }
  static Mat2 anti(RootExp a, RootExp b) { return {Shape::anti, a, b}; }

  /// Builds the matrix from a full 2x2 entry pattern where exactly one of the
  /// two monomial shapes is populated; anything else is rejected.
  static Mat2 from_entries(const std::array<std::optional<RootExp>, 4>& row_major);

  Shape shape() const noexcept { return shape_; }
  bool is_diag() const noexcept { return shape_ == Shape::diag; }
  /// diag: (1,1) entry; anti: (1,2) entry.
  const RootExp& first() const noexcept { return a_; }
  /// diag: (2,2) entry; anti: (2,1) entry.
  const RootExp& second() const noexcept { return b_; }

  /// Entry (row, col), zero-based; nullopt for a structural zero.
  std::optional<RootExp> entry(int row, int col) const;

  Mat2 operator*(const Mat2& other) const;
  Mat2& operator*=(const Mat2& other) { return *this = *this * other; }
  Mat2 operator*(const RootExp& z) const { return {shape_, a_ * z, b_ * z}; }
  Mat2 inverse() const;
  Mat2 pow(i64 k) const;

  CycSum trace() const;
  RootExp det() const;

  bool is_identity() const { return is_diag() && a_.is_one() && b_.is_one(); }
  bool operator==(const Mat2&) const = default;

  std::array<std::complex<double>, 4> to_complex() const;
  std::string to_string() const;

 private:
  Shape shape_ = Shape::diag;
  RootExp a_;
  RootExp b_;
};

}  // namespace qcyclo
