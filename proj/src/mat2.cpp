#include "qcyclo/mat2.hpp"

#include "qcyclo/error.hpp"

namespace qcyclo {

Mat2 Mat2::from_entries(const std::array<std::optional<RootExp>, 4>& e) {
  const bool diag_pattern = e[0] && !e[1] && !e[2] && e[3];
  const bool anti_pattern = !e[0] && e[1] && e[2] && !e[3];
  if (diag_pattern) return diag(*e[0], *e[3]);
  if (anti_pattern) return anti(*e[1], *e[2]);
  throw InconsistencyError("matrix is neither diagonal nor antidiagonal with unit entries");
}

std::optional<RootExp> Mat2::entry(int row, int col) const {
  const bool on_diagonal = row == col;
  if (on_diagonal != is_diag()) return std::nullopt;
  return row == 0 ? a_ : b_;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  if (is_diag() && o.is_diag()) return diag(a_ * o.a_, b_ * o.b_);
  if (is_diag()) return anti(a_ * o.a_, b_ * o.b_);
  if (o.is_diag()) return anti(a_ * o.b_, b_ * o.a_);
  return diag(a_ * o.b_, b_ * o.a_);
}

Mat2 Mat2::inverse() const {
  if (is_diag()) return diag(a_.inverse(), b_.inverse());
  return anti(b_.inverse(), a_.inverse());
}

Mat2 Mat2::pow(i64 k) const {
  Mat2 base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Mat2 result;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

CycSum Mat2::trace() const {
  if (!is_diag()) return {};
  return CycSum(a_) + CycSum(b_);
}

RootExp Mat2::det() const {
  const RootExp product = a_ * b_;
  return is_diag() ? product : product.negated();
}

std::array<std::complex<double>, 4> Mat2::to_complex() const {
  const auto a = a_.to_complex();
  const auto b = b_.to_complex();
  if (is_diag()) return {a, 0.0, 0.0, b};
  return {0.0, a, b, 0.0};
}

std::string Mat2::to_string() const {
  return std::string(is_diag() ? "diag(" : "anti(") + a_.to_string() + ", " + b_.to_string() + ")";
}

}  // namespace qcyclo
