#pragma once

// Artin L-functions of K~/Q for p = -1.
//
// A local factor is stored through its inverse: L_ell(s) = 1 / P(ell^{-s}),
// P a polynomial in T with cyclotomic coefficients and P(0) = 1.
//
// Two-dimensional irreducibles are addressed by the index j of the
// representation rho_j with rho_j(sigma~_q) = [[0, zeta_{q-1}^j], [1, 0]]:
// j even in [0, q-1) when q = 1 (mod 4), j odd when q = 3 (mod 4), and j = 0
// for q = 2.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcyclo/cyclotomic.hpp"
#include "qcyclo/frobenius.hpp"
#include "qcyclo/group.hpp"
#include "qcyclo/reps.hpp"

namespace qcyclo {

/// Polynomial in T, ascending coefficients, trailing zeros trimmed.
class Poly {
 public:
  Poly() : c_{CycSum(1)} {}  // the constant 1
  explicit Poly(std::vector<CycSum> coeffs);
  /// 1 - c T^k
  static Poly one_minus(const CycSum& c, unsigned k = 1);

  const std::vector<CycSum>& coeffs() const noexcept { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  CycSum coeff(std::size_t k) const { return k < c_.size() ? c_[k] : CycSum(); }

  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(unsigned k) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  bool is_real() const;
  /// Integer coefficients, if every coefficient is a rational integer.
  std::optional<std::vector<i64>> as_integers() const;
  std::vector<std::complex<double>> to_complex() const;
  /// e.g. "1 - e(1/6)*T + T^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<CycSum> c_;
};

struct LocalFactor {
  i64 prime = 0;
  Poly inverse_poly;
};

/// The index set of two-dimensional irreducibles, ascending.
std::vector<i64> lfunction_indices(const FieldParams& params);
Irrep irrep_for_index(i64 j, const FieldParams& params);
i64 lfunction_index(const Irrep& rep, const FieldParams& params);

/// The closed-form local factor of rho_j at ell, case by case in the residue
/// of ell, the parity of b_ell and the P0 / u_ell / u_q signs.
LocalFactor explicit_local_factor(i64 j, i64 ell, const FieldParams& params);

/// det(I - rho(Fr~) T) on the inertia invariants, evaluated for every
/// inertia candidate and every admissible Frobenius lift; throws
/// InconsistencyError if the variants disagree.
LocalFactor generic_local_factor(const Irrep& rep, i64 ell, const FieldParams& params);

/// 1 - chi(Fr_ell) T for a one-dimensional chi; ell must not divide 2q.
LocalFactor dirichlet_local_factor(const Irrep& chi, i64 ell, const FieldParams& params);

struct EulerProduct {
  std::map<i64, LocalFactor> factors;
};

struct DirichletCoeffs {
  i64 N = 0;
  std::vector<std::complex<double>> a;     // a[n] for 1 <= n <= N; a[0] unused
  std::optional<std::vector<CycSum>> exact;  // same indexing, when computed exactly
};

inline constexpr i64 default_exact_bound = 2000;

/// Expands prod_ell 1/P_ell(ell^{-s}) to a_1..a_N: exact power-series
/// inversion per prime, then multiplicative assembly. Exact coefficients
/// are kept when N <= exact_bound. Throws DomainError if a prime <= N is missing.
DirichletCoeffs euler_expand(const EulerProduct& product, i64 N, i64 exact_bound = default_exact_bound);

/// The generic local factors of one representation at every prime <= bound.
EulerProduct lfunction_product(const Irrep& rep, i64 bound, const FieldParams& params);

/// prod over two-dimensional rho of L_ell(rho)^2, as an inverse polynomial.
LocalFactor artin_local_factor(i64 ell, const FieldParams& params);

struct ArtinProduct {
  EulerProduct product;
  DirichletCoeffs coeffs;
};

/// zeta_{K~} / zeta_K: per-prime factors for ell <= bound, expanded to N terms.
ArtinProduct artin_product(const FieldParams& params, i64 bound, i64 N, i64 exact_bound = default_exact_bound);

/// The per-prime factor of the printed zeta-ratio closed form, for comparison.
LocalFactor corollary_factor(i64 ell, const FieldParams& params);

struct CorollarySubcase {
  std::string label;       // e.g. "q3_ell3_b_odd"
  bool known_exception;    // the one sub-case where the closed form is known to differ
};
CorollarySubcase corollary_subcase(i64 ell, const FieldParams& params);

struct CorollaryRow {
  i64 ell = 0;
  CorollarySubcase subcase;
  Poly direct;
  Poly printed;
  bool equal = false;
};

std::vector<CorollaryRow> corollary_report(const FieldParams& params, i64 bound);

/// prod_{1-dim chi} (1 - chi(Fr) T) * prod_{2-dim} P_j(T)^2 == (1 - T^f)^{2|G|/f},
/// f the order of the Frobenius lift; ell must not divide 2q.
bool unramified_zeta_identity(i64 ell, const FieldParams& params);

struct CompletedZeta {
  DirichletCoeffs product_form;  // (prod_{1-dim} L) (prod_{2-dim} L^2)
  DirichletCoeffs ideal_form;    // prod (1 - ell^{-f s})^{-2|G|/f}
};

/// Both sides of the zeta_{K~} decomposition with the factors at ell | 2q
/// set to 1, so only indices coprime to 2q are meaningful.
CompletedZeta completed_zeta(const FieldParams& params, i64 N, i64 exact_bound = default_exact_bound);

}  // namespace qcyclo
