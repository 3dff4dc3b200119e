#pragma once

// Irreducible complex representations of the lifted Galois group.
//
// One-dimensional ones factor through G and are listed as all combinations
// g -> zeta_{|g|}^k. Two-dimensional ones are induced from characters of the
// index-two subgroup N and are given by explicit monomial matrices in one
// family per case; see two_dim_family for the list.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qcyclo/cyclotomic.hpp"
#include "qcyclo/group.hpp"
#include "qcyclo/mat2.hpp"

namespace qcyclo {

/// Family tags of the two-dimensional irreducibles:
///   A_odd            case A, p odd:       (i, j), i < (p-1)/2, j < (q-1)/2
///   A_minus_one      case A, p = -1:      (j),    j < (q-1)/2
///   A_two            case A, p = 2:       (i, j), i in {0,1}, j < (q-1)/2
///   B_odd            q doubles, p odd:    (i, j), i < (p-1)/2, j < q-1 odd
///   B_minus_one_two  (p, q) = (-1, 2):    (0)
///   B_minus_one      q doubles, p = -1:   (j),    j < q-1 odd
///   B_two            q doubles, p = 2:    (i, j), i in {0,1}, j < q-1 odd
///   B_p_doubles      p doubles:           (i, j), i < p-1 odd, j < (q-1)/2
///   C_first          v2(p-1) <= v2(q-1):  (i, j), i < d, j < s(q-1) odd
///   C_second         otherwise:           (i, j), i < d', j < t'(p-1) odd
std::string two_dim_family(const FieldParams& params);

struct Irrep {
  int dim = 1;
  std::string family;        // "one_dim" or a two_dim_family tag
  std::vector<i64> indices;  // family indices; one_dim: exponent k_g per generator
  std::vector<RootExp> scalar_images;  // dim 1, per generator
  std::vector<Mat2> matrix_images;     // dim 2, per generator
  RootExp scalar_eps;
  Mat2 matrix_eps;

  std::string label() const;
};

std::vector<Irrep> enumerate_one_dim(const FieldParams& params);
std::vector<Irrep> enumerate_two_dim(const FieldParams& params);
/// One-dimensional first, then two-dimensional, each in enumeration order.
std::vector<Irrep> enumerate_irreps(const FieldParams& params);

/// Image of an arbitrary element: the normal-form word evaluated left to right.
RootExp scalar_image(const Irrep& rep, const GroupElement& x, const FieldParams& params);
Mat2 matrix_image(const Irrep& rep, const GroupElement& x, const FieldParams& params);

CycSum character(const Irrep& rep, const GroupElement& x, const FieldParams& params);
/// Character values at every element, in enumerate_elements order.
std::vector<CycSum> character_values(const Irrep& rep, const FieldParams& params);

/// (1/|G~|) sum_g chi1(g) conj(chi2(g)) over value vectors in element order.
std::complex<double> inner_product(const std::vector<CycSum>& chi1, const std::vector<CycSum>& chi2);
std::complex<double> inner_product(const std::vector<std::complex<double>>& chi1,
                                   const std::vector<std::complex<double>>& chi2);

/// Checks the defining relations of the presentation exactly:
/// g^{|g|} = eps^{d_g}, the twist relation, commutation of all other pairs,
/// eps central with eps^2 = 1.
bool verify_homomorphism(const Irrep& rep, const FieldParams& params);

/// A character of N, given by its values on a generating set (the one listed
/// by subgroup_N, or tau, mu in case C) and extended to all of N.
struct NCharacter {
  std::vector<i64> indices;
  std::vector<GroupElement> generators;
  std::vector<RootExp> generator_values;
  std::vector<std::optional<RootExp>> table;  // by element_index; set on N only

  /// Throws DomainError off N.
  RootExp operator()(const GroupElement& x, const FieldParams& params) const;
};

/// Extends generator values to all of N by breadth-first closure. Throws
/// InconsistencyError if two words for the same element disagree, or if the
/// generators do not reach all of N.
NCharacter make_n_character(const IndexTwoSubgroup& n, std::vector<GroupElement> generators,
                            std::vector<i64> indices, std::vector<RootExp> generator_values,
                            const FieldParams& params);

/// All |N| characters of N in the natural parametrization of each case.
std::vector<NCharacter> enumerate_n_characters(const IndexTwoSubgroup& n, const FieldParams& params);

/// chi differs from its conjugate x -> chi(s^{-1} x s), s the coset representative.
bool is_irreducible(const NCharacter& chi, const IndexTwoSubgroup& n, const FieldParams& params);

struct InducedRep {
  std::vector<Mat2> images;  // by element_index, for every element of G~

  /// The same representation presented by its generator images.
  Irrep as_irrep(const FieldParams& params) const;
  std::vector<CycSum> character() const;
};

/// The block formula  x -> [[chi(x), chi(x s)], [chi(s^{-1} x), chi(s^{-1} x s)]]
/// with chi = 0 off N, applied to every element.
InducedRep induce(const NCharacter& chi, const IndexTwoSubgroup& n, const FieldParams& params);

}  // namespace qcyclo
