#pragma once

// The Galois group of a primary quasi-cyclotomic field attached to a pair
// p < q in S = {-1} U {primes}, realized from its presentation.
//
// Elements are kept in the normal form  g_1^{e_1} ... g_r^{e_r} eps^{k}  with
// 0 <= e_i < |g_i| (orders in the abelian quotient G) and k in {0, 1}. The
// lifted order of g_i is |g_i| or 2|g_i|, encoded by the doubling flag d_i:
// g_i^{|g_i|} = eps^{d_i}. Exactly one pair of generators fails to commute,
// and their commutator is eps.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcyclo {

using i64 = std::int64_t;

enum class CaseTag { A, B_q_doubles, B_p_doubles, C_first, C_second };
std::string to_string(CaseTag tag);

struct GeneratorInfo {
  std::string name;        // "sigma_-1", "sigma_2", "sigma_13"
  std::string short_name;  // "s_p", "s_q" (the non-commuting pair), "s_m1"
  i64 prime;               // the element of S the generator belongs to
  i64 base_order;          // order in G
  int doubling;            // 1 iff the lift has order 2 * base_order
};

struct FieldParams {
  i64 p = 0;
  i64 q = 0;
  i64 p_bar = 0;
  i64 conductor = 0;
  i64 p_star = 0;
  i64 q_star = 0;
  std::vector<GeneratorInfo> generators;
  std::size_t twist_p = 0;  // index of the p-side generator of the twist pair
  std::size_t twist_q = 1;  // index of the q-side generator
  CaseTag case_tag = CaseTag::A;
  i64 primitive_root_p = 0;  // 0 when p is not an odd prime
  i64 primitive_root_q = 0;  // 0 when q == 2

  std::size_t rank() const noexcept { return generators.size(); }
  i64 order_G() const;
  i64 order() const { return 2 * order_G(); }
  int doubling_p() const { return generators[twist_p].doubling; }
  int doubling_q() const { return generators[twist_q].doubling; }
};

/// Validates p < q in S and populates orders, doubling flags and case.
FieldParams make_params(i64 p, i64 q);

CaseTag classify_case(const FieldParams& params);

struct GroupElement {
  std::array<std::int32_t, 3> exps{};
  std::uint8_t eps = 0;

  auto operator<=>(const GroupElement&) const = default;
};

GroupElement identity_element();
GroupElement epsilon_element();
GroupElement generator(const FieldParams& params, std::size_t index);

GroupElement multiply(const GroupElement& x, const GroupElement& y, const FieldParams& params);
GroupElement inverse(const GroupElement& x, const FieldParams& params);
GroupElement power(const GroupElement& x, i64 k, const FieldParams& params);
i64 element_order(const GroupElement& x, const FieldParams& params);

/// All 2|G| normal forms in lexicographic order; index() is the position in it.
std::vector<GroupElement> enumerate_elements(const FieldParams& params);
std::size_t element_index(const GroupElement& x, const FieldParams& params);

/// Normal-form notation, e.g. "s_p^2 s_q^1 e^0".
std::string element_label(const GroupElement& x, const FieldParams& params);

bool commute(const GroupElement& x, const GroupElement& y, const FieldParams& params);

struct Subgroup {
  std::vector<GroupElement> generators;
  std::vector<std::string> generator_labels;
  std::vector<GroupElement> elements;  // ascending
  std::vector<bool> member;            // by element_index

  bool contains(const GroupElement& x, const FieldParams& params) const {
    return member[element_index(x, params)];
  }
  std::size_t size() const noexcept { return elements.size(); }
};

Subgroup closure(std::vector<GroupElement> generators, std::vector<std::string> labels,
                 const FieldParams& params);

/// The abelian subgroup of index two from which the two-dimensional
/// irreducibles are induced, together with the coset representative used.
struct IndexTwoSubgroup : Subgroup {
  GroupElement coset_rep;
  std::string coset_rep_label;
};

IndexTwoSubgroup subgroup_N(const FieldParams& params);

/// Invariant factors d_1 | d_2 | ... (ascending, no 1s) of an abelian group
/// given by its elements, computed by counting solutions of x^{r^k} = 1.
/// Throws DomainError if the elements do not commute.
std::vector<i64> invariant_factors(std::span<const GroupElement> elements, const FieldParams& params);

/// Invariant factors of Z/n_1 + Z/n_2 + ...
std::vector<i64> invariant_factors_of_cyclic_sum(const std::vector<i64>& orders);

/// The cyclic decomposition of N stated case by case (closed formulas).
std::vector<i64> expected_N_cyclic_orders(const FieldParams& params);

using IntMat2 = std::array<std::array<i64, 2>, 2>;
IntMat2 operator*(const IntMat2& a, const IntMat2& b);
i64 det(const IntMat2& m);

/// Smith-form data of the relation matrix of N in case C. In the second
/// sub-case the roles of p and q are exchanged throughout: d = gcd(p-1,
/// (q-1)/2), s = (q-1)/2d, t = (p-1)/d, and tau, mu are words in
/// (s_q^2, s_p).
struct CaseCSmithData {
  bool second_subcase = false;
  i64 d = 0, s = 0, t = 0, u = 0, v = 0;
  IntMat2 A{}, P{}, Q{}, B{};
  GroupElement tau;
  GroupElement mu;
};

CaseCSmithData case_c_smith(const FieldParams& params);

/// Conjugacy classes, each sorted, ordered by their smallest element.
std::vector<std::vector<GroupElement>> conjugacy_classes(const FieldParams& params);

}  // namespace qcyclo
