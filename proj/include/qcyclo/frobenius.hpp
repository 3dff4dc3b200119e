#pragma once

// Decomposition and Frobenius data for the family p = -1, where
// K = Q(zeta_{4q}) (q odd) or Q(zeta_8) (q = 2).

#include <optional>
#include <string>
#include <vector>

#include "qcyclo/group.hpp"

namespace qcyclo {

enum class Decomposition { ramified, split, inert, unramified_generic };
std::string to_string(Decomposition d);

/// Behaviour of 2 in K~/K.
Decomposition decomposition_at_2(const FieldParams& params);
/// Behaviour of q in K~/K (q odd).
Decomposition decomposition_at_q(const FieldParams& params);
/// Behaviour of any prime ell in K~/K.
Decomposition decomposition_at(i64 ell, const FieldParams& params);

struct FrobeniusInG {
  int a = 0;  // exponent of sigma_{-1}
  i64 b = 0;  // exponent of sigma_q (sigma_2 when q = 2)
};

/// Fr_ell = sigma_{-1}^a sigma_q^b in G, modulo inertia. For q odd and
/// ell = 2 this is the class fixing zeta_4, with b_2 = 2 (mod 4) when q = 3 (mod 4).
FrobeniusInG frobenius_in_G(i64 ell, const FieldParams& params);

struct FrobeniusData {
  i64 ell = 0;
  int a = 0;
  i64 b = 0;
  GroupElement base;                // sigma~_{-1}^a sigma~_q^b
  std::optional<GroupElement> lift;  // unset: both base and base*eps are valid choices
  std::optional<int> u;             // u_ell (odd ell) or u_q (ell = 2), when it decides the lift
  Decomposition decomposition = Decomposition::unramified_generic;

  bool ambiguous() const { return !lift.has_value(); }
  /// {lift} or {base, base*eps}.
  std::vector<GroupElement> candidates(const FieldParams& params) const;
};

/// u_q = +1 iff (q not in P0 and 16 does not divide q*-1) or (q in P0 and 16 | q*-1).
int u_q(const FieldParams& params);
/// u_ell = (alpha/ell)(-1)^{b/2} with alpha^2 = q* (mod ell); ell = 1 (mod 4), b even.
int u_ell(i64 ell, i64 b, const FieldParams& params);

/// Throws DomainError("no Frobenius class") when ell ramifies in K~/K.
FrobeniusData frobenius_lift(i64 ell, const FieldParams& params);

/// The possible inertia groups of ell in G~ (one or two candidates).
std::vector<Subgroup> inertia_lift(i64 ell, const FieldParams& params);

/// Image of g in G (eps dropped) as (a, b).
FrobeniusInG project_to_G(const GroupElement& g, const FieldParams& params);

}  // namespace qcyclo
