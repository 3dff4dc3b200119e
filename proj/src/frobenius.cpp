#include "qcyclo/frobenius.hpp"

#include "qcyclo/arith.hpp"
#include "qcyclo/error.hpp"

namespace qcyclo {

using arith::SElement;

namespace {

void require_minus_one(const FieldParams& fp) {
  if (fp.p != -1) throw DomainError("Frobenius and L-function data are only available for p = -1");
}

void require_prime(i64 ell) {
  if (!arith::is_prime(ell)) throw DomainError(std::to_string(ell) + " is not prime");
}

GroupElement word(int a, i64 b, const FieldParams& fp) {
  return multiply(power(generator(fp, 0), a, fp), power(generator(fp, 1), b, fp), fp);
}

}  // namespace

std::string to_string(Decomposition d) {
  switch (d) {
    case Decomposition::ramified: return "ramified";
    case Decomposition::split: return "split";
    case Decomposition::inert: return "inert";
    case Decomposition::unramified_generic: return "unramified";
  }
  return "?";
}

Decomposition decomposition_at_2(const FieldParams& fp) {
  require_minus_one(fp);
  if (fp.q == 2 || arith::legendre(2, SElement(fp.q)) == -1) return Decomposition::ramified;
  return arith::mod(fp.q_star - 1, 16) == 0 ? Decomposition::split : Decomposition::inert;
}

Decomposition decomposition_at_q(const FieldParams& fp) {
  require_minus_one(fp);
  if (fp.q == 2) return decomposition_at_2(fp);
  if (fp.q % 4 == 3) return Decomposition::ramified;
  return fp.q % 8 == 1 ? Decomposition::split : Decomposition::inert;
}

Decomposition decomposition_at(i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  require_prime(ell);
  if (ell == 2) return decomposition_at_2(fp);
  if (ell == fp.q) return decomposition_at_q(fp);
  return Decomposition::unramified_generic;
}

FrobeniusInG frobenius_in_G(i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  require_prime(ell);
  const i64 q = fp.q;
  if (q == 2) {
    if (ell == 2) throw DomainError("2 is totally ramified in K; no Frobenius class");
    // sigma_{-1} <-> -1 and sigma_2 <-> 5 in (Z/8)^*.
    switch (ell % 8) {
      case 1: return {0, 0};
      case 7: return {1, 0};
      case 5: return {0, 1};
      default: return {1, 1};
    }
  }
  if (ell == q) throw DomainError("Frobenius at q is trivial modulo inertia; use frobenius_lift");
  const i64 g = fp.primitive_root_q;
  if (ell == 2) {
    i64 b = arith::discrete_log(q, g, 2);
    if (q % 4 == 3 && b % 4 == 0) b += q - 1;
    return {0, b};
  }
  return {ell % 4 == 3 ? 1 : 0, arith::discrete_log(q, g, ell)};
}

std::vector<GroupElement> FrobeniusData::candidates(const FieldParams& fp) const {
  if (lift) return {*lift};
  return {base, multiply(base, epsilon_element(), fp)};
}

int u_q(const FieldParams& fp) {
  require_minus_one(fp);
  const bool in_p0 = arith::in_P0(fp.q);
  const bool sixteen = arith::mod(fp.q_star - 1, 16) == 0;
  return in_p0 == sixteen ? 1 : -1;
}

int u_ell(i64 ell, i64 b, const FieldParams& fp) {
  if (ell % 4 != 1 || b % 2 != 0) throw DomainError("u_ell needs ell = 1 mod 4 and even b");
  const i64 alpha = arith::sqrt_mod(fp.q_star, ell);
  const int symbol = arith::legendre(alpha, SElement(ell));
  if (symbol != arith::legendre(ell - alpha, SElement(ell))) {
    throw InconsistencyError("u_ell depends on the choice of square root");
  }
  return (b / 2) % 2 == 0 ? symbol : -symbol;
}

FrobeniusData frobenius_lift(i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  FrobeniusData fd;
  fd.ell = ell;
  fd.decomposition = decomposition_at(ell, fp);
  if (fd.decomposition == Decomposition::ramified) {
    throw DomainError("no Frobenius class: " + std::to_string(ell) + " is ramified in K~/K");
  }
  const GroupElement eps = epsilon_element();
  const i64 q = fp.q;

  if (q != 2 && ell == q) {
    // Unramified in K~/K only for q = 1 (mod 4); Fr_q is trivial modulo I_q.
    fd.base = identity_element();
    fd.lift = fd.decomposition == Decomposition::split ? identity_element() : eps;
    return fd;
  }

  const FrobeniusInG f = frobenius_in_G(ell, fp);
  fd.a = f.a;
  fd.b = f.b;
  fd.base = word(f.a, f.b, fp);

  if (q == 2) {
    if (ell % 8 == 1) {
      fd.lift = arith::pow_mod(2, (ell - 1) / 4, ell) == 1 ? identity_element() : eps;
    }
    return fd;
  }

  if (ell == 2) {
    // sigma~_q^{b_2} moves the fourth root of q* by (-1)^{b_2/2}; the sign
    // that matches squaring modulo the prime above 2 is fixed by split/inert.
    const bool split = fd.decomposition == Decomposition::split;
    const bool half_even = (f.b / 2) % 2 == 0;
    const bool plain = half_even == split;
    fd.u = u_q(fp);
    if (plain != (*fd.u == 1)) throw InconsistencyError("Frobenius at 2: P0 rule disagrees with the b_2 parity rule");
    fd.lift = plain ? fd.base : multiply(fd.base, eps, fp);
    return fd;
  }

  if (ell % 4 == 1 && f.b % 2 == 0) {
    fd.u = u_ell(ell, f.b, fp);
    fd.lift = *fd.u == 1 ? fd.base : multiply(fd.base, eps, fp);
  }
  return fd;
}

std::vector<Subgroup> inertia_lift(i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  const Decomposition d = decomposition_at(ell, fp);
  const GroupElement eps = epsilon_element();
  const i64 q = fp.q;
  if (q == 2 && ell == 2) {
    return {closure({generator(fp, 0), generator(fp, 1), eps}, {"s_p", "s_q", "e"}, fp)};
  }
  if (ell != 2 && ell != q) return {closure({}, {}, fp)};
  const std::size_t idx = ell == 2 ? 0 : 1;
  const GroupElement g = generator(fp, idx);
  const std::string name = fp.generators[idx].short_name;
  if (d == Decomposition::ramified) return {closure({g, eps}, {name, "e"}, fp)};
  return {closure({g}, {name}, fp), closure({multiply(g, eps, fp)}, {name + " e"}, fp)};
}

FrobeniusInG project_to_G(const GroupElement& g, const FieldParams& fp) {
  require_minus_one(fp);
  return {g.exps[0], g.exps[1]};
}

}  // namespace qcyclo
