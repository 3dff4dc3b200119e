#include "qcyclo/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "qcyclo/arith.hpp"
#include "qcyclo/error.hpp"

namespace qcyclo {

using arith::SElement;

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::A: return "A";
    case CaseTag::B_q_doubles: return "B_q_doubles";
    case CaseTag::B_p_doubles: return "B_p_doubles";
    case CaseTag::C_first: return "C_first";
    case CaseTag::C_second: return "C_second";
  }
  return "?";
}

i64 FieldParams::order_G() const {
  i64 n = 1;
  for (const auto& g : generators) n *= g.base_order;
  return n;
}

namespace {

int log_minus_one(int symbol) { return symbol == 1 ? 0 : 1; }

std::string sigma_name(i64 prime) { return "sigma_" + std::to_string(prime); }

}  // namespace

FieldParams make_params(i64 p, i64 q) {
  if (!arith::in_S(p)) throw DomainError("p = " + std::to_string(p) + " is not in S");
  if (!arith::in_S(q)) throw DomainError("q = " + std::to_string(q) + " is not in S");
  if (p >= q) throw DomainError("need p < q");
  if (q > 1'000'000) throw DomainError("q too large for explicit group enumeration");

  const SElement sp(p);
  const SElement sq(q);
  FieldParams fp;
  fp.p = p;
  fp.q = q;
  fp.p_bar = sp.is_minus_one() ? 4 : sp.is_two() ? 8 : p;
  fp.conductor = fp.p_bar * q;
  fp.p_star = arith::p_star(sp);
  fp.q_star = arith::p_star(sq);
  if (q > 2) fp.primitive_root_q = arith::primitive_root(q);
  if (p > 2) fp.primitive_root_p = arith::primitive_root(p);

  const int dq = log_minus_one(arith::legendre(fp.p_star, sq));
  const int dp = log_minus_one(arith::legendre(fp.q_star, sp));

  if (p == -1 && q == 2) {
    // The lift of sigma_2 always has order 4 here.
    fp.generators = {{sigma_name(-1), "s_p", -1, 2, 0}, {sigma_name(2), "s_q", 2, 2, 1}};
  } else if (p == -1) {
    fp.generators = {{sigma_name(-1), "s_p", -1, 2, dp}, {sigma_name(q), "s_q", q, q - 1, dq}};
  } else if (p == 2) {
    fp.generators = {{sigma_name(-1), "s_m1", -1, 2, 0},
                     {sigma_name(2), "s_p", 2, 2, dp},
                     {sigma_name(q), "s_q", q, q - 1, dq}};
    fp.twist_p = 1;
    fp.twist_q = 2;
  } else {
    fp.generators = {{sigma_name(p), "s_p", p, p - 1, dp}, {sigma_name(q), "s_q", q, q - 1, dq}};
  }
  fp.case_tag = classify_case(fp);
  return fp;
}

CaseTag classify_case(const FieldParams& fp) {
  const int dp = fp.doubling_p();
  const int dq = fp.doubling_q();
  if (dp == 0 && dq == 0) return CaseTag::A;
  if (dp == 0) return CaseTag::B_q_doubles;
  if (dq == 0) return CaseTag::B_p_doubles;
  return arith::v2(fp.p - 1) <= arith::v2(fp.q - 1) ? CaseTag::C_first : CaseTag::C_second;
}

GroupElement identity_element() { return {}; }

GroupElement epsilon_element() {
  GroupElement e;
  e.eps = 1;
  return e;
}

GroupElement generator(const FieldParams& fp, std::size_t index) {
  GroupElement g;
  g.exps[index] = 1;
  (void)fp;
  return g;
}

GroupElement multiply(const GroupElement& x, const GroupElement& y, const FieldParams& fp) {
  GroupElement r;
  // Moving y's s_p factor left past x's s_q factor costs eps^{e_q(x) e_p(y)}.
  unsigned e = x.eps ^ y.eps ^ (static_cast<unsigned>(x.exps[fp.twist_q] & y.exps[fp.twist_p]) & 1U);
  for (std::size_t g = 0; g < fp.rank(); ++g) {
    const auto n = static_cast<std::int32_t>(fp.generators[g].base_order);
    std::int32_t s = x.exps[g] + y.exps[g];
    if (s >= n) {
      s -= n;
      e ^= static_cast<unsigned>(fp.generators[g].doubling);
    }
    r.exps[g] = s;
  }
  r.eps = static_cast<std::uint8_t>(e & 1U);
  return r;
}

GroupElement inverse(const GroupElement& x, const FieldParams& fp) {
  GroupElement y;
  for (std::size_t g = 0; g < fp.rank(); ++g) {
    const auto n = static_cast<std::int32_t>(fp.generators[g].base_order);
    y.exps[g] = x.exps[g] == 0 ? 0 : n - x.exps[g];
  }
  // x * y lies in <eps>; absorb it into y.
  y.eps = multiply(x, y, fp).eps;
  return y;
}

GroupElement power(const GroupElement& x, i64 k, const FieldParams& fp) {
  GroupElement base = k < 0 ? inverse(x, fp) : x;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  GroupElement result;
  while (e > 0) {
    if (e & 1U) result = multiply(result, base, fp);
    base = multiply(base, base, fp);
    e >>= 1U;
  }
  return result;
}

i64 element_order(const GroupElement& x, const FieldParams& fp) {
  const GroupElement one = identity_element();
  GroupElement cur = x;
  i64 k = 1;
  while (cur != one) {
    cur = multiply(cur, x, fp);
    ++k;
  }
  return k;
}

std::size_t element_index(const GroupElement& x, const FieldParams& fp) {
  std::size_t idx = 0;
  for (std::size_t g = 0; g < fp.rank(); ++g) {
    idx = idx * static_cast<std::size_t>(fp.generators[g].base_order) + static_cast<std::size_t>(x.exps[g]);
  }
  return idx * 2 + x.eps;
}

std::vector<GroupElement> enumerate_elements(const FieldParams& fp) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(fp.order()));
  GroupElement cur;
  while (true) {
    for (std::uint8_t e = 0; e < 2; ++e) {
      cur.eps = e;
      out.push_back(cur);
    }
    cur.eps = 0;
    // Odometer over the exponent tuple, last generator fastest.
    std::size_t g = fp.rank();
    while (g > 0) {
      --g;
      if (++cur.exps[g] < fp.generators[g].base_order) break;
      cur.exps[g] = 0;
      if (g == 0) return out;
    }
  }
}

std::string element_label(const GroupElement& x, const FieldParams& fp) {
  std::string out;
  for (std::size_t g = 0; g < fp.rank(); ++g) {
    out += fp.generators[g].short_name + "^" + std::to_string(x.exps[g]) + " ";
  }
  return out + "e^" + std::to_string(x.eps);
}

bool commute(const GroupElement& x, const GroupElement& y, const FieldParams& fp) {
  return multiply(x, y, fp) == multiply(y, x, fp);
}

Subgroup closure(std::vector<GroupElement> generators, std::vector<std::string> labels,
                 const FieldParams& fp) {
  Subgroup sg;
  sg.generators = std::move(generators);
  sg.generator_labels = std::move(labels);
  sg.member.assign(static_cast<std::size_t>(fp.order()), false);
  std::deque<GroupElement> frontier{identity_element()};
  sg.member[element_index(identity_element(), fp)] = true;
  while (!frontier.empty()) {
    const GroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& g : sg.generators) {
      const GroupElement y = multiply(x, g, fp);
      const std::size_t idx = element_index(y, fp);
      if (!sg.member[idx]) {
        sg.member[idx] = true;
        frontier.push_back(y);
      }
    }
  }
  for (const auto& x : enumerate_elements(fp)) {
    if (sg.member[element_index(x, fp)]) sg.elements.push_back(x);
  }
  return sg;
}

IndexTwoSubgroup subgroup_N(const FieldParams& fp) {
  const GroupElement sp = generator(fp, fp.twist_p);
  const GroupElement sq = generator(fp, fp.twist_q);
  const GroupElement sp2 = multiply(sp, sp, fp);
  const GroupElement sq2 = multiply(sq, sq, fp);
  const std::string lp = fp.generators[fp.twist_p].short_name;
  const std::string lq = fp.generators[fp.twist_q].short_name;

  std::vector<GroupElement> gens;
  std::vector<std::string> labels;
  if (fp.p == 2) {
    gens.push_back(generator(fp, 0));
    labels.push_back(fp.generators[0].short_name);
  }
  GroupElement rep;
  std::string rep_label;
  switch (fp.case_tag) {
    case CaseTag::A:
      gens.insert(gens.end(), {sp, sq2, epsilon_element()});
      labels.insert(labels.end(), {lp, lq + "^2", "e"});
      rep = sq;
      rep_label = lq;
      break;
    case CaseTag::B_q_doubles:
    case CaseTag::C_second:
      gens.insert(gens.end(), {sp, sq2});
      labels.insert(labels.end(), {lp, lq + "^2"});
      rep = sq;
      rep_label = lq;
      break;
    case CaseTag::B_p_doubles:
    case CaseTag::C_first:
      gens.insert(gens.end(), {sp2, sq});
      labels.insert(labels.end(), {lp + "^2", lq});
      rep = sp;
      rep_label = lp;
      break;
  }
  IndexTwoSubgroup n;
  static_cast<Subgroup&>(n) = closure(std::move(gens), std::move(labels), fp);
  n.coset_rep = rep;
  n.coset_rep_label = rep_label;
  if (static_cast<i64>(n.size()) * 2 != fp.order() || n.contains(rep, fp)) {
    throw InconsistencyError("N is not of index two with the chosen coset representative");
  }
  return n;
}

namespace {

// Exponent partition -> invariant factors, per prime.
std::vector<i64> assemble_invariant_factors(const std::map<i64, std::vector<int>>& exponents_by_prime) {
  std::size_t count = 0;
  for (const auto& [r, exps] : exponents_by_prime) count = std::max(count, exps.size());
  std::vector<i64> factors(count, 1);
  for (const auto& [r, exps] : exponents_by_prime) {
    std::vector<int> sorted = exps;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (int k = 0; k < sorted[i]; ++k) factors[count - 1 - i] *= r;
    }
  }
  return factors;
}

}  // namespace

std::vector<i64> invariant_factors(std::span<const GroupElement> elements, const FieldParams& fp) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!commute(elements[i], elements[j], fp)) throw DomainError("invariant_factors of a non-abelian group");
    }
  }
  const auto size = static_cast<i64>(elements.size());
  std::map<i64, std::vector<int>> exponents_by_prime;
  for (i64 r : arith::prime_divisors(size)) {
    // m[k] = number of cyclic factors of the r-part with exponent >= k.
    std::vector<int> at_least;
    i64 prev = 1;
    i64 rk = 1;
    while (true) {
      rk *= r;
      i64 count = 0;
      for (const auto& x : elements) count += power(x, rk, fp) == identity_element() ? 1 : 0;
      if (count == prev) break;
      int m = 0;
      for (i64 ratio = count / prev; ratio > 1; ratio /= r) ++m;
      at_least.push_back(m);
      prev = count;
    }
    std::vector<int> exps;
    for (int i = 1; !at_least.empty() && i <= at_least.front(); ++i) {
      int e = 0;
      for (int m : at_least) e += m >= i ? 1 : 0;
      exps.push_back(e);
    }
    exponents_by_prime[r] = exps;
  }
  return assemble_invariant_factors(exponents_by_prime);
}

std::vector<i64> invariant_factors_of_cyclic_sum(const std::vector<i64>& orders) {
  std::map<i64, std::vector<int>> exponents_by_prime;
  for (i64 n : orders) {
    for (i64 r : arith::prime_divisors(n)) {
      int e = 0;
      for (i64 m = n; m % r == 0; m /= r) ++e;
      exponents_by_prime[r].push_back(e);
    }
  }
  return assemble_invariant_factors(exponents_by_prime);
}

std::vector<i64> expected_N_cyclic_orders(const FieldParams& fp) {
  const i64 p = fp.p;
  const i64 q = fp.q;
  switch (fp.case_tag) {
    case CaseTag::A:
      if (p == -1) return {2, (q - 1) / 2, 2};
      if (p == 2) return {2, 2, (q - 1) / 2, 2};
      return {p - 1, (q - 1) / 2, 2};
    case CaseTag::B_q_doubles:
    case CaseTag::B_p_doubles:
      if (p == -1 && q == 2) return {2, 2};
      if (p == -1) return {2, q - 1};
      if (p == 2) return {2, 2, q - 1};
      return {p - 1, q - 1};
    case CaseTag::C_first: {
      const i64 d = std::gcd((p - 1) / 2, q - 1);
      const i64 s = (p - 1) / (2 * d);
      return {d, 2 * s * (q - 1)};
    }
    case CaseTag::C_second: {
      const i64 d = std::gcd(p - 1, (q - 1) / 2);
      const i64 s = (q - 1) / (2 * d);
      return {d, 2 * s * (p - 1)};
    }
  }
  return {};
}

IntMat2 operator*(const IntMat2& a, const IntMat2& b) {
  IntMat2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return c;
}

i64 det(const IntMat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

CaseCSmithData case_c_smith(const FieldParams& fp) {
  if (fp.case_tag != CaseTag::C_first && fp.case_tag != CaseTag::C_second) {
    throw DomainError("case_c_smith requires case C");
  }
  CaseCSmithData data;
  data.second_subcase = fp.case_tag == CaseTag::C_second;
  // "major" is the prime whose generator enters N squared.
  const i64 major = data.second_subcase ? fp.q : fp.p;
  const i64 minor = data.second_subcase ? fp.p : fp.q;
  const GroupElement g_major = generator(fp, data.second_subcase ? fp.twist_q : fp.twist_p);
  const GroupElement g_minor = generator(fp, data.second_subcase ? fp.twist_p : fp.twist_q);

  data.d = std::gcd((major - 1) / 2, minor - 1);
  data.s = (major - 1) / (2 * data.d);
  data.t = (minor - 1) / data.d;
  const auto bz = arith::extended_gcd(data.s, data.t);
  if (bz.gcd != 1) throw InconsistencyError("s and t are not coprime");
  data.u = arith::mod(bz.x, data.t);
  data.v = (1 - data.u * data.s) / data.t;

  data.A = {{{major - 1, (major - 1) / 2}, {0, 1 - minor}}};
  data.P = {{{data.u, data.v}, {-data.t, data.s}}};
  data.Q = {{{1, 2 * data.t * data.v - 1}, {-1, -2 * data.t * data.v + 2}}};
  data.B = data.P * data.A * data.Q;

  data.tau = multiply(power(g_major, 2 * data.s, fp), power(g_minor, data.t, fp), fp);
  data.mu = multiply(power(g_major, -2 * data.v, fp), power(g_minor, data.u, fp), fp);
  return data;
}

std::vector<std::vector<GroupElement>> conjugacy_classes(const FieldParams& fp) {
  const auto elements = enumerate_elements(fp);
  std::vector<GroupElement> inverses;
  inverses.reserve(elements.size());
  for (const auto& g : elements) inverses.push_back(inverse(g, fp));
  std::vector<bool> seen(elements.size(), false);
  std::vector<std::vector<GroupElement>> classes;
  for (const auto& x : elements) {
    if (seen[element_index(x, fp)]) continue;
    std::vector<GroupElement> cls;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const GroupElement y = multiply(multiply(elements[i], x, fp), inverses[i], fp);
      const std::size_t idx = element_index(y, fp);
      if (!seen[idx]) {
        seen[idx] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace qcyclo
