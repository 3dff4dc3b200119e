// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "qcyclo/arith.hpp"
#include "qcyclo/error.hpp"
#include "qcyclo/lfunc.hpp"
#include "qcyclo/units.hpp"
#include "test_pairs.hpp"

using namespace qcyclo;

namespace {

constexpr double kOrthoTol = 1e-9;
constexpr double kIntegralTol = 1e-6;
constexpr long double kUnitTol = 1e-12L;
constexpr long double kReorderTol = 1e-10L;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  // Records the first few failures; later ones only flip the verdict.
  void fail(const std::string& what) {
    if (pass || failures < 5) detail << (failures == 0 ? "" : "; ") << what;
    pass = false;
    ++failures;
  }
  int failures = 0;
};

Verdict representation_completeness() {
  Verdict v;
  for (const auto& [p, q] : testing::test_pairs()) {
    const auto fp = make_params(p, q);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const auto irreps = enumerate_irreps(fp);
    i64 two = 0;
    i64 dims = 0;
    std::vector<std::vector<std::complex<double>>> chars;
    for (const auto& rep : irreps) {
      if (rep.dim == 2) ++two;
      dims += rep.dim * rep.dim;
      if (!verify_homomorphism(rep, fp)) v.fail(tag + " " + rep.label() + " breaks a relation");
      std::vector<std::complex<double>> c;
      for (const auto& x : character_values(rep, fp)) c.push_back(x.to_complex());
      chars.push_back(std::move(c));
    }
    if (two != fp.order_G() / 4) v.fail(tag + " two-dimensional count " + std::to_string(two));
    if (dims != fp.order()) v.fail(tag + " sum of squared dimensions " + std::to_string(dims));
    const auto classes = static_cast<i64>(conjugacy_classes(fp).size());
    if (classes != fp.order_G() + fp.order_G() / 4) v.fail(tag + " class count " + std::to_string(classes));
    for (std::size_t a = 0; a < chars.size(); ++a) {
      for (std::size_t b = a; b < chars.size(); ++b) {
        const double want = a == b ? 1.0 : 0.0;
        if (std::abs(inner_product(chars[a], chars[b]) - want) > kOrthoTol) v.fail(tag + " orthonormality");
      }
    }
  }
  v.detail << (v.pass ? "13 pairs: counts, relations, orthonormality, class counts" : "");
  return v;
}

Verdict induction_oracle() {
  Verdict v;
  std::size_t induced = 0;
  for (const auto& [p, q] : testing::test_pairs()) {
    const auto fp = make_params(p, q);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const auto n = subgroup_N(fp);
    const auto two = enumerate_two_dim(fp);
    std::vector<std::vector<CycSum>> targets;
    for (const auto& rep : two) targets.push_back(character_values(rep, fp));
    std::vector<int> hits(two.size(), 0);
    for (const auto& chi : enumerate_n_characters(n, fp)) {
      if (!is_irreducible(chi, n, fp)) continue;
      ++induced;
      const auto c = induce(chi, n, fp).character();
      int matches = 0;
      for (std::size_t k = 0; k < targets.size(); ++k) {
        if (c == targets[k]) {
          ++matches;
          ++hits[k];
        }
      }
      if (matches != 1) v.fail(tag + " induced character matches " + std::to_string(matches) + " irreps");
    }
    for (std::size_t k = 0; k < hits.size(); ++k) {
      if (hits[k] == 0) v.fail(tag + " " + two[k].label() + " is never induced");
    }
  }
  if (v.pass) v.detail << induced << " irreducible inductions, each matching exactly one irrep";
  return v;
}

Verdict subgroup_structure() {
  Verdict v;
  int smith = 0;
  for (const auto& [p, q] : testing::test_pairs()) {
    const auto fp = make_params(p, q);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const auto n = subgroup_N(fp);
    if (invariant_factors(n.elements, fp) != invariant_factors_of_cyclic_sum(expected_N_cyclic_orders(fp))) {
      v.fail(tag + " invariant factors of N");
    }
    if (fp.case_tag != CaseTag::C_first && fp.case_tag != CaseTag::C_second) continue;
    ++smith;
    const auto d = case_c_smith(fp);
    const i64 other = d.second_subcase ? p : q;
    if (d.P * d.A * d.Q != d.B) v.fail(tag + " PAQ != B");
    if (det(d.P) != 1 || det(d.Q) != 1) v.fail(tag + " det P, det Q");
    if (element_order(d.tau, fp) != d.d) v.fail(tag + " order of tau");
    if (element_order(d.mu, fp) != 2 * d.s * (other - 1)) v.fail(tag + " order of mu");
  }
  if (v.pass) v.detail << "13 pairs; Smith data checked on " << smith << " case C pairs";
  return v;
}

Verdict local_factor_oracle() {
  Verdict v;
  std::size_t compared = 0;
  const auto primes = arith::sieve_primes(2000);
  for (i64 q : {2, 3, 5, 7, 13, 17}) {
    const auto fp = make_params(-1, q);
    for (i64 j : lfunction_indices(fp)) {
      const Irrep rep = irrep_for_index(j, fp);
      for (i64 ell : primes) {
        const std::string tag = "q=" + std::to_string(q) + " j=" + std::to_string(j) + " ell=" + std::to_string(ell);
        try {
          if (explicit_local_factor(j, ell, fp).inverse_poly != generic_local_factor(rep, ell, fp).inverse_poly) {
            v.fail(tag + " explicit != generic");
          }
        } catch (const InconsistencyError& e) {
          v.fail(tag + " " + e.what());
        }
        ++compared;
      }
    }
  }
  if (v.pass) v.detail << compared << " exact comparisons";
  return v;
}

Verdict p0_criterion() {
  Verdict v;
  std::size_t count = 0;
  for (i64 ell : arith::sieve_primes(100000)) {
    if (ell % 8 != 1) continue;
    ++count;
    if (arith::in_P0(ell) != (arith::pow_mod(2, (ell - 1) / 4, ell) == 1)) v.fail("ell=" + std::to_string(ell));
  }
  if (v.pass) v.detail << count << " primes = 1 mod 8 up to 1e5";
  return v;
}

Verdict unramified_identity() {
  Verdict v;
  std::size_t count = 0;
  for (i64 q : {3, 5, 7, 13, 17}) {
    const auto fp = make_params(-1, q);
    for (i64 ell : arith::sieve_primes(2000)) {
      if (ell == 2 || ell == q) continue;
      ++count;
      if (!unramified_zeta_identity(ell, fp)) v.fail("q=" + std::to_string(q) + " ell=" + std::to_string(ell));
    }
  }
  if (v.pass) v.detail << count << " (q, ell) pairs";
  return v;
}

Verdict closed_form_comparison() {
  Verdict v;
  std::size_t rows = 0;
  std::size_t flagged = 0;
  bool q7_ell3 = false;
  for (i64 q : {3, 5, 7, 13}) {
    const auto fp = make_params(-1, q);
    for (const auto& r : corollary_report(fp, 2000)) {
      ++rows;
      if (r.subcase.known_exception) {
        if (!r.equal) ++flagged;
        if (q == 7 && r.ell == 3) {
          q7_ell3 = r.direct == Poly::one_minus(1, 6).pow(2) && r.printed == Poly::one_minus(1, 12);
        }
        continue;
      }
      if (!r.equal) {
        v.fail("q=" + std::to_string(q) + " ell=" + std::to_string(r.ell) + " [" + r.subcase.label +
               "] direct " + r.direct.to_string() + " vs printed " + r.printed.to_string());
      }
    }
  }
  if (!q7_ell3) v.fail("q=7, ell=3 exception not reported as (1-T^6)^2 vs (1-T^12)");
  if (!v.pass) v.detail << " (" << v.failures << " unexpected mismatches)";
  v.detail << (v.pass ? "" : ";") << " " << rows << " rows, " << flagged << " flagged in the known exceptional sub-case";
  return v;
}

Verdict zeta_coefficients() {
  Verdict v;
  constexpr i64 N = 10000;
  for (i64 q : {5, 7, 13}) {
    const auto fp = make_params(-1, q);
    const auto ratio = artin_product(fp, N, N);
    const auto completed = completed_zeta(fp, N);
    for (i64 n = 1; n <= N; ++n) {
      if (std::gcd(n, 2 * q) != 1) continue;
      const auto un = static_cast<std::size_t>(n);
      const std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      const auto a = ratio.coeffs.a[un];
      if (std::abs(a.imag()) > kIntegralTol || std::abs(a.real() - std::round(a.real())) > kIntegralTol) {
        v.fail(tag + " ratio coefficient not integral");
      }
      const auto c = completed.product_form.a[un];
      if (std::abs(c.imag()) > kIntegralTol || std::abs(c.real() - std::round(c.real())) > kIntegralTol ||
          std::round(c.real()) < 0) {
        v.fail(tag + " completed coefficient not a nonnegative integer");
      }
      if (std::abs(c - completed.ideal_form.a[un]) > kIntegralTol) v.fail(tag + " completed != ideal counting");
    }
  }
  if (v.pass) v.detail << "q in {5,7,13}, N = 1e4, coprime indices";
  return v;
}

Verdict units() {
  Verdict v;
  for (i64 q : {3, 5, 13, 17}) {
    const auto fp = make_params(-1, q);
    const auto u = eval_unit(fp);
    const long double sq = u.real_part * u.real_part - u.imag_part * u.imag_part;
    const long double q_star = static_cast<long double>(fp.q_star);
    if (std::fabs(sq - q_star) / std::fabs(q_star) > kUnitTol) v.fail("q=" + std::to_string(q) + " square");
  }
  const long double v35 = v_product(3, 5);
  if (!(v35 > 0)) v.fail("v_35 not positive");
  for (auto order : {ProductOrder::columns, ProductOrder::reversed, ProductOrder::log_sum}) {
    if (std::fabs(v_product(3, 5, Precision::extended, order) - v35) / v35 > kReorderTol) v.fail("v_35 reorder");
  }
  if (v.pass) v.detail << "v_35 = " << static_cast<double>(v35);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"representation completeness", representation_completeness},
      {"induction oracle", induction_oracle},
      {"subgroup structure", subgroup_structure},
      {"local-factor oracle", local_factor_oracle},
      {"P0 criterion", p0_criterion},
      {"unramified zeta identity", unramified_identity},
      {"closed-form zeta ratio comparison", closed_form_comparison},
      {"zeta coefficients", zeta_coefficients},
      {"units", units},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << v.detail.str()
              << " [" << static_cast<int>(secs * 1000) << " ms]" << std::endl;
  }
  return all ? 0 : 1;
}
