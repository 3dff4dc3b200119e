#include <cmath>
#include <numeric>

#include "doctest.h"
#include "qcyclo/arith.hpp"
#include "qcyclo/error.hpp"
#include "qcyclo/lfunc.hpp"

using namespace qcyclo;

namespace {

CycSum z(i64 n, i64 k) { return CycSum(RootExp::zeta(n, k)); }

Poly poly(std::vector<CycSum> c) { return Poly(std::move(c)); }

// Dirichlet series by brute-force convolution, prime by prime: the local
// series is expanded by long division in complex arithmetic.
std::vector<std::complex<double>> naive_expand(const EulerProduct& ep, i64 N) {
  std::vector<std::complex<double>> a(static_cast<std::size_t>(N) + 1, 0.0);
  a[1] = 1.0;
  for (const auto& [ell, lf] : ep.factors) {
    if (ell > N) break;
    const auto p = lf.inverse_poly.to_complex();
    std::vector<std::complex<double>> local{1.0};
    for (i64 pk = ell; pk <= N; pk *= ell) {
      std::complex<double> acc = 0.0;
      const std::size_t n = local.size();
      for (std::size_t i = 1; i < p.size() && i <= n; ++i) acc += p[i] * local[n - i];
      local.push_back(-acc);
    }
    std::vector<std::complex<double>> fixed(a.size(), 0.0);
    for (i64 m = 1; m <= N; ++m) {
      if (m % ell == 0) continue;
      i64 pk = 1;
      for (std::size_t e = 0; e < local.size() && m * pk <= N; ++e, pk *= ell) {
        fixed[static_cast<std::size_t>(m * pk)] += a[static_cast<std::size_t>(m)] * local[e];
      }
    }
    a = std::move(fixed);
  }
  return a;
}

const std::vector<i64> kOracleQs = {2, 3, 5, 7, 13, 17};

}  // namespace

TEST_CASE("Poly basics") {
  const Poly p = Poly::one_minus(CycSum(1));
  CHECK(p.degree() == 1);
  CHECK((p * p) == poly({1, -2, 1}));
  CHECK(p.pow(3) == poly({1, -3, 3, -1}));
  CHECK(Poly::one_minus(CycSum(1), 2) == p * Poly::one_minus(CycSum(-1)));
  CHECK(Poly() == poly({1, 0, 0}));
  CHECK(poly({1, 0, 0}).degree() == 0);
  CHECK(Poly::one_minus(z(6, 1)).to_string() == "1 + e(2/3)*T");
  CHECK(Poly::one_minus(z(6, 1), 2).to_string() == "1 + e(2/3)*T^2");
  CHECK(Poly({1, CycSum(1) + z(3, 1)}).to_string() == "1 + e(1/6)*T");
  CHECK(poly({1, 0, 1}).to_string() == "1 + T^2");
  CHECK(poly({1, 0, 1}).as_integers() == std::vector<i64>{1, 0, 1});
  CHECK_FALSE(Poly::one_minus(z(6, 1)).is_real());
}

TEST_CASE("index set") {
  CHECK(lfunction_indices(make_params(-1, 2)) == std::vector<i64>{0});
  CHECK(lfunction_indices(make_params(-1, 7)) == std::vector<i64>{1, 3, 5});
  CHECK(lfunction_indices(make_params(-1, 13)) == std::vector<i64>{0, 2, 4, 6, 8, 10});
  for (i64 q : kOracleQs) {
    const auto fp = make_params(-1, q);
    const auto idx = lfunction_indices(fp);
    CHECK(idx.size() == enumerate_two_dim(fp).size());
    for (i64 j : idx) CHECK(lfunction_index(irrep_for_index(j, fp), fp) == j);
  }
  CHECK_THROWS_AS(lfunction_indices(make_params(3, 5)), DomainError);
}

TEST_CASE("explicit factor examples") {
  const auto q2 = make_params(-1, 2);
  CHECK(explicit_local_factor(0, 7, q2).inverse_poly == poly({1, 0, -1}));
  CHECK(explicit_local_factor(0, 73, q2).inverse_poly == poly({1, -2, 1}));
  CHECK(explicit_local_factor(0, 5, q2).inverse_poly == poly({1, 0, 1}));
  CHECK(explicit_local_factor(0, 2, q2).inverse_poly == Poly());
  CHECK(explicit_local_factor(1, 2, make_params(-1, 7)).inverse_poly == Poly::one_minus(z(6, 1)));
  CHECK_THROWS_AS(explicit_local_factor(2, 3, make_params(-1, 7)), DomainError);
  CHECK_THROWS_AS(explicit_local_factor(1, 9, make_params(-1, 7)), DomainError);
}

TEST_CASE("generic factor examples") {
  const auto q13 = make_params(-1, 13);
  const auto lf = generic_local_factor(irrep_for_index(2, q13), 17, q13);
  CHECK(lf.inverse_poly == Poly::one_minus(-z(6, 1)).pow(2));
  // Ramified primes give 1.
  for (const auto& rep : enumerate_two_dim(make_params(-1, 7))) {
    CHECK(generic_local_factor(rep, 7, make_params(-1, 7)).inverse_poly == Poly());
  }
  CHECK(generic_local_factor(irrep_for_index(0, make_params(-1, 5)), 2, make_params(-1, 5)).inverse_poly == Poly());
}

TEST_CASE("explicit and generic factors agree") {
  for (i64 q : kOracleQs) {
    const auto fp = make_params(-1, q);
    const auto primes = arith::sieve_primes(2000);
    for (i64 j : lfunction_indices(fp)) {
      const Irrep rep = irrep_for_index(j, fp);
      for (i64 ell : primes) {
        const auto ex = explicit_local_factor(j, ell, fp).inverse_poly;
        const auto gen = generic_local_factor(rep, ell, fp).inverse_poly;
        if (ex != gen) {
          CAPTURE(q);
          CAPTURE(j);
          CAPTURE(ell);
          FAIL_CHECK(ex.to_string() << " vs " << gen.to_string());
        }
        // Degree law: 2 away from 2q, 0 exactly at ramified primes.
        const bool ramified = decomposition_at(ell, fp) == Decomposition::ramified;
        if (ell != 2 && ell != q) CHECK(gen.degree() == 2);
        if (ramified) CHECK(gen.degree() == 0);
        if (!ramified && (ell == 2 || ell == q) && q != 2) CHECK(gen.degree() <= 1);
      }
    }
  }
}

TEST_CASE("Dirichlet factors") {
  const auto fp = make_params(-1, 5);
  const auto one = enumerate_one_dim(fp);
  CHECK(dirichlet_local_factor(one[0], 7, fp).inverse_poly == poly({1, -1}));
  for (const auto& chi : one) {
    if (chi.scalar_images[0] == RootExp::minus_one() && chi.scalar_images[1].is_one()) {
      CHECK(dirichlet_local_factor(chi, 7, fp).inverse_poly == poly({1, 1}));
    }
    if (chi.scalar_images[1] == RootExp::zeta(4, 1)) {
      const CycSum val = CycSum(chi.scalar_images[0]) * z(4, 1);
      CHECK(dirichlet_local_factor(chi, 7, fp).inverse_poly == Poly::one_minus(val));
    }
  }
  CHECK_THROWS_AS(dirichlet_local_factor(one[0], 5, fp), DomainError);
  CHECK_THROWS_AS(dirichlet_local_factor(one[0], 2, fp), DomainError);
}

TEST_CASE("Euler expansion") {
  EulerProduct ep;
  for (i64 ell : arith::sieve_primes(8)) ep.factors.emplace(ell, LocalFactor{ell, ell == 2 ? Poly::one_minus(1) : Poly()});
  const auto c = euler_expand(ep, 8);
  for (i64 n = 1; n <= 8; ++n) {
    const bool pow2 = n == 1 || n == 2 || n == 4 || n == 8;
    CHECK((*c.exact)[static_cast<std::size_t>(n)] == CycSum(pow2 ? 1 : 0));
  }
  EulerProduct missing;
  missing.factors.emplace(2, LocalFactor{2, Poly()});
  CHECK_THROWS_AS(euler_expand(missing, 5), DomainError);

  // The q = 2 L-function.
  const auto q2 = make_params(-1, 2);
  const auto l51 = euler_expand(lfunction_product(enumerate_two_dim(q2)[0], 10, q2), 10);
  CHECK((*l51.exact)[9] == CycSum(1));
  CHECK((*l51.exact)[3] == CycSum(0));
  CHECK((*l51.exact)[2] == CycSum(0));
  CHECK((*l51.exact)[1] == CycSum(1));

  // Against naive convolution, exact and floating paths.
  for (i64 q : {i64{5}, i64{7}, i64{13}}) {
    const auto fp = make_params(-1, q);
    for (const auto& rep : enumerate_two_dim(fp)) {
      const auto ep2 = lfunction_product(rep, 300, fp);
      const auto got = euler_expand(ep2, 300);
      const auto want = naive_expand(ep2, 300);
      for (i64 n = 1; n <= 300; ++n) {
        const auto un = static_cast<std::size_t>(n);
        CHECK(std::abs(got.a[un] - want[un]) < 1e-9);
        CHECK(std::abs((*got.exact)[un].to_complex() - want[un]) < 1e-9);
      }
    }
  }
}

TEST_CASE("Artin product") {
  const auto q7 = make_params(-1, 7);
  CHECK(artin_local_factor(3, q7).inverse_poly == Poly::one_minus(1, 6).pow(2));
  CHECK(artin_local_factor(7, q7).inverse_poly == Poly());
  CHECK(artin_local_factor(11, q7).inverse_poly == Poly::one_minus(1, 6).pow(2));
  CHECK(artin_local_factor(7, make_params(-1, 13)).inverse_poly == Poly::one_minus(1, 12).pow(2));

  // q = 2: the square of the single L-function.
  const auto q2 = make_params(-1, 2);
  const auto rep = enumerate_two_dim(q2)[0];
  for (i64 ell : arith::sieve_primes(500)) {
    CHECK(artin_local_factor(ell, q2).inverse_poly == generic_local_factor(rep, ell, q2).inverse_poly.pow(2));
  }

  for (i64 q : kOracleQs) {
    const auto fp = make_params(-1, q);
    const auto ap = artin_product(fp, 1000, 1000);
    for (const auto& [ell, lf] : ap.product.factors) CHECK(lf.inverse_poly.is_real());
    for (i64 n = 1; n <= 1000; ++n) {
      if (std::gcd(n, 2 * q) != 1) continue;
      const auto v = (*ap.coeffs.exact)[static_cast<std::size_t>(n)].as_integer();
      CHECK(v.has_value());
    }
  }
}

TEST_CASE("closed form comparison") {
  const auto q13 = make_params(-1, 13);
  CHECK(corollary_factor(13, q13).inverse_poly == Poly::one_minus(-1).pow(2));
  CHECK(corollary_factor(7, q13).inverse_poly == Poly::one_minus(1, 12).pow(2));
  const auto q7 = make_params(-1, 7);
  CHECK(corollary_factor(11, q7).inverse_poly == Poly::one_minus(1, 6).pow(2));
  CHECK(corollary_factor(3, q7).inverse_poly == Poly::one_minus(1, 12));

  const auto sub = corollary_subcase(3, q7);
  CHECK(sub.label == "q3_ell3_b_odd");
  CHECK(sub.known_exception);
  CHECK(corollary_subcase(11, q7).label == "q3_ell3_b_even");
  CHECK_FALSE(corollary_subcase(11, q7).known_exception);
  CHECK(corollary_subcase(2, make_params(-1, 5)).label == "q1_ell2_ramified");
  CHECK_THROWS_AS(corollary_factor(3, make_params(-1, 2)), DomainError);

  const auto rows = corollary_report(q7, 100);
  bool saw_exception_mismatch = false;
  for (const auto& r : rows) {
    if (r.subcase.known_exception && !r.equal) saw_exception_mismatch = true;
  }
  CHECK(saw_exception_mismatch);

  // The printed form agrees with the direct product away from ell = 3 (mod 4).
  for (i64 q : {i64{5}, i64{7}, i64{13}, i64{17}, i64{41}}) {
    for (const auto& r : corollary_report(make_params(-1, q), 1000)) {
      if (r.ell % 4 == 3) continue;
      CAPTURE(q);
      CAPTURE(r.ell);
      CHECK(r.equal);
    }
  }
}

TEST_CASE("unramified zeta identity") {
  for (i64 q : kOracleQs) {
    const auto fp = make_params(-1, q);
    for (i64 ell : arith::sieve_primes(2000)) {
      if (ell == 2 || ell == q) continue;
      CAPTURE(q);
      CAPTURE(ell);
      CHECK(unramified_zeta_identity(ell, fp));
    }
  }
  CHECK_THROWS_AS(unramified_zeta_identity(7, make_params(-1, 7)), DomainError);
}

TEST_CASE("completed zeta matches ideal counting") {
  for (i64 q : {i64{2}, i64{5}, i64{7}}) {
    const auto fp = make_params(-1, q);
    const auto cz = completed_zeta(fp, 1500);
    for (i64 n = 1; n <= 1500; ++n) {
      if (std::gcd(n, 2 * q) != 1) continue;
      const auto un = static_cast<std::size_t>(n);
      CHECK((*cz.product_form.exact)[un] == (*cz.ideal_form.exact)[un]);
      const auto v = (*cz.ideal_form.exact)[un].as_integer();
      REQUIRE(v.has_value());
      CHECK(*v >= 0);
    }
  }
}
