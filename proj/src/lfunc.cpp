#include "qcyclo/lfunc.hpp"

#include <numeric>
#include <sstream>

#include "qcyclo/arith.hpp"
#include "qcyclo/error.hpp"
#include "qcyclo/parallel.hpp"

namespace qcyclo {

using arith::SElement;

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<CycSum> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.emplace_back(0);
  trim();
}

Poly Poly::one_minus(const CycSum& c, unsigned k) {
  std::vector<CycSum> v(k + 1);
  v[0] = CycSum(1);
  v[k] = v[k] - c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator*(const Poly& o) const {
  std::vector<CycSum> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned k) const {
  Poly result;
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    base *= base;
    k >>= 1U;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  const std::size_t n = std::max(c_.size(), o.c_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (coeff(k) != o.coeff(k)) return false;
  }
  return true;
}

bool Poly::is_real() const {
  for (const auto& c : c_) {
    if (!c.is_real()) return false;
  }
  return true;
}

std::optional<std::vector<i64>> Poly::as_integers() const {
  std::vector<i64> out;
  for (const auto& c : c_) {
    const auto v = c.as_integer();
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

std::vector<std::complex<double>> Poly::to_complex() const {
  std::vector<std::complex<double>> out;
  for (const auto& c : c_) out.push_back(c.to_complex());
  return out;
}

std::string Poly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    std::string coef = c_[k].to_string();
    const std::string power = k == 0 ? "" : k == 1 ? "T" : "T^" + std::to_string(k);
    const bool negative = !coef.empty() && coef[0] == '-';
    const bool compound = coef.find(' ') != std::string::npos;
    if (negative && !compound) coef.erase(0, 1);
    if (!first) out << (negative && !compound ? " - " : " + ");
    else if (negative && !compound) out << "-";
    if (k == 0) {
      out << coef;
    } else if (coef == "1") {
      out << power;
    } else {
      out << (compound ? "(" + coef + ")" : coef) << "*" << power;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------- indices

namespace {

void require_minus_one(const FieldParams& fp) {
  if (fp.p != -1) throw DomainError("L-functions are only available for p = -1");
}

RootExp zeta(i64 n, i64 k) { return RootExp::zeta(n, k); }

CycSum signed_root(int sign, RootExp z) { return sign < 0 ? CycSum(z.negated()) : CycSum(z); }

}  // namespace

std::vector<i64> lfunction_indices(const FieldParams& fp) {
  require_minus_one(fp);
  if (fp.q == 2) return {0};
  std::vector<i64> out;
  const i64 parity = fp.q % 4 == 3 ? 1 : 0;
  for (i64 j = parity; j < fp.q - 1; j += 2) out.push_back(j);
  return out;
}

Irrep irrep_for_index(i64 j, const FieldParams& fp) {
  require_minus_one(fp);
  for (auto& rep : enumerate_two_dim(fp)) {
    if (lfunction_index(rep, fp) == j) return rep;
  }
  throw DomainError("no two-dimensional irreducible with index j = " + std::to_string(j));
}

i64 lfunction_index(const Irrep& rep, const FieldParams& fp) {
  require_minus_one(fp);
  if (rep.dim != 2) throw DomainError("lfunction_index of a one-dimensional representation");
  if (fp.q == 2) return 0;
  const Mat2& s = rep.matrix_images[1];
  if (s.is_diag() || !s.second().is_one()) throw DomainError("unexpected shape of rho(sigma~_q)");
  const RootExp z = s.first();
  if ((fp.q - 1) % z.den() != 0) throw DomainError("rho(sigma~_q) entry is not a (q-1)-th root of unity");
  return z.num() * ((fp.q - 1) / z.den());
}

// ---------------------------------------------------------------- explicit

LocalFactor explicit_local_factor(i64 j, i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  if (!arith::is_prime(ell)) throw DomainError(std::to_string(ell) + " is not prime");
  const auto idx = lfunction_indices(fp);
  if (std::find(idx.begin(), idx.end(), j) == idx.end()) {
    throw DomainError("j = " + std::to_string(j) + " is not a two-dimensional index for q = " + std::to_string(fp.q));
  }
  const i64 q = fp.q;
  LocalFactor lf{ell, Poly()};
  const CycSum one(1);

  if (q == 2) {
    if (ell == 2) return lf;
    switch (ell % 8) {
      case 7:
      case 3: lf.inverse_poly = Poly::one_minus(one, 2); break;
      case 5: lf.inverse_poly = Poly::one_minus(CycSum(-1), 2); break;
      default: lf.inverse_poly = Poly::one_minus(arith::in_P0(ell) ? one : CycSum(-1)).pow(2); break;
    }
    return lf;
  }

  if (ell == 2) {
    if (arith::legendre(2, SElement(q)) == -1) return lf;
    const i64 b2 = frobenius_in_G(2, fp).b;
    lf.inverse_poly = Poly::one_minus(signed_root(u_q(fp), zeta(2 * (q - 1), j * b2)));
    return lf;
  }
  if (ell == q) {
    if (q % 4 == 3 || j != 0) return lf;
    lf.inverse_poly = Poly::one_minus(q % 8 == 1 ? one : CycSum(-1));
    return lf;
  }

  const auto [a, b] = frobenius_in_G(ell, fp);
  const CycSum x(zeta(q - 1, j * b));
  if (a == 0 && b % 2 == 0) {
    lf.inverse_poly = Poly::one_minus(signed_root(u_ell(ell, b, fp), zeta(2 * (q - 1), j * b))).pow(2);
  } else if (a == 1 && b % 2 == 1) {
    lf.inverse_poly = Poly::one_minus(-x, 2);
  } else {
    lf.inverse_poly = Poly::one_minus(x, 2);
  }
  return lf;
}

// ---------------------------------------------------------------- generic

namespace {

// A subspace of C^2 spanned by monomial-type vectors: dimension 0, 1 or 2,
// a line being given by coordinates that are roots of unity or zero.
struct Space {
  int dim = 2;
  std::optional<RootExp> x;
  std::optional<RootExp> y;
};

Space line(std::optional<RootExp> x, std::optional<RootExp> y) { return {1, x, y}; }

Space fixed_space(const Mat2& m) {
  if (m.is_diag()) {
    const bool a = m.first().is_one();
    const bool b = m.second().is_one();
    if (a && b) return {};
    if (a) return line(RootExp::one(), std::nullopt);
    if (b) return line(std::nullopt, RootExp::one());
    return {0, {}, {}};
  }
  // [[0, a], [b, 0]] (a, 1)^T = (a, ab)^T.
  if ((m.first() * m.second()).is_one()) return line(m.first(), RootExp::one());
  return {0, {}, {}};
}

bool proportional(const Space& s, const Space& t) {
  if (s.x.has_value() != t.x.has_value() || s.y.has_value() != t.y.has_value()) return false;
  if (s.x && s.y) return *s.x * *t.y == *t.x * *s.y;
  return true;
}

Space intersect(const Space& s, const Space& t) {
  if (s.dim == 0 || t.dim == 0) return {0, {}, {}};
  if (s.dim == 2) return t;
  if (t.dim == 2) return s;
  return proportional(s, t) ? s : Space{0, {}, {}};
}

std::optional<RootExp> times(const std::optional<RootExp>& a, const std::optional<RootExp>& b) {
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

Poly restricted_charpoly(const Mat2& f, const Space& v) {
  if (v.dim == 0) return Poly();
  if (v.dim == 2) {
    return Poly({CycSum(1), -f.trace(), CycSum(f.det())});
  }
  std::optional<RootExp> fx;
  std::optional<RootExp> fy;
  if (f.is_diag()) {
    fx = times(f.first(), v.x);
    fy = times(f.second(), v.y);
  } else {
    fx = times(f.first(), v.y);
    fy = times(f.second(), v.x);
  }
  const RootExp lambda = v.x ? *fx * v.x->inverse() : *fy * v.y->inverse();
  const Space image = line(fx, fy);
  if (!image.x.has_value() && !image.y.has_value()) throw InconsistencyError("Frobenius kills the invariant line");
  if (!proportional(image, v) || (v.x && v.y && !(*fy == lambda * *v.y))) {
    throw InconsistencyError("inertia invariants are not stable under Frobenius");
  }
  return Poly::one_minus(CycSum(lambda));
}

}  // namespace

LocalFactor generic_local_factor(const Irrep& rep, i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  if (rep.dim != 2) throw DomainError("generic_local_factor expects a two-dimensional representation");
  std::optional<Poly> result;
  std::optional<FrobeniusData> frob;
  const bool ramified = decomposition_at(ell, fp) == Decomposition::ramified;
  for (const auto& inertia : inertia_lift(ell, fp)) {
    Space v;
    for (const auto& g : inertia.generators) v = intersect(v, fixed_space(matrix_image(rep, g, fp)));
    std::vector<Poly> variants;
    if (v.dim == 0) {
      variants.emplace_back();
    } else {
      if (ramified) throw InconsistencyError("nonzero inertia invariants at a prime ramified in K~/K");
      if (!frob) frob = frobenius_lift(ell, fp);
      for (const auto& f : frob->candidates(fp)) variants.push_back(restricted_charpoly(matrix_image(rep, f, fp), v));
    }
    for (const auto& poly : variants) {
      if (!result) {
        result = poly;
      } else if (*result != poly) {
        throw InconsistencyError("local factor at " + std::to_string(ell) + " depends on the choice of inertia or lift: " +
                                 result->to_string() + " vs " + poly.to_string());
      }
    }
  }
  return {ell, *result};
}

LocalFactor dirichlet_local_factor(const Irrep& chi, i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  if (chi.dim != 1) throw DomainError("dirichlet_local_factor expects a one-dimensional character");
  if (ell == 2 || ell == fp.q) throw DomainError("unsupported prime: " + std::to_string(ell) + " divides 2q");
  const auto [a, b] = frobenius_in_G(ell, fp);
  const GroupElement fr = multiply(power(generator(fp, 0), a, fp), power(generator(fp, 1), b, fp), fp);
  return {ell, Poly::one_minus(CycSum(scalar_image(chi, fr, fp)))};
}

// ---------------------------------------------------------------- expansion

namespace {

template <class T>
std::vector<T> invert_series(const std::vector<T>& p, std::size_t terms) {
  std::vector<T> c(terms + 1);
  c[0] = T(1);
  for (std::size_t n = 1; n <= terms; ++n) {
    T acc{};
    for (std::size_t i = 1; i < p.size() && i <= n; ++i) acc = acc + p[i] * c[n - i];
    c[n] = T(0) - acc;
  }
  return c;
}

std::vector<i64> smallest_prime_factor(i64 n) {
  std::vector<i64> spf(static_cast<std::size_t>(n) + 1, 0);
  for (i64 i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (i64 k = i; k <= n; k += i) {
      if (spf[static_cast<std::size_t>(k)] == 0) spf[static_cast<std::size_t>(k)] = i;
    }
  }
  return spf;
}

}  // namespace

DirichletCoeffs euler_expand(const EulerProduct& product, i64 N, i64 exact_bound) {
  if (N < 1) throw DomainError("need N >= 1");
  const auto spf = smallest_prime_factor(N);
  const bool exact = N <= exact_bound;
  // Local series c_ell[e] = coefficient of ell^{-es}.
  std::map<i64, std::vector<std::complex<double>>> local;
  std::map<i64, std::vector<CycSum>> local_exact;
  for (i64 ell : arith::sieve_primes(std::max<i64>(N, 2))) {
    if (ell > N) break;
    const auto it = product.factors.find(ell);
    if (it == product.factors.end()) throw DomainError("Euler product lacks the factor at " + std::to_string(ell));
    std::size_t terms = 0;
    for (i64 pk = ell; pk <= N / ell; pk *= ell) ++terms;
    ++terms;
    const auto series = invert_series(it->second.inverse_poly.coeffs(), terms);
    std::vector<std::complex<double>> cs;
    for (const auto& s : series) cs.push_back(s.to_complex());
    local[ell] = std::move(cs);
    if (exact) local_exact[ell] = series;
  }
  DirichletCoeffs out;
  out.N = N;
  out.a.assign(static_cast<std::size_t>(N) + 1, 0.0);
  out.a[1] = 1.0;
  if (exact) out.exact = std::vector<CycSum>(static_cast<std::size_t>(N) + 1);
  if (exact) (*out.exact)[1] = CycSum(1);
  for (i64 n = 2; n <= N; ++n) {
    const i64 ell = spf[static_cast<std::size_t>(n)];
    i64 m = n;
    std::size_t e = 0;
    while (m % ell == 0) {
      m /= ell;
      ++e;
    }
    const auto un = static_cast<std::size_t>(n);
    const auto um = static_cast<std::size_t>(m);
    out.a[un] = out.a[um] * local[ell][e];
    if (exact) (*out.exact)[un] = ((*out.exact)[um] * local_exact[ell][e]).reduced();
  }
  return out;
}

EulerProduct lfunction_product(const Irrep& rep, i64 bound, const FieldParams& fp) {
  require_minus_one(fp);
  const auto primes = arith::sieve_primes(std::max<i64>(bound, 2));
  auto factors = parallel_map(primes.size(), [&](std::size_t k) { return generic_local_factor(rep, primes[k], fp); });
  EulerProduct ep;
  for (auto& f : factors) ep.factors.emplace(f.prime, std::move(f));
  return ep;
}

LocalFactor artin_local_factor(i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  Poly total;
  for (const auto& rep : enumerate_two_dim(fp)) total *= generic_local_factor(rep, ell, fp).inverse_poly.pow(2);
  return {ell, total};
}

ArtinProduct artin_product(const FieldParams& fp, i64 bound, i64 N, i64 exact_bound) {
  require_minus_one(fp);
  const auto primes = arith::sieve_primes(std::max<i64>(bound, 2));
  auto factors = parallel_map(primes.size(), [&](std::size_t k) { return artin_local_factor(primes[k], fp); });
  ArtinProduct out;
  for (auto& f : factors) out.product.factors.emplace(f.prime, std::move(f));
  out.coeffs = euler_expand(out.product, N, exact_bound);
  return out;
}

// ---------------------------------------------------------------- closed form

namespace {

struct CorollaryInputs {
  i64 b = 0;
  i64 f = 1;
  i64 g = 1;
};

// b normalized to 2 (mod 4) when q = 3 (mod 4) and b is even.
CorollaryInputs corollary_inputs(i64 ell, const FieldParams& fp) {
  CorollaryInputs in;
  in.b = frobenius_in_G(ell, fp).b;
  const i64 q = fp.q;
  if (q % 4 == 3 && in.b % 4 == 0) in.b += q - 1;
  in.g = std::gcd(in.b, q - 1);
  in.f = (q - 1) / in.g;
  return in;
}

int signed_power(int sign, i64 k) { return sign < 0 && k % 2 == 1 ? -1 : 1; }

void require_odd_q(const FieldParams& fp) {
  require_minus_one(fp);
  if (fp.q == 2) throw DomainError("the closed zeta-ratio form is stated for odd q");
}

}  // namespace

CorollarySubcase corollary_subcase(i64 ell, const FieldParams& fp) {
  require_odd_q(fp);
  const std::string qc = fp.q % 4 == 1 ? "q1" : "q3";
  if (ell == 2) {
    const bool ram = decomposition_at_2(fp) == Decomposition::ramified;
    return {qc + (ram ? "_ell2_ramified" : "_ell2"), false};
  }
  if (ell == fp.q) return {qc + "_ellq", false};
  const auto [a, b] = frobenius_in_G(ell, fp);
  const std::string lc = a == 0 ? "_ell1" : "_ell3";
  const std::string bc = b % 2 == 0 ? "_b_even" : "_b_odd";
  return {qc + lc + bc, fp.q % 4 == 3 && a == 1 && b % 2 == 1};
}

LocalFactor corollary_factor(i64 ell, const FieldParams& fp) {
  require_odd_q(fp);
  if (!arith::is_prime(ell)) throw DomainError(std::to_string(ell) + " is not prime");
  const i64 q = fp.q;
  const bool q1 = q % 4 == 1;
  LocalFactor lf{ell, Poly()};
  if (ell == q) {
    if (q1) lf.inverse_poly = Poly::one_minus(CycSum((q - 1) / 4 % 2 == 0 ? 1 : -1)).pow(2);
    return lf;
  }
  const CorollaryInputs in = corollary_inputs(ell, fp);
  const auto f = static_cast<unsigned>(in.f);
  const auto g = static_cast<unsigned>(in.g);
  if (ell == 2) {
    // u_q and b_2 only exist when 2 is unramified in K~/K.
    if (decomposition_at_2(fp) == Decomposition::ramified) return lf;
    const int uf = signed_power(u_q(fp), in.f);
    lf.inverse_poly = Poly::one_minus(CycSum(q1 ? uf : -uf), f).pow(g);
    return lf;
  }
  const bool ell1 = ell % 4 == 1;
  const bool b_even = in.b % 2 == 0;
  if (ell1 && b_even) {
    const int uf = signed_power(u_ell(ell, in.b, fp), in.f);
    lf.inverse_poly = Poly::one_minus(CycSum(q1 ? uf : -uf), f).pow(2 * g);
  } else if (q1) {
    lf.inverse_poly = Poly::one_minus(CycSum(1), f).pow(2 * g);
  } else if (ell1) {
    lf.inverse_poly = Poly::one_minus(CycSum(-1), f).pow(2 * g);
  } else {
    lf.inverse_poly = Poly::one_minus(CycSum(1), 2 * f).pow(g);
  }
  return lf;
}

std::vector<CorollaryRow> corollary_report(const FieldParams& fp, i64 bound) {
  require_odd_q(fp);
  const auto primes = arith::sieve_primes(std::max<i64>(bound, 2));
  return parallel_map(primes.size(), [&](std::size_t k) {
    const i64 ell = primes[k];
    CorollaryRow row;
    row.ell = ell;
    row.subcase = corollary_subcase(ell, fp);
    row.direct = artin_local_factor(ell, fp).inverse_poly;
    row.printed = corollary_factor(ell, fp).inverse_poly;
    row.equal = row.direct == row.printed;
    return row;
  });
}

// ---------------------------------------------------------------- zeta

namespace {

Poly one_dim_product(const GroupElement& fr, const FieldParams& fp) {
  Poly total;
  for (const auto& chi : enumerate_one_dim(fp)) total *= Poly::one_minus(CycSum(scalar_image(chi, fr, fp)));
  return total;
}

Poly ideal_poly(i64 order, const FieldParams& fp) {
  return Poly::one_minus(CycSum(1), static_cast<unsigned>(order)).pow(static_cast<unsigned>(fp.order() / order));
}

void require_coprime(i64 ell, const FieldParams& fp) {
  if (ell == 2 || ell == fp.q) throw DomainError("ell must not divide 2q");
}

}  // namespace

bool unramified_zeta_identity(i64 ell, const FieldParams& fp) {
  require_minus_one(fp);
  require_coprime(ell, fp);
  const FrobeniusData fd = frobenius_lift(ell, fp);
  Poly two;
  for (const auto& rep : enumerate_two_dim(fp)) two *= generic_local_factor(rep, ell, fp).inverse_poly.pow(2);
  for (const auto& f : fd.candidates(fp)) {
    if (one_dim_product(f, fp) * two != ideal_poly(element_order(f, fp), fp)) return false;
  }
  return true;
}

CompletedZeta completed_zeta(const FieldParams& fp, i64 N, i64 exact_bound) {
  require_minus_one(fp);
  const auto primes = arith::sieve_primes(std::max<i64>(N, 2));
  struct Pair {
    LocalFactor product;
    LocalFactor ideal;
  };
  auto pairs = parallel_map(primes.size(), [&](std::size_t k) {
    const i64 ell = primes[k];
    if (ell == 2 || ell == fp.q) return Pair{{ell, Poly()}, {ell, Poly()}};
    const GroupElement fr = frobenius_lift(ell, fp).candidates(fp).front();
    const Poly prod = one_dim_product(fr, fp) * artin_local_factor(ell, fp).inverse_poly;
    return Pair{{ell, prod}, {ell, ideal_poly(element_order(fr, fp), fp)}};
  });
  EulerProduct product;
  EulerProduct ideal;
  for (auto& pr : pairs) {
    product.factors.emplace(pr.product.prime, pr.product);
    ideal.factors.emplace(pr.ideal.prime, pr.ideal);
  }
  return {euler_expand(product, N, exact_bound), euler_expand(ideal, N, exact_bound)};
}

}  // namespace qcyclo
