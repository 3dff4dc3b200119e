#include "qcyclo/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qcyclo/error.hpp"

namespace qcyclo {

namespace {

i64 floor_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

std::complex<double> unit_root(i64 k, i64 n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

// Remainder of the length-n coefficient vector modulo Phi_n.
std::vector<i64> reduce_mod_phi(std::vector<i64> r, i64 n) {
  const auto& phi = cyclotomic_polynomial(n);
  const auto deg = static_cast<i64>(phi.size()) - 1;
  for (i64 k = static_cast<i64>(r.size()) - 1; k >= deg; --k) {
    const i64 c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (i64 i = 0; i <= deg; ++i) {
      r[static_cast<std::size_t>(k - deg + i)] -= c * phi[static_cast<std::size_t>(i)];
    }
  }
  r.resize(static_cast<std::size_t>(deg));
  return r;
}

}  // namespace

RootExp::RootExp(i64 num, i64 den) {
  if (den <= 0) throw DomainError("RootExp denominator must be positive");
  num = floor_mod(num, den);
  const i64 g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootExp RootExp::operator*(const RootExp& other) const {
  const i64 l = std::lcm(den_, other.den_);
  return {num_ * (l / den_) + other.num_ * (l / other.den_), l};
}

RootExp RootExp::pow(i64 k) const {
  return {static_cast<i64>(static_cast<__int128>(num_) * floor_mod(k, den_) % den_), den_};
}

std::complex<double> RootExp::to_complex() const { return unit_root(num_, den_); }

std::string RootExp::to_string() const {
  return "e(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

const std::vector<i64>& cyclotomic_polynomial(i64 n) {
  static std::mutex guard;
  static std::map<i64, std::vector<i64>> cache;
  {
    std::lock_guard lock(guard);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<i64> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (i64 d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<i64> quotient(poly.size() - dd, 0);
    for (std::size_t k = poly.size() - 1; k + 1 > dd; --k) {
      const i64 c = poly[k];
      quotient[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) poly[k - dd + i] -= c * divisor[i];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(guard);
  return cache.emplace(n, std::move(poly)).first->second;
}

CycSum::CycSum(i64 value) : n_(1), coeffs_{value} {}

CycSum::CycSum(const RootExp& root, i64 multiplicity)
    : n_(root.den()), coeffs_(static_cast<std::size_t>(root.den()), 0) {
  coeffs_[static_cast<std::size_t>(root.num())] = multiplicity;
}

CycSum CycSum::from_terms(const std::vector<std::pair<RootExp, i64>>& terms) {
  CycSum out;
  for (const auto& [root, mult] : terms) out += CycSum(root, mult);
  return out;
}

CycSum CycSum::lifted(i64 n) const {
  if (n == n_) return *this;
  std::vector<i64> c(static_cast<std::size_t>(n), 0);
  const i64 step = n / n_;
  for (i64 k = 0; k < n_; ++k) c[static_cast<std::size_t>(k * step)] = coeffs_[static_cast<std::size_t>(k)];
  return {n, std::move(c)};
}

CycSum CycSum::operator+(const CycSum& other) const {
  const i64 n = std::lcm(n_, other.n_);
  CycSum a = lifted(n);
  const CycSum b = other.lifted(n);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
  return a;
}

CycSum CycSum::operator-() const {
  CycSum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycSum CycSum::operator-(const CycSum& other) const { return *this + (-other); }

CycSum CycSum::operator*(const CycSum& other) const {
  const i64 n = std::lcm(n_, other.n_);
  const CycSum a = lifted(n);
  const CycSum b = other.lifted(n);
  std::vector<i64> c(static_cast<std::size_t>(n), 0);
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i) {
    const i64 ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < un; ++j) {
      const i64 bj = b.coeffs_[j];
      if (bj == 0) continue;
      std::size_t k = i + j;
      if (k >= un) k -= un;
      c[k] += ai * bj;
    }
  }
  return {n, std::move(c)};
}

CycSum CycSum::operator*(const RootExp& root) const {
  const i64 n = std::lcm(n_, root.den());
  const CycSum a = lifted(n);
  const i64 shift = root.num() * (n / root.den());
  std::vector<i64> c(static_cast<std::size_t>(n), 0);
  for (i64 k = 0; k < n; ++k) {
    c[static_cast<std::size_t>((k + shift) % n)] = a.coeffs_[static_cast<std::size_t>(k)];
  }
  return {n, std::move(c)};
}

CycSum CycSum::pow(unsigned k) const {
  CycSum result(1);
  CycSum base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    base *= base;
    k >>= 1U;
  }
  return result;
}

CycSum CycSum::conj() const {
  std::vector<i64> c(coeffs_.size(), 0);
  for (i64 k = 0; k < n_; ++k) {
    c[static_cast<std::size_t>(floor_mod(-k, n_))] = coeffs_[static_cast<std::size_t>(k)];
  }
  return {n_, std::move(c)};
}

bool CycSum::is_zero() const {
  bool all_zero = true;
  for (i64 c : coeffs_) all_zero = all_zero && c == 0;
  if (all_zero) return true;
  for (i64 c : reduce_mod_phi(coeffs_, n_)) {
    if (c != 0) return false;
  }
  return true;
}

CycSum CycSum::reduced() const {
  auto r = reduce_mod_phi(coeffs_, n_);
  r.resize(static_cast<std::size_t>(n_), 0);
  return {n_, std::move(r)};
}

namespace {

// Integer coordinates of target in the span of the columns, if it lies there:
// elimination in long double, then rounding; the caller verifies exactly.
std::optional<std::vector<i64>> solve_integer(std::vector<std::vector<long double>> cols,
                                              const std::vector<i64>& target) {
  const std::size_t rows = target.size();
  const std::size_t n = cols.size();
  std::vector<std::vector<long double>> a(rows, std::vector<long double>(n + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    a[i][n] = static_cast<long double>(target[i]);
  }
  std::vector<std::size_t> pivot_row(n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t best = r;
    for (std::size_t i = r; i < rows; ++i) {
      if (std::fabs(a[i][j]) > std::fabs(a[best][j])) best = i;
    }
    if (best >= rows || std::fabs(a[best][j]) < 1e-9L) return std::nullopt;  // columns are independent
    std::swap(a[r], a[best]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const long double f = a[i][j] / a[r][j];
      for (std::size_t k = j; k <= n; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_row[j] = r++;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (std::fabs(a[i][n]) > 1e-6L) return std::nullopt;
  }
  std::vector<i64> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    const long double v = a[pivot_row[j]][n] / a[pivot_row[j]][j];
    x[j] = static_cast<i64>(std::llround(v));
    if (std::fabs(v - static_cast<long double>(x[j])) > 1e-6L) return std::nullopt;
  }
  return x;
}

}  // namespace

CycSum CycSum::canonical() const {
  const auto r = reduce_mod_phi(coeffs_, n_);
  if (std::all_of(r.begin(), r.end(), [](i64 c) { return c == 0; })) return CycSum(0);
  // Smallest conductor m (not 2 mod 4) whose field holds the number.
  std::optional<CycSum> over_m;
  for (i64 m = 1; m <= n_ && !over_m; ++m) {
    if (n_ % m != 0 || m % 4 == 2) continue;
    if (m == n_) {
      over_m = reduced();
      break;
    }
    const auto deg = static_cast<std::size_t>(cyclotomic_polynomial(m).size() - 1);
    std::vector<std::vector<long double>> cols;
    for (std::size_t k = 0; k < deg; ++k) {
      std::vector<i64> e(static_cast<std::size_t>(n_), 0);
      e[k * static_cast<std::size_t>(n_ / m)] = 1;
      const auto red = reduce_mod_phi(std::move(e), n_);
      cols.emplace_back(red.begin(), red.end());
    }
    const auto x = solve_integer(std::move(cols), r);
    if (!x) continue;
    std::vector<i64> c(static_cast<std::size_t>(m), 0);
    std::copy(x->begin(), x->end(), c.begin());
    CycSum candidate(m, std::move(c));
    if (candidate == *this) over_m = candidate;
  }
  if (!over_m) throw InconsistencyError("no canonical form found for a cyclotomic sum");
  const i64 m = over_m->n_;
  const i64 roots = m % 2 == 1 ? 2 * m : m;

  // c * zeta with c > 0 whenever the number is a multiple of one root.
  for (i64 k = 0; k < roots; ++k) {
    const RootExp z(k, roots);
    if (const auto c = (*over_m * z.inverse()).as_integer(); c && *c > 0) return CycSum(z, *c);
  }
  if (m % 2 == 0) return *over_m;
  // Q(zeta_m) = Q(zeta_2m): keep whichever reduced basis needs fewer terms.
  const CycSum over_2m = over_m->lifted(2 * m).reduced();
  return over_2m.terms().size() < over_m->terms().size() ? over_2m : *over_m;
}

std::optional<i64> CycSum::as_integer() const {
  const auto r = reduce_mod_phi(coeffs_, n_);
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  return r.empty() ? 0 : r[0];
}

std::vector<std::pair<RootExp, i64>> CycSum::terms() const {
  std::map<RootExp, i64> acc;
  for (i64 k = 0; k < n_; ++k) {
    const i64 c = coeffs_[static_cast<std::size_t>(k)];
    if (c != 0) acc[RootExp(k, n_)] += c;
  }
  return {acc.begin(), acc.end()};
}

std::complex<double> CycSum::to_complex() const {
  std::complex<double> sum = 0.0;
  for (i64 k = 0; k < n_; ++k) {
    const i64 c = coeffs_[static_cast<std::size_t>(k)];
    if (c != 0) sum += static_cast<double>(c) * unit_root(k, n_);
  }
  return sum;
}

std::string CycSum::to_string() const {
  if (auto v = as_integer()) return std::to_string(*v);
  std::ostringstream out;
  bool first = true;
  for (const auto& [root, mult] : canonical().terms()) {
    i64 m = mult;
    if (first) {
      if (m < 0) out << "-";
    } else {
      out << (m < 0 ? " - " : " + ");
    }
    m = m < 0 ? -m : m;
    if (root.is_one()) {
      out << m;
    } else {
      if (m != 1) out << m << "*";
      out << root.to_string();
    }
    first = false;
  }
  return out.str();
}

}  // namespace qcyclo
