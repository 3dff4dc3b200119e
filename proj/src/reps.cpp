#include "qcyclo/reps.hpp"

#include <deque>

#include "qcyclo/error.hpp"

namespace qcyclo {

namespace {

RootExp zeta(i64 n, i64 k) { return RootExp::zeta(n, k); }

Mat2 signed_diag(RootExp z) { return Mat2::diag(z, z.negated()); }

Mat2 twist_anti(RootExp z) { return Mat2::anti(z, RootExp::one()); }

Irrep two_dim(const FieldParams& fp, std::vector<i64> indices, std::vector<Mat2> images) {
  Irrep r;
  r.dim = 2;
  r.family = two_dim_family(fp);
  r.indices = std::move(indices);
  r.matrix_images = std::move(images);
  r.matrix_eps = Mat2::scalar(RootExp::minus_one());
  return r;
}

template <class T>
T word_image(const std::vector<T>& images, const T& eps_image, const GroupElement& x, const FieldParams& fp) {
  T result{};
  for (std::size_t g = 0; g < fp.rank(); ++g) {
    if (x.exps[g] != 0) result = result * images[g].pow(x.exps[g]);
  }
  if (x.eps) result = result * eps_image;
  return result;
}

template <class T>
bool relations_hold(const std::vector<T>& images, const T& eps_image, const FieldParams& fp) {
  const T one{};
  if (images.size() != fp.rank()) return false;
  if (!(eps_image * eps_image == one)) return false;
  for (std::size_t g = 0; g < fp.rank(); ++g) {
    const auto& info = fp.generators[g];
    const T expected = info.doubling ? eps_image : one;
    if (!(images[g].pow(info.base_order) == expected)) return false;
    if (!(images[g] * eps_image == eps_image * images[g])) return false;
  }
  for (std::size_t g = 0; g < fp.rank(); ++g) {
    for (std::size_t h = g + 1; h < fp.rank(); ++h) {
      const T lhs = images[g] * images[h];
      const bool twisted = g == fp.twist_p && h == fp.twist_q;
      const T rhs = twisted ? images[h] * images[g] * eps_image : images[h] * images[g];
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

std::string join(const std::vector<i64>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string two_dim_family(const FieldParams& fp) {
  const i64 p = fp.p;
  switch (fp.case_tag) {
    case CaseTag::A: return p == -1 ? "A_minus_one" : p == 2 ? "A_two" : "A_odd";
    case CaseTag::B_q_doubles:
      if (p == -1) return fp.q == 2 ? "B_minus_one_two" : "B_minus_one";
      return p == 2 ? "B_two" : "B_odd";
    case CaseTag::B_p_doubles: return "B_p_doubles";
    case CaseTag::C_first: return "C_first";
    case CaseTag::C_second: return "C_second";
  }
  return "?";
}

std::string Irrep::label() const { return family + "[" + join(indices) + "]"; }

std::vector<Irrep> enumerate_one_dim(const FieldParams& fp) {
  std::vector<Irrep> out;
  std::vector<i64> k(fp.rank(), 0);
  while (true) {
    Irrep r;
    r.family = "one_dim";
    r.indices = k;
    for (std::size_t g = 0; g < fp.rank(); ++g) r.scalar_images.push_back(zeta(fp.generators[g].base_order, k[g]));
    out.push_back(std::move(r));
    std::size_t g = fp.rank();
    while (g > 0) {
      --g;
      if (++k[g] < fp.generators[g].base_order) break;
      k[g] = 0;
      if (g == 0) return out;
    }
  }
}

std::vector<Irrep> enumerate_two_dim(const FieldParams& fp) {
  const i64 p = fp.p;
  const i64 q = fp.q;
  const Mat2 sign = Mat2::diag(RootExp::one(), RootExp::minus_one());
  std::vector<Irrep> out;
  switch (fp.case_tag) {
    case CaseTag::A:
      if (p == -1) {
        for (i64 j = 0; j < (q - 1) / 2; ++j) out.push_back(two_dim(fp, {j}, {sign, twist_anti(zeta(q - 1, 2 * j))}));
      } else if (p == 2) {
        for (i64 i = 0; i < 2; ++i) {
          for (i64 j = 0; j < (q - 1) / 2; ++j) {
            out.push_back(two_dim(fp, {i, j}, {Mat2::scalar(zeta(2, i)), sign, twist_anti(zeta(q - 1, 2 * j))}));
          }
        }
      } else {
        for (i64 i = 0; i < (p - 1) / 2; ++i) {
          for (i64 j = 0; j < (q - 1) / 2; ++j) {
            out.push_back(two_dim(fp, {i, j}, {signed_diag(zeta(p - 1, i)), twist_anti(zeta(q - 1, 2 * j))}));
          }
        }
      }
      break;
    case CaseTag::B_q_doubles:
      if (p == -1 && q == 2) {
        out.push_back(two_dim(fp, {0}, {sign, twist_anti(RootExp::minus_one())}));
      } else if (p == -1) {
        for (i64 j = 1; j < q - 1; j += 2) out.push_back(two_dim(fp, {j}, {sign, twist_anti(zeta(q - 1, j))}));
      } else if (p == 2) {
        for (i64 i = 0; i < 2; ++i) {
          for (i64 j = 1; j < q - 1; j += 2) {
            out.push_back(two_dim(fp, {i, j}, {Mat2::scalar(zeta(2, i)), sign, twist_anti(zeta(q - 1, j))}));
          }
        }
      } else {
        for (i64 i = 0; i < (p - 1) / 2; ++i) {
          for (i64 j = 1; j < q - 1; j += 2) {
            out.push_back(two_dim(fp, {i, j}, {signed_diag(zeta(p - 1, i)), twist_anti(zeta(q - 1, j))}));
          }
        }
      }
      break;
    case CaseTag::B_p_doubles:
      for (i64 i = 1; i < p - 1; i += 2) {
        for (i64 j = 0; j < (q - 1) / 2; ++j) {
          out.push_back(two_dim(fp, {i, j}, {twist_anti(zeta(p - 1, i)), signed_diag(zeta(q - 1, j))}));
        }
      }
      break;
    case CaseTag::C_first:
    case CaseTag::C_second: {
      const auto c = case_c_smith(fp);
      // Roles: "major" enters N squared and acts antidiagonally.
      const i64 major = c.second_subcase ? q : p;
      const i64 minor = c.second_subcase ? p : q;
      for (i64 i = 0; i < c.d; ++i) {
        for (i64 j = 1; j < c.s * (minor - 1); j += 2) {
          const Mat2 on_major = twist_anti(zeta(major - 1, 2 * c.s * c.u * i - j));
          const Mat2 on_minor = signed_diag(zeta(2 * (minor - 1), 2 * c.t * c.v * i + j));
          if (c.second_subcase) {
            out.push_back(two_dim(fp, {i, j}, {on_minor, on_major}));
          } else {
            out.push_back(two_dim(fp, {i, j}, {on_major, on_minor}));
          }
        }
      }
      break;
    }
  }
  return out;
}

std::vector<Irrep> enumerate_irreps(const FieldParams& fp) {
  auto out = enumerate_one_dim(fp);
  auto two = enumerate_two_dim(fp);
  out.insert(out.end(), std::make_move_iterator(two.begin()), std::make_move_iterator(two.end()));
  return out;
}

RootExp scalar_image(const Irrep& rep, const GroupElement& x, const FieldParams& fp) {
  if (rep.dim != 1) throw DomainError("scalar_image of a two-dimensional representation");
  return word_image(rep.scalar_images, rep.scalar_eps, x, fp);
}

Mat2 matrix_image(const Irrep& rep, const GroupElement& x, const FieldParams& fp) {
  if (rep.dim != 2) throw DomainError("matrix_image of a one-dimensional representation");
  return word_image(rep.matrix_images, rep.matrix_eps, x, fp);
}

CycSum character(const Irrep& rep, const GroupElement& x, const FieldParams& fp) {
  if (rep.dim == 1) return CycSum(scalar_image(rep, x, fp));
  return matrix_image(rep, x, fp).trace();
}

std::vector<CycSum> character_values(const Irrep& rep, const FieldParams& fp) {
  std::vector<CycSum> out;
  for (const auto& x : enumerate_elements(fp)) out.push_back(character(rep, x, fp));
  return out;
}

std::complex<double> inner_product(const std::vector<std::complex<double>>& chi1,
                                   const std::vector<std::complex<double>>& chi2) {
  if (chi1.size() != chi2.size() || chi1.empty()) throw DomainError("character vectors of different groups");
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < chi1.size(); ++k) sum += chi1[k] * std::conj(chi2[k]);
  return sum / static_cast<double>(chi1.size());
}

std::complex<double> inner_product(const std::vector<CycSum>& chi1, const std::vector<CycSum>& chi2) {
  std::vector<std::complex<double>> a;
  std::vector<std::complex<double>> b;
  for (const auto& c : chi1) a.push_back(c.to_complex());
  for (const auto& c : chi2) b.push_back(c.to_complex());
  return inner_product(a, b);
}

bool verify_homomorphism(const Irrep& rep, const FieldParams& fp) {
  if (rep.dim == 1) return relations_hold(rep.scalar_images, rep.scalar_eps, fp);
  return relations_hold(rep.matrix_images, rep.matrix_eps, fp);
}

RootExp NCharacter::operator()(const GroupElement& x, const FieldParams& fp) const {
  const auto& v = table[element_index(x, fp)];
  if (!v) throw DomainError("N-character evaluated outside N");
  return *v;
}

NCharacter make_n_character(const IndexTwoSubgroup& n, std::vector<GroupElement> generators,
                            std::vector<i64> indices, std::vector<RootExp> generator_values,
                            const FieldParams& fp) {
  if (generators.size() != generator_values.size()) throw DomainError("one value per generator required");
  NCharacter chi;
  chi.indices = std::move(indices);
  chi.generators = std::move(generators);
  chi.generator_values = std::move(generator_values);
  chi.table.assign(static_cast<std::size_t>(fp.order()), std::nullopt);
  for (const auto& g : chi.generators) {
    if (!n.contains(g, fp)) throw DomainError("generator outside N");
  }
  chi.table[element_index(identity_element(), fp)] = RootExp::one();
  std::deque<GroupElement> frontier{identity_element()};
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const GroupElement x = frontier.front();
    frontier.pop_front();
    const RootExp vx = *chi.table[element_index(x, fp)];
    for (std::size_t k = 0; k < chi.generators.size(); ++k) {
      const GroupElement y = multiply(x, chi.generators[k], fp);
      const RootExp vy = vx * chi.generator_values[k];
      auto& slot = chi.table[element_index(y, fp)];
      if (!slot) {
        slot = vy;
        ++reached;
        frontier.push_back(y);
      } else if (*slot != vy) {
        throw InconsistencyError("N-character values violate a relation of N at " + element_label(y, fp));
      }
    }
  }
  if (reached != n.size()) throw InconsistencyError("N-character generators do not generate N");
  return chi;
}

std::vector<NCharacter> enumerate_n_characters(const IndexTwoSubgroup& n, const FieldParams& fp) {
  std::vector<NCharacter> out;
  const i64 np = fp.generators[fp.twist_p].base_order;
  const i64 nq = fp.generators[fp.twist_q].base_order;
  const bool with_m1 = fp.p == 2;
  switch (fp.case_tag) {
    case CaseTag::A:
      for (i64 m = 0; m < (with_m1 ? 2 : 1); ++m) {
        for (i64 i = 0; i < np; ++i) {
          for (i64 j = 0; j < nq / 2; ++j) {
            for (i64 k = 0; k < 2; ++k) {
              std::vector<RootExp> values{zeta(np, i), zeta(nq, 2 * j), zeta(2, k)};
              std::vector<i64> idx{i, j, k};
              if (with_m1) {
                values.insert(values.begin(), zeta(2, m));
                idx.insert(idx.begin(), m);
              }
              out.push_back(make_n_character(n, n.generators, idx, values, fp));
            }
          }
        }
      }
      break;
    case CaseTag::B_q_doubles:
    case CaseTag::B_p_doubles:
      for (i64 m = 0; m < (with_m1 ? 2 : 1); ++m) {
        for (i64 i = 0; i < np; ++i) {
          for (i64 j = 0; j < nq; ++j) {
            std::vector<RootExp> values{zeta(np, i), zeta(nq, j)};
            std::vector<i64> idx{i, j};
            if (with_m1) {
              values.insert(values.begin(), zeta(2, m));
              idx.insert(idx.begin(), m);
            }
            out.push_back(make_n_character(n, n.generators, idx, values, fp));
          }
        }
      }
      break;
    case CaseTag::C_first:
    case CaseTag::C_second: {
      const auto c = case_c_smith(fp);
      const i64 minor = c.second_subcase ? fp.p : fp.q;
      const i64 mu_order = 2 * c.s * (minor - 1);
      for (i64 i = 0; i < c.d; ++i) {
        for (i64 j = 0; j < mu_order; ++j) {
          out.push_back(make_n_character(n, {c.tau, c.mu}, {i, j}, {zeta(c.d, i), zeta(mu_order, j)}, fp));
        }
      }
      break;
    }
  }
  return out;
}

bool is_irreducible(const NCharacter& chi, const IndexTwoSubgroup& n, const FieldParams& fp) {
  const GroupElement s = n.coset_rep;
  const GroupElement s_inv = inverse(s, fp);
  for (const auto& g : n.generators) {
    if (chi(g, fp) != chi(multiply(multiply(s_inv, g, fp), s, fp), fp)) return true;
  }
  return false;
}

InducedRep induce(const NCharacter& chi, const IndexTwoSubgroup& n, const FieldParams& fp) {
  const GroupElement s = n.coset_rep;
  const GroupElement s_inv = inverse(s, fp);
  InducedRep rep;
  for (const auto& x : enumerate_elements(fp)) {
    if (n.contains(x, fp)) {
      rep.images.push_back(Mat2::diag(chi(x, fp), chi(multiply(multiply(s_inv, x, fp), s, fp), fp)));
    } else {
      rep.images.push_back(Mat2::anti(chi(multiply(x, s, fp), fp), chi(multiply(s_inv, x, fp), fp)));
    }
  }
  return rep;
}

Irrep InducedRep::as_irrep(const FieldParams& fp) const {
  Irrep r;
  r.dim = 2;
  r.family = "induced";
  for (std::size_t g = 0; g < fp.rank(); ++g) r.matrix_images.push_back(images[element_index(generator(fp, g), fp)]);
  r.matrix_eps = images[element_index(epsilon_element(), fp)];
  return r;
}

std::vector<CycSum> InducedRep::character() const {
  std::vector<CycSum> out;
  out.reserve(images.size());
  for (const auto& m : images) out.push_back(m.trace());
  return out;
}

}  // namespace qcyclo
