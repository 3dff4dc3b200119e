#include "qcyclo/json_io.hpp"

#include "qcyclo/error.hpp"

namespace qcyclo::json_io {

json encode(const RootExp& z) { return {{"num", z.num()}, {"den", z.den()}}; }

json encode(const Mat2& m) {
  return {{"shape", m.is_diag() ? "diag" : "anti"}, {"entries", {encode(m.first()), encode(m.second())}}};
}

json encode_complex(std::complex<double> z) {
  // Keep -0 out of the output so equal values print identically.
  auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };
  return {clean(z.real()), clean(z.imag())};
}

json encode(const CycSum& c) {
  json terms = json::array();
  for (const auto& [root, coef] : c.canonical().terms()) terms.push_back({{"coef", coef}, {"root", encode(root)}});
  const auto z = encode_complex(c.to_complex());
  return {{"terms", terms}, {"re", z[0]}, {"im", z[1]}, {"text", c.to_string()}};
}

json encode(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) {
    if (const auto v = c.as_integer()) {
      coeffs.push_back(*v);
    } else {
      coeffs.push_back(encode(c));
    }
  }
  return {{"coeffs", coeffs}, {"degree", p.degree()}, {"text", p.to_string()}};
}

json encode(const GroupElement& x, const FieldParams& fp) {
  json exps = json::array();
  for (std::size_t i = 0; i < fp.rank(); ++i) exps.push_back(x.exps[i]);
  return {{"exps", exps}, {"eps", x.eps}, {"label", element_label(x, fp)}};
}

json encode(const Subgroup& s, const FieldParams& fp) {
  json elements = json::array();
  for (const auto& x : s.elements) elements.push_back(element_label(x, fp));
  return {{"generators", s.generator_labels}, {"order", s.size()}, {"elements", elements}};
}

json encode(const Irrep& rep, const FieldParams& fp) {
  json images = json::array();
  json eps;
  if (rep.dim == 1) {
    for (const auto& z : rep.scalar_images) images.push_back(encode(z));
    eps = encode(rep.scalar_eps);
  } else {
    for (const auto& m : rep.matrix_images) images.push_back(encode(m));
    eps = encode(rep.matrix_eps);
  }
  json gens = json::array();
  for (const auto& g : fp.generators) gens.push_back(g.short_name);
  return {{"dim", rep.dim},   {"family", rep.family}, {"indices", rep.indices}, {"label", rep.label()},
          {"generators", gens}, {"images", images},   {"eps", eps}};
}

json encode(const FrobeniusData& fd, const FieldParams& fp) {
  json cands = json::array();
  for (const auto& c : fd.candidates(fp)) cands.push_back(encode(c, fp));
  return {{"a", fd.a},
          {"b", fd.b},
          {"base", encode(fd.base, fp)},
          {"lift", fd.lift ? encode(*fd.lift, fp) : json(nullptr)},
          {"ambiguous", fd.ambiguous()},
          {"candidates", cands},
          {"u", fd.u ? json(*fd.u) : json(nullptr)}};
}

RootExp decode_root(const json& j) { return RootExp(j.at("num").get<i64>(), j.at("den").get<i64>()); }

Mat2 decode_mat2(const json& j) {
  const auto shape = j.at("shape").get<std::string>();
  const auto& e = j.at("entries");
  if (e.size() != 2) throw DomainError("matrix needs two entries");
  if (shape == "diag") return Mat2::diag(decode_root(e[0]), decode_root(e[1]));
  if (shape == "anti") return Mat2::anti(decode_root(e[0]), decode_root(e[1]));
  throw DomainError("unknown matrix shape '" + shape + "'");
}

Irrep decode_irrep(const json& j, const FieldParams& fp) {
  Irrep rep;
  rep.dim = j.at("dim").get<int>();
  rep.family = j.at("family").get<std::string>();
  rep.indices = j.at("indices").get<std::vector<i64>>();
  const auto& images = j.at("images");
  if (images.size() != fp.rank()) throw DomainError("image count does not match the number of generators");
  if (rep.dim == 1) {
    for (const auto& z : images) rep.scalar_images.push_back(decode_root(z));
    rep.scalar_eps = decode_root(j.at("eps"));
  } else if (rep.dim == 2) {
    for (const auto& m : images) rep.matrix_images.push_back(decode_mat2(m));
    rep.matrix_eps = decode_mat2(j.at("eps"));
  } else {
    throw DomainError("irreducible dimension must be 1 or 2");
  }
  return rep;
}

json conventions(const FieldParams& fp) {
  json gens = json::array();
  for (const auto& g : fp.generators) {
    gens.push_back({{"name", g.name},
                    {"short_name", g.short_name},
                    {"prime", g.prime},
                    {"order_in_G", g.base_order},
                    {"doubles", g.doubling == 1}});
  }
  return {{"primitive_root_p", fp.primitive_root_p == 0 ? json(nullptr) : json(fp.primitive_root_p)},
          {"primitive_root_q", fp.primitive_root_q == 0 ? json(nullptr) : json(fp.primitive_root_q)},
          {"root_of_unity", "zeta_den^num = exp(2 pi i num / den)"},
          {"generators", gens}};
}

json envelope(const std::string& command, const FieldParams* fp, json payload) {
  json params = nullptr;
  if (fp) params = {{"p", fp->p}, {"q", fp->q}, {"conventions", conventions(*fp)}};
  return {{"schema_version", schema_version}, {"command", command}, {"params", params}, {"payload", std::move(payload)}};
}

}  // namespace qcyclo::json_io
