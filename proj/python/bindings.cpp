#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcyclo/arith.hpp"
#include "qcyclo/cli.hpp"
#include "qcyclo/error.hpp"
#include "qcyclo/json_io.hpp"
#include "qcyclo/units.hpp"

namespace py = pybind11;
using namespace qcyclo;
using json_io::json;

namespace {

// nlohmann -> Python through the json module keeps one encoding for both surfaces.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<std::complex<double>> complex_coeffs(const Poly& p) { return p.to_complex(); }

py::dict poly_dict(const Poly& p) {
  py::dict d = to_py(json_io::encode(p));
  d["complex"] = complex_coeffs(p);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Galois groups, representations and Artin L-functions of primary quasi-cyclotomic fields";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  m.def("classify", [](i64 p, i64 q) { return to_string(make_params(p, q).case_tag); }, py::arg("p"), py::arg("q"),
        "Case tag of the pair (p, q).");

  m.def(
      "params",
      [](i64 p, i64 q) {
        const auto fp = make_params(p, q);
        py::dict d = to_py(json_io::conventions(fp));
        d["p"] = fp.p;
        d["q"] = fp.q;
        d["case"] = to_string(fp.case_tag);
        d["order_G"] = fp.order_G();
        d["order"] = fp.order();
        d["conductor"] = fp.conductor;
        return d;
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "elements",
      [](i64 p, i64 q) {
        const auto fp = make_params(p, q);
        std::vector<std::string> out;
        for (const auto& x : enumerate_elements(fp)) out.push_back(element_label(x, fp));
        return out;
      },
      py::arg("p"), py::arg("q"), "Normal-form labels of every element, in enumeration order.");

  m.def(
      "invariant_factors_of_N",
      [](i64 p, i64 q) {
        const auto fp = make_params(p, q);
        return invariant_factors(subgroup_N(fp).elements, fp);
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "irreps",
      [](i64 p, i64 q) {
        const auto fp = make_params(p, q);
        json list = json::array();
        for (const auto& rep : enumerate_irreps(fp)) list.push_back(json_io::encode(rep, fp));
        return to_py(list);
      },
      py::arg("p"), py::arg("q"), "Every irreducible representation as a dict of generator images.");

  m.def(
      "verify_irrep",
      [](i64 p, i64 q, const py::object& rep) {
        const auto fp = make_params(p, q);
        return verify_homomorphism(json_io::decode_irrep(from_py(rep), fp), fp);
      },
      py::arg("p"), py::arg("q"), py::arg("rep"), "Checks the defining relations on a representation dict.");

  m.def(
      "character_table",
      [](i64 p, i64 q) {
        const auto fp = make_params(p, q);
        const auto classes = conjugacy_classes(fp);
        std::vector<std::vector<std::complex<double>>> rows;
        for (const auto& rep : enumerate_irreps(fp)) {
          std::vector<std::complex<double>> row;
          for (const auto& cls : classes) row.push_back(character(rep, cls.front(), fp).to_complex());
          rows.push_back(std::move(row));
        }
        return rows;
      },
      py::arg("p"), py::arg("q"), "Rows follow irreps(), columns follow the conjugacy classes.");

  m.def(
      "frobenius",
      [](i64 q, i64 ell) {
        const auto fp = make_params(-1, q);
        py::dict d;
        d["decomposition"] = to_string(decomposition_at(ell, fp));
        d["frobenius"] = decomposition_at(ell, fp) == Decomposition::ramified
                             ? py::object(py::none())
                             : to_py(json_io::encode(frobenius_lift(ell, fp), fp));
        return d;
      },
      py::arg("q"), py::arg("ell"), "Decomposition and Frobenius lift at ell for p = -1.");

  m.def("lfunction_indices", [](i64 q) { return lfunction_indices(make_params(-1, q)); }, py::arg("q"));

  m.def(
      "local_factor",
      [](i64 q, i64 j, i64 ell, const std::string& method) {
        const auto fp = make_params(-1, q);
        if (method == "explicit") return poly_dict(explicit_local_factor(j, ell, fp).inverse_poly);
        if (method == "generic") return poly_dict(generic_local_factor(irrep_for_index(j, fp), ell, fp).inverse_poly);
        throw DomainError("method must be 'explicit' or 'generic'");
      },
      py::arg("q"), py::arg("j"), py::arg("ell"), py::arg("method") = "generic",
      "Inverse polynomial P with L_ell(rho_j, s) = 1/P(ell^-s).");

  m.def(
      "lfunction_coefficients",
      [](i64 q, i64 j, i64 n) {
        const auto fp = make_params(-1, q);
        const auto c = euler_expand(lfunction_product(irrep_for_index(j, fp), n, fp), n);
        return std::vector<std::complex<double>>(c.a.begin() + 1, c.a.end());
      },
      py::arg("q"), py::arg("j"), py::arg("n"), "a_1 .. a_n of L(rho_j, s).");

  m.def(
      "zeta_ratio_coefficients",
      [](i64 q, i64 n) {
        const auto ap = artin_product(make_params(-1, q), n, n);
        return std::vector<std::complex<double>>(ap.coeffs.a.begin() + 1, ap.coeffs.a.end());
      },
      py::arg("q"), py::arg("n"), "a_1 .. a_n of zeta_{K~}/zeta_K.");

  m.def(
      "closed_form_report",
      [](i64 q, i64 bound) {
        py::list rows;
        for (const auto& r : corollary_report(make_params(-1, q), bound)) {
          py::dict d;
          d["ell"] = r.ell;
          d["subcase"] = r.subcase.label;
          d["known_exception"] = r.subcase.known_exception;
          d["direct"] = r.direct.to_string();
          d["printed"] = r.printed.to_string();
          d["equal"] = r.equal;
          rows.append(d);
        }
        return rows;
      },
      py::arg("q"), py::arg("bound"));

  m.def("unramified_zeta_identity", [](i64 q, i64 ell) { return unramified_zeta_identity(ell, make_params(-1, q)); },
        py::arg("q"), py::arg("ell"));

  m.def(
      "unit_value",
      [](i64 p, i64 q, bool p2_interpretation) {
        const auto u = eval_unit(make_params(p, q), Precision::extended, p2_interpretation);
        return std::complex<double>(static_cast<double>(u.real_part), static_cast<double>(u.imag_part));
      },
      py::arg("p"), py::arg("q"), py::arg("p2_interpretation") = false);

  m.def("in_P0", &arith::in_P0, py::arg("ell"), "True iff ell = A^2 + 64 B^2.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit code, stdout, stderr).");
}
