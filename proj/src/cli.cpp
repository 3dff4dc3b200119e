#include "qcyclo/cli.hpp"

#include <cstdio>

#include "CLI11.hpp"
#include "qcyclo/error.hpp"
#include "qcyclo/json_io.hpp"
#include "qcyclo/units.hpp"

namespace qcyclo::cli {

namespace {

using json_io::encode;
using json_io::json;

constexpr const char* kRootHelp =
    "Roots of unity are printed as {\"num\": k, \"den\": n}, meaning zeta_n^k = exp(2 pi i k/n).";

struct Options {
  i64 p = 0;
  i64 q = 0;
  i64 ell = 0;
  i64 j = 0;
  i64 prime_bound = 100;
  i64 coeffs = 100;
  std::string format = "json";
  std::string precision = "extended";
  bool p2_interpretation = false;
  bool seed_conventions = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string fixed(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json classify_payload(const FieldParams& fp) {
  json doubling = json::object();
  for (const auto& g : fp.generators) doubling[g.short_name] = g.doubling == 1;
  return {{"case", to_string(fp.case_tag)},
          {"order_G", fp.order_G()},
          {"order_G_tilde", fp.order()},
          {"conductor", fp.conductor},
          {"p_star", fp.p_star},
          {"q_star", fp.q_star},
          {"doubling", doubling}};
}

json smith_payload(const CaseCSmithData& c, const FieldParams& fp) {
  auto mat = [](const IntMat2& m) { return json{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; };
  return {{"second_subcase", c.second_subcase},
          {"d", c.d},
          {"s", c.s},
          {"t", c.t},
          {"u", c.u},
          {"v", c.v},
          {"A", mat(c.A)},
          {"P", mat(c.P)},
          {"Q", mat(c.Q)},
          {"B", mat(c.B)},
          {"tau", encode(c.tau, fp)},
          {"mu", encode(c.mu, fp)},
          {"order_tau", element_order(c.tau, fp)},
          {"order_mu", element_order(c.mu, fp)}};
}

json group_payload(const FieldParams& fp) {
  const auto n = subgroup_N(fp);
  json payload = {{"order", fp.order()},
                  {"order_G", fp.order_G()},
                  {"class_count", conjugacy_classes(fp).size()},
                  {"N",
                   {{"generators", n.generator_labels},
                    {"order", n.size()},
                    {"coset_representative", n.coset_rep_label},
                    {"invariant_factors", invariant_factors(n.elements, fp)},
                    {"stated_cyclic_orders", expected_N_cyclic_orders(fp)}}},
                  {"case_c_smith", nullptr}};
  if (fp.case_tag == CaseTag::C_first || fp.case_tag == CaseTag::C_second) {
    payload["case_c_smith"] = smith_payload(case_c_smith(fp), fp);
  }
  return payload;
}

json reps_payload(const FieldParams& fp) {
  json list = json::array();
  std::size_t one = 0;
  std::size_t two = 0;
  for (const auto& rep : enumerate_irreps(fp)) {
    list.push_back(encode(rep, fp));
    (rep.dim == 1 ? one : two)++;
  }
  return {{"one_dim_count", one}, {"two_dim_count", two}, {"irreps", list}};
}

void char_table_csv(const FieldParams& fp, std::ostream& out) {
  const auto classes = conjugacy_classes(fp);
  out << "irrep";
  for (const auto& cls : classes) out << "," << csv_quote(element_label(cls.front(), fp));
  out << "\n";
  for (const auto& rep : enumerate_irreps(fp)) {
    out << csv_quote(rep.label());
    for (const auto& cls : classes) {
      const CycSum v = character(rep, cls.front(), fp).reduced();
      const auto z = v.to_complex();
      out << "," << csv_quote(v.to_string() + " (" + fixed(z.real()) + ", " + fixed(z.imag()) + ")");
    }
    out << "\n";
  }
}

json frobenius_payload(i64 ell, const FieldParams& fp) {
  const Decomposition d = decomposition_at(ell, fp);
  json inertia = json::array();
  for (const auto& s : inertia_lift(ell, fp)) inertia.push_back(encode(s, fp));
  json payload = {{"ell", ell}, {"decomposition", to_string(d)}, {"inertia_candidates", inertia}, {"frobenius", nullptr}};
  if (d != Decomposition::ramified) payload["frobenius"] = encode(frobenius_lift(ell, fp), fp);
  return payload;
}

json coefficient_list(const DirichletCoeffs& c) {
  json list = json::array();
  for (i64 n = 1; n <= c.N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    json entry = {{"n", n}, {"value", json_io::encode_complex(c.a[un])}};
    if (c.exact) {
      const auto& e = (*c.exact)[un];
      entry["exact"] = e.as_integer() ? json(*e.as_integer()) : encode(e);
    }
    list.push_back(entry);
  }
  return list;
}

json factor_list(const EulerProduct& ep, i64 bound) {
  json list = json::array();
  for (const auto& [ell, lf] : ep.factors) {
    if (ell > bound) break;
    list.push_back({{"ell", ell}, {"inverse_poly", encode(lf.inverse_poly)}});
  }
  return list;
}

void require_bounds(const Options& o) {
  if (o.prime_bound < 2) throw DomainError("--prime-bound must be at least 2");
  if (o.coeffs < 1) throw DomainError("--coeffs must be at least 1");
  if (o.coeffs > o.prime_bound) throw DomainError("--coeffs may not exceed --prime-bound (a_n needs every factor at primes <= n)");
}

int lfactor(const Options& o, const FieldParams& fp, std::ostream& out, std::ostream& err) {
  const auto ex = explicit_local_factor(o.j, o.ell, fp);
  const auto gen = generic_local_factor(irrep_for_index(o.j, fp), o.ell, fp);
  const bool equal = ex.inverse_poly == gen.inverse_poly;
  emit(out, json_io::envelope("lfactor", &fp,
                              {{"j", o.j},
                               {"ell", o.ell},
                               {"inverse_poly", encode(ex.inverse_poly)["coeffs"]},
                               {"explicit", encode(ex.inverse_poly)},
                               {"generic", encode(gen.inverse_poly)},
                               {"equal", equal}}));
  if (!equal) {
    err << "error: explicit and generic local factors disagree at ell = " << o.ell << "\n";
    return exit_inconsistent;
  }
  return exit_ok;
}

void lfunction(const Options& o, const FieldParams& fp, std::ostream& out) {
  require_bounds(o);
  const Irrep rep = irrep_for_index(o.j, fp);
  const auto ep = lfunction_product(rep, o.prime_bound, fp);
  const auto coeffs = euler_expand(ep, o.coeffs);
  if (o.format == "csv") {
    out << "n,re,im,exact\n";
    for (i64 n = 1; n <= o.coeffs; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const std::string exact = coeffs.exact ? (*coeffs.exact)[un].to_string() : "";
      out << n << "," << fixed(coeffs.a[un].real()) << "," << fixed(coeffs.a[un].imag()) << "," << csv_quote(exact) << "\n";
    }
    return;
  }
  emit(out, json_io::envelope("lfunction", &fp,
                              {{"j", o.j},
                               {"irrep", rep.label()},
                               {"prime_bound", o.prime_bound},
                               {"factors", factor_list(ep, o.prime_bound)},
                               {"coefficients", coefficient_list(coeffs)}}));
}

void zeta_ratio(const Options& o, const FieldParams& fp, std::ostream& out) {
  require_bounds(o);
  const auto ap = artin_product(fp, o.prime_bound, o.coeffs);
  json report = nullptr;
  if (fp.q != 2) {
    report = json::array();
    for (const auto& r : corollary_report(fp, o.prime_bound)) {
      report.push_back({{"ell", r.ell},
                        {"subcase", r.subcase.label},
                        {"known_exception", r.subcase.known_exception},
                        {"direct", encode(r.direct)},
                        {"printed", encode(r.printed)},
                        {"equal", r.equal}});
    }
  }
  emit(out, json_io::envelope("zeta-ratio", &fp,
                              {{"prime_bound", o.prime_bound},
                               {"factors", factor_list(ap.product, o.prime_bound)},
                               {"closed_form_comparison", report},
                               {"coefficients", coefficient_list(ap.coeffs)}}));
}

json unit_payload(const Options& o, const FieldParams& fp) {
  if (o.precision != "double" && o.precision != "extended") throw DomainError("--precision must be double or extended");
  const Precision prec = o.precision == "double" ? Precision::double_precision : Precision::extended;
  const UnitValue u = eval_unit(fp, prec, o.p2_interpretation);
  auto str = [](long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.18Lg", x);
    return std::string(buf);
  };
  return {{"real", static_cast<double>(u.real_part)},
          {"imag", static_cast<double>(u.imag_part)},
          {"real_text", str(u.real_part)},
          {"imag_text", str(u.imag_part)},
          {"precision_bits", u.precision_bits},
          {"p2_interpretation", o.p2_interpretation}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string("Galois groups, irreducible representations and Artin L-functions of primary "
                           "quasi-cyclotomic fields.\n") + kRootHelp,
               "qcyclo"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_flag("--seed-conventions", o.seed_conventions, "Print the chosen primitive roots and generators for -p/-q");
  auto* opt_p = app.add_option("-p", o.p, "p in S = {-1} U primes");
  auto* opt_q = app.add_option("-q", o.q, "q in S with p < q");
  auto* classify = app.add_subcommand("classify", "Case tag, group orders and doubling flags");
  auto* group = app.add_subcommand("group", "Index-two subgroup N, invariant factors, Smith data in case C");
  auto* reps = app.add_subcommand("reps", "All irreducible representations (JSON)");
  auto* table = app.add_subcommand("char-table", "Character table (CSV)");
  auto* frob = app.add_subcommand("frobenius", "Decomposition, Frobenius lift and inertia at ell (p = -1)");
  auto* lfac = app.add_subcommand("lfactor", "Explicit and generic local factor of rho_j at ell (p = -1)");
  auto* lfun = app.add_subcommand("lfunction", "Euler product and Dirichlet coefficients of L(rho_j, s) (p = -1)");
  auto* zeta = app.add_subcommand("zeta-ratio", "zeta_{K~}/zeta_K: factors, closed-form comparison, coefficients");
  auto* unit = app.add_subcommand("unit-value", "Numerical value of u_pq");
  for (auto* sub : {classify, group, reps, table, frob, lfac, lfun, zeta, unit}) sub->fallthrough();
  frob->add_option("--ell", o.ell, "prime ell")->required();
  lfac->add_option("--j", o.j, "index of the two-dimensional irreducible")->required();
  lfac->add_option("--ell", o.ell, "prime ell")->required();
  lfun->add_option("--j", o.j, "index of the two-dimensional irreducible")->required();
  for (auto* sub : {lfun, zeta}) {
    sub->add_option("--prime-bound", o.prime_bound, "largest prime whose factor is computed")->capture_default_str();
    sub->add_option("--coeffs", o.coeffs, "number of Dirichlet coefficients")->capture_default_str();
  }
  lfun->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  unit->add_flag("--p2-interpretation", o.p2_interpretation, "evaluate v_2q reading the stray index as 4j+1");
  unit->add_option("--precision", o.precision, "double or extended")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  const auto chosen = app.get_subcommands();
  if (chosen.empty() && !o.seed_conventions) {
    err << app.help();
    return exit_usage;
  }
  if (opt_p->count() == 0 || opt_q->count() == 0) {
    err << "error: -p and -q are required\n";
    return exit_usage;
  }

  try {
    const FieldParams fp = make_params(o.p, o.q);
    if (o.seed_conventions) {
      emit(out, json_io::envelope("seed-conventions", &fp, json_io::conventions(fp)));
      return exit_ok;
    }
    const CLI::App* sub = chosen.front();
    if (sub == classify) {
      emit(out, json_io::envelope("classify", &fp, classify_payload(fp)));
    } else if (sub == group) {
      emit(out, json_io::envelope("group", &fp, group_payload(fp)));
    } else if (sub == reps) {
      emit(out, json_io::envelope("reps", &fp, reps_payload(fp)));
    } else if (sub == table) {
      char_table_csv(fp, out);
    } else if (sub == frob) {
      emit(out, json_io::envelope("frobenius", &fp, frobenius_payload(o.ell, fp)));
    } else if (sub == lfac) {
      return lfactor(o, fp, out, err);
    } else if (sub == lfun) {
      lfunction(o, fp, out);
    } else if (sub == zeta) {
      zeta_ratio(o, fp, out);
    } else if (sub == unit) {
      emit(out, json_io::envelope("unit-value", &fp, unit_payload(o, fp)));
    }
    return exit_ok;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_inconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

}  // namespace qcyclo::cli
