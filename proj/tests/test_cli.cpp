#include <sstream>

#include "doctest.h"
#include "qcyclo/cli.hpp"
#include "qcyclo/json_io.hpp"

using namespace qcyclo;
using json_io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(const std::vector<std::string>& args) {
  const auto r = call(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("envelope") {
  const json j = call_json({"classify", "-p", "-1", "-q", "2"});
  CHECK(j["schema_version"] == json_io::schema_version);
  CHECK(j["command"] == "classify");
  CHECK(j["params"]["p"] == -1);
  CHECK(j["params"]["q"] == 2);
  CHECK(j["params"]["conventions"]["generators"].size() == 2);
  CHECK(j["payload"]["case"] == "B_q_doubles");

  const json c = call_json({"classify", "-p", "3", "-q", "7"});
  CHECK(c["params"]["conventions"]["primitive_root_p"] == 2);
  CHECK(c["params"]["conventions"]["primitive_root_q"] == 3);
  CHECK(c["payload"]["order_G"] == 12);

  const json s = call_json({"--seed-conventions", "-p", "5", "-q", "13"});
  CHECK(s["command"] == "seed-conventions");
  CHECK(s["payload"]["primitive_root_q"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(call({"classify", "-p", "4", "-q", "5"}).code == cli::exit_usage);
  CHECK(call({"classify", "-p", "5", "-q", "3"}).code == cli::exit_usage);
  CHECK(call({"classify", "-q", "5"}).code == cli::exit_usage);
  CHECK(call({"no-such-command"}).code == cli::exit_usage);
  CHECK(call({}).code == cli::exit_usage);
  CHECK(call({"frobenius", "-p", "3", "-q", "5", "--ell", "7"}).code == cli::exit_usage);
  CHECK(call({"lfactor", "-p", "-1", "-q", "7", "--j", "2", "--ell", "3"}).code == cli::exit_usage);
  CHECK(call({"lfunction", "-p", "-1", "-q", "7", "--j", "1", "--prime-bound", "10", "--coeffs", "20"}).code ==
        cli::exit_usage);
  CHECK(call({"unit-value", "-p", "2", "-q", "5"}).code == cli::exit_usage);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--help"}).out.find("num") != std::string::npos);
}

TEST_CASE("reps output and round trip") {
  const json j = call_json({"reps", "-p", "-1", "-q", "5"});
  CHECK(j["payload"]["one_dim_count"] == 8);
  CHECK(j["payload"]["two_dim_count"] == 2);

  for (const auto& [p, q] : std::vector<std::pair<i64, i64>>{{-1, 5}, {2, 7}, {3, 5}, {5, 13}, {-1, 2}}) {
    const auto fp = make_params(p, q);
    const json r = call_json({"reps", "-p", std::to_string(p), "-q", std::to_string(q)});
    const auto originals = enumerate_irreps(fp);
    REQUIRE(r["payload"]["irreps"].size() == originals.size());
    for (std::size_t k = 0; k < originals.size(); ++k) {
      const Irrep back = json_io::decode_irrep(json::parse(r["payload"]["irreps"][k].dump()), fp);
      CHECK(verify_homomorphism(back, fp));
      CHECK(back.scalar_images == originals[k].scalar_images);
      CHECK(back.matrix_images == originals[k].matrix_images);
      CHECK(back.label() == originals[k].label());
    }
  }
  // A tampered matrix must fail verification after decoding.
  const auto fp = make_params(-1, 5);
  json r = call_json({"reps", "-p", "-1", "-q", "5"});
  json& two = r["payload"]["irreps"][8];
  two["eps"]["entries"][0]["num"] = 0;
  two["eps"]["entries"][1]["num"] = 0;
  CHECK_FALSE(verify_homomorphism(json_io::decode_irrep(two, fp), fp));
}

TEST_CASE("deterministic output") {
  const std::vector<std::vector<std::string>> invocations = {
      {"reps", "-p", "3", "-q", "7"},
      {"group", "-p", "5", "-q", "13"},
      {"char-table", "-p", "2", "-q", "5"},
      {"zeta-ratio", "-p", "-1", "-q", "7", "--prime-bound", "60", "--coeffs", "60"},
      {"lfunction", "-p", "-1", "-q", "13", "--j", "2", "--prime-bound", "50", "--coeffs", "50", "--format", "csv"},
  };
  for (const auto& args : invocations) {
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("lfactor and frobenius") {
  const json j = call_json({"lfactor", "-p", "-1", "-q", "2", "--j", "0", "--ell", "7"});
  CHECK(j["payload"]["inverse_poly"] == json::array({1, 0, -1}));
  CHECK(j["payload"]["equal"] == true);

  const json f = call_json({"frobenius", "-p", "-1", "-q", "13", "--ell", "17"});
  CHECK(f["payload"]["decomposition"] == "unramified");
  CHECK(f["payload"]["frobenius"]["lift"]["eps"] == 1);
  CHECK(f["payload"]["frobenius"]["u"] == -1);

  const json r = call_json({"frobenius", "-p", "-1", "-q", "5", "--ell", "2"});
  CHECK(r["payload"]["decomposition"] == "ramified");
  CHECK(r["payload"]["frobenius"].is_null());
  CHECK(r["payload"]["inertia_candidates"].size() == 1);
}

TEST_CASE("group, tables, series") {
  const json g = call_json({"group", "-p", "3", "-q", "5"});
  CHECK(g["payload"]["case_c_smith"]["d"] == 1);
  CHECK(g["payload"]["N"]["order"] == 8);
  CHECK(g["payload"]["order"] == 16);

  const auto t = call({"char-table", "-p", "-1", "-q", "5"});
  REQUIRE(t.code == 0);
  std::istringstream lines(t.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("irrep,", 0) == 0);
  CHECK(header.find("\"s_p^0 s_q^0 e^0\"") != std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 10);

  const json z = call_json({"zeta-ratio", "-p", "-1", "-q", "7", "--prime-bound", "20", "--coeffs", "20"});
  bool flagged = false;
  for (const auto& row : z["payload"]["closed_form_comparison"]) {
    if (row["ell"] == 3) flagged = row["known_exception"] == true && row["equal"] == false;
  }
  CHECK(flagged);
  CHECK(z["payload"]["coefficients"][0]["exact"] == 1);

  const json l = call_json({"lfunction", "-p", "-1", "-q", "2", "--j", "0", "--prime-bound", "10", "--coeffs", "10"});
  CHECK(l["payload"]["coefficients"][8]["exact"] == 1);
  CHECK(l["payload"]["coefficients"][2]["exact"] == 0);

  const json u = call_json({"unit-value", "-p", "-1", "-q", "3"});
  CHECK(u["payload"]["real"] == 0.0);
  CHECK(std::abs(u["payload"]["imag"].get<double>() - 1.7320508075688772) < 1e-15);
  const json u2 = call_json({"unit-value", "-p", "2", "-q", "3", "--p2-interpretation"});
  CHECK(u2["payload"]["p2_interpretation"] == true);
}
