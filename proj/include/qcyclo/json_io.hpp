#pragma once

// JSON encodings shared by the command line tool and the Python module.
//
// A root of unity zeta_den^num = exp(2 pi i num/den) is {"num": num, "den": den}.
// A monomial matrix is {"shape": "diag"|"anti", "entries": [first, second]},
// first/second as in Mat2 (the (1,1)/(2,2) or (1,2)/(2,1) entries).
// A cyclotomic integer is {"terms": [{"coef": c, "root": root}...], "re", "im", "text"}.
// Polynomial coefficients are plain integers when rational, else cyclotomic objects.

#include "json.hpp"
#include "qcyclo/frobenius.hpp"
#include "qcyclo/group.hpp"
#include "qcyclo/lfunc.hpp"
#include "qcyclo/reps.hpp"

namespace qcyclo::json_io {

using nlohmann::json;

inline constexpr const char* schema_version = "1.0";

json encode(const RootExp& z);
json encode(const Mat2& m);
json encode(const CycSum& c);
json encode(const Poly& p);
json encode(const GroupElement& x, const FieldParams& params);
json encode(const Subgroup& s, const FieldParams& params);
json encode(const Irrep& rep, const FieldParams& params);
json encode(const FrobeniusData& fd, const FieldParams& params);
json encode_complex(std::complex<double> z);

RootExp decode_root(const json& j);
Mat2 decode_mat2(const json& j);
Irrep decode_irrep(const json& j, const FieldParams& params);

/// Primitive roots and generator conventions.
json conventions(const FieldParams& params);

/// {schema_version, command, params: {p, q, conventions}, payload}
json envelope(const std::string& command, const FieldParams* params, json payload);

}  // namespace qcyclo::json_io
