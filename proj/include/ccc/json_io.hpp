#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ccc/code.hpp"
#include "ccc/correlation.hpp"
#include "ccc/function.hpp"
#include "ccc/generator.hpp"

// Stable interchange formats.  Keys are emitted in a fixed order and numbers
// are integers wherever the data is integral, so a given object always
// serializes to the same bytes.
//
//   code set: {"lambda", "K", "M", "L", "labels", "codes"}
//             codes[k][m][i] is the exponent at row m, position i of code k
//   function: {"factors": [[p, m], ...], "q", "terms": [{"vars", "coeff"}]}
//             vars lists 0-based variable indices of one squarefree monomial
//   report:   {"class", "K", "M", "L", "lambda", "peak", "worst_offpeak",
//              "violations": [{"mu1", "mu2", "u", "re", "im"}]}
//   profile:  CSV "u,re,im,exact_zero", one row per shift in (-L, L)

namespace ccc {

nlohmann::ordered_json to_json(const CodeSet& set);
CodeSet code_set_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const VerificationReport& report);

nlohmann::ordered_json to_json(const MultivariableFunction& f);
MultivariableFunction function_from_json(const nlohmann::json& j);

void write_profile_csv(std::ostream& out, const CorrelationProfile& profile);

// Path "-" designates standard input / output.
CodeSet load_code_set(const std::string& path);
void save_code_set(const CodeSet& set, const std::string& path);
MultivariableFunction load_function(const std::string& path);

std::string read_text_file(const std::string& path);   // "-" reads stdin
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ccc
