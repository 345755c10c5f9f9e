#include "ccc/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace ccc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Residue int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field \"") + key +
                                '"');
  return j.at(key).get<Residue>();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

ordered_json to_json(const CodeSet& set) {
  validate(set);
  ordered_json j;
  j["lambda"] = set.lambda;
  j["K"] = set.size();
  j["M"] = set.code_size();
  j["L"] = set.length();
  j["labels"] = set.labels;
  ordered_json codes = ordered_json::array();
  for (const Code& code : set.codes) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < code.size(); ++r) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index i = 0; i < code.length(); ++i)
        row.push_back(code.rows(r, i));
      rows.push_back(std::move(row));
    }
    codes.push_back(std::move(rows));
  }
  j["codes"] = std::move(codes);
  return j;
}

CodeSet code_set_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("code set must be an object");
  CodeSet set;
  set.lambda = int_field(j, "lambda");
  const Residue declared_k = int_field(j, "K");
  const Residue declared_m = int_field(j, "M");
  const Residue declared_l = int_field(j, "L");
  if (!j.contains("labels") || !j.at("labels").is_array())
    throw std::invalid_argument("missing array field \"labels\"");
  if (!j.contains("codes") || !j.at("codes").is_array())
    throw std::invalid_argument("missing array field \"codes\"");

  for (const json& label : j.at("labels")) {
    if (!label.is_array())
      throw std::invalid_argument("labels must be arrays of integers");
    set.labels.push_back(label.get<std::vector<Residue>>());
  }
  for (const json& rows : j.at("codes")) {
    if (!rows.is_array() || rows.empty())
      throw std::invalid_argument("each code must be a non-empty row array");
    Code code{set.lambda,
              ResidueMatrix(static_cast<Eigen::Index>(rows.size()),
                            static_cast<Eigen::Index>(rows.at(0).size()))};
    Eigen::Index r = 0;
    for (const json& row : rows) {
      if (!row.is_array() ||
          static_cast<Eigen::Index>(row.size()) != code.length())
        throw std::invalid_argument("code rows must share one length");
      Eigen::Index i = 0;
      for (const json& entry : row) {
        if (!entry.is_number_integer())
          throw std::invalid_argument("code entries must be integers");
        code.rows(r, i++) = entry.get<Residue>();
      }
      ++r;
    }
    set.codes.push_back(std::move(code));
  }

  if (declared_k != static_cast<Residue>(set.codes.size()))
    throw std::invalid_argument("declared K does not match the codes array");
  if (declared_m != set.code_size())
    throw std::invalid_argument("declared M does not match the row count");
  if (declared_l != set.length())
    throw std::invalid_argument("declared L does not match the row length");
  validate(set);
  return set;
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json j;
  j["class"] = std::string(to_string(report.classification));
  j["K"] = report.set_size;
  j["M"] = report.code_size;
  j["L"] = report.length;
  j["lambda"] = report.lambda;
  j["peak"] = report.peak;
  j["worst_offpeak"] = report.worst_offpeak;
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json entry;
    entry["mu1"] = v.mu1;
    entry["mu2"] = v.mu2;
    entry["u"] = v.shift;
    entry["re"] = v.value.real();
    entry["im"] = v.value.imag();
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j;
}

ordered_json to_json(const MultivariableFunction& f) {
  ordered_json j;
  ordered_json factors = ordered_json::array();
  for (const auto& [p, m] : f.domain().factors())
    factors.push_back(ordered_json::array({p, m}));
  j["factors"] = std::move(factors);
  j["q"] = f.domain().q();
  ordered_json terms = ordered_json::array();
  for (const auto& [mask, coeff] : f.terms()) {
    ordered_json term;
    ordered_json vars = ordered_json::array();
    for (int v = 0; v < 64; ++v)
      if (mask & (std::uint64_t{1} << v)) vars.push_back(v);
    term["vars"] = std::move(vars);
    term["coeff"] = coeff;
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

MultivariableFunction function_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("function must be an object");
  if (!j.contains("factors") || !j.at("factors").is_array() ||
      j.at("factors").empty())
    throw std::invalid_argument("missing array field \"factors\"");
  std::vector<PrimePower> factors;
  for (const json& f : j.at("factors")) {
    if (!f.is_array() || f.size() != 2 || !f.at(0).is_number_integer() ||
        !f.at(1).is_number_integer())
      throw std::invalid_argument("factors must be [prime, multiplicity] pairs");
    factors.push_back({f.at(0).get<Residue>(), f.at(1).get<int>()});
  }
  MultivariableFunction out(
      MixedRadixDomain(std::move(factors), int_field(j, "q")));
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("missing array field \"terms\"");
  for (const json& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("vars") ||
        !term.at("vars").is_array())
      throw std::invalid_argument("terms must carry a \"vars\" array");
    std::vector<int> vars;
    for (const json& v : term.at("vars")) {
      if (!v.is_number_integer())
        throw std::invalid_argument("variable indices must be integers");
      vars.push_back(v.get<int>());
    }
    out.add_term(vars, int_field(term, "coeff"));
  }
  return out;
}

void write_profile_csv(std::ostream& out, const CorrelationProfile& profile) {
  out << "u,re,im,exact_zero\n";
  for (std::size_t i = 0; i < profile.shifts.size(); ++i) {
    out << profile.shifts[i] << ',' << format_double(profile.values[i].real())
        << ',' << format_double(profile.values[i].imag()) << ','
        << (profile.exact_zero[i] ? "true" : "false") << '\n';
  }
}

std::string read_text_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << text;
  if (!out) throw std::invalid_argument("cannot write " + path);
}

CodeSet load_code_set(const std::string& path) {
  return code_set_from_json(json::parse(read_text_file(path)));
}

void save_code_set(const CodeSet& set, const std::string& path) {
  write_text_file(path, to_json(set).dump(2) + "\n");
}

MultivariableFunction load_function(const std::string& path) {
  return function_from_json(json::parse(read_text_file(path)));
}

}  // namespace ccc
