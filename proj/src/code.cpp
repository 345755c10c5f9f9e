#include "ccc/code.hpp"

#include <array>
#include <stdexcept>

#include "ccc/numbers.hpp"

namespace ccc {

void validate(const Code& code) {
  if (code.lambda < 1)
    throw std::invalid_argument("code modulus must be positive");
  if (code.rows.rows() < 1 || code.rows.cols() < 1)
    throw std::invalid_argument("code must have at least one row and column");
  if ((code.rows.array() < 0).any() ||
      (code.rows.array() >= code.lambda).any())
    throw std::invalid_argument("code entry outside [0, lambda)");
}

void validate(const CodeSet& set) {
  if (set.codes.empty())
    throw std::invalid_argument("code set must contain at least one code");
  if (set.labels.size() != set.codes.size())
    throw std::invalid_argument("one label per code expected");
  for (const Code& code : set.codes) {
    validate(code);
    if (code.lambda != set.lambda)
      throw std::invalid_argument("codes must share the set modulus");
    if (code.size() != set.code_size() || code.length() != set.length())
      throw std::invalid_argument("codes must share a common shape");
  }
}

bool operator==(const CodeSet& a, const CodeSet& b) {
  if (a.lambda != b.lambda || a.labels != b.labels ||
      a.codes.size() != b.codes.size())
    return false;
  for (std::size_t i = 0; i < a.codes.size(); ++i) {
    if (a.codes[i].lambda != b.codes[i].lambda ||
        a.codes[i].rows.rows() != b.codes[i].rows.rows() ||
        a.codes[i].rows.cols() != b.codes[i].rows.cols() ||
        a.codes[i].rows != b.codes[i].rows)
      return false;
  }
  return true;
}

ExponentSequence kronecker_sequences(const ExponentSequence& a,
                                     const ExponentSequence& b) {
  validate(a);
  validate(b);
  const std::array<Residue, 2> lams{a.lambda, b.lambda};
  const Residue lam = lcm_all(lams);
  const Residue ra = lam / a.lambda;
  const Residue rb = lam / b.lambda;
  const Eigen::Index la = a.values.size();
  const Eigen::Index lb = b.values.size();
  ResidueVector out(la * lb);
  const std::uint64_t ulam = static_cast<std::uint64_t>(lam);
  for (Eigen::Index i = 0; i < la; ++i) {
    // Rescaled entries stay below lam < 2^63, so the sum fits unsigned.
    const std::uint64_t x = static_cast<std::uint64_t>(a.values[i] * ra);
    for (Eigen::Index j = 0; j < lb; ++j) {
      std::uint64_t s = x + static_cast<std::uint64_t>(b.values[j] * rb);
      if (s >= ulam) s -= ulam;
      out[i * lb + j] = static_cast<Residue>(s);
    }
  }
  return {lam, std::move(out)};
}

Code kronecker_codes(const Code& a, const Code& b) {
  validate(a);
  validate(b);
  const std::array<Residue, 2> lams{a.lambda, b.lambda};
  const Residue lam = lcm_all(lams);
  Code out{lam, ResidueMatrix(a.size() * b.size(), a.length() * b.length())};
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j)
      out.rows.row(i * b.size() + j) =
          kronecker_sequences(a.row(i), b.row(j)).values;
  return out;
}

CodeSet kronecker_codesets(const CodeSet& a, const CodeSet& b) {
  validate(a);
  validate(b);
  CodeSet out;
  const std::array<Residue, 2> lams{a.lambda, b.lambda};
  out.lambda = lcm_all(lams);
  out.codes.reserve(a.size() * b.size());
  out.labels.reserve(a.size() * b.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (std::size_t t = 0; t < b.size(); ++t) {
      out.codes.push_back(kronecker_codes(a.codes[s], b.codes[t]));
      std::vector<Residue> label = a.labels[s];
      label.insert(label.end(), b.labels[t].begin(), b.labels[t].end());
      out.labels.push_back(std::move(label));
    }
  }
  return out;
}

}  // namespace ccc
