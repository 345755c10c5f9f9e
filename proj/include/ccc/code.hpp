#pragma once

#include <vector>

#include "ccc/function.hpp"
#include "ccc/types.hpp"

namespace ccc {

// M exponent sequences of a common length and modulus, one per row.
struct Code {
  Residue lambda = 1;
  ResidueMatrix rows;  // M x L, entries in [0, lambda)

  Eigen::Index size() const { return rows.rows(); }    // M
  Eigen::Index length() const { return rows.cols(); }  // L
  ExponentSequence row(Eigen::Index i) const {
    return {lambda, rows.row(i).transpose()};
  }
};

void validate(const Code& code);

// K codes of identical shape plus one label tuple per code.
struct CodeSet {
  Residue lambda = 1;
  std::vector<Code> codes;
  std::vector<std::vector<Residue>> labels;

  std::size_t size() const { return codes.size(); }  // K
  Eigen::Index code_size() const { return codes.empty() ? 0 : codes[0].size(); }
  Eigen::Index length() const { return codes.empty() ? 0 : codes[0].length(); }

  friend bool operator==(const CodeSet& a, const CodeSet& b);
};

void validate(const CodeSet& set);

// Entrywise-sum Kronecker composition: the output entry at flat position
// (i, j) is a[i] and b[j] rescaled into Z_lcm(lambda_a, lambda_b) and added.
// Sample-wise this is exactly the product of the two unimodular sequences,
// so correlations multiply.
ExponentSequence kronecker_sequences(const ExponentSequence& a,
                                     const ExponentSequence& b);

// Row (i, j) at i * M_b + j is the Kronecker composition of row i of a and
// row j of b.
Code kronecker_codes(const Code& a, const Code& b);

// Code (s, t) at s * K_b + t composes code s of a with code t of b; labels
// concatenate.
CodeSet kronecker_codesets(const CodeSet& a, const CodeSet& b);

}  // namespace ccc
