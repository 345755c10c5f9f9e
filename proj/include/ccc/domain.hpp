#pragma once

#include <span>
#include <vector>

#include "ccc/numbers.hpp"
#include "ccc/types.hpp"

namespace ccc {

// The index set Z_{p_1}^{m_1} x ... x Z_{p_k}^{m_k}, ordered so that flat
// index i decomposes as i = ((i_1 p_2^{m_2} + i_2) p_3^{m_3} + ...) + i_k,
// i.e. the last factor varies fastest.  The point at flat index i is the
// concatenation of the base-p_a digit vectors of the i_a, least significant
// digit first within each factor.
//
// q >= 1 is the extra modulus folded into the value ring: every function on
// the domain takes values in Z_lambda with lambda = lcm(p_1, ..., p_k, q).
class MixedRadixDomain {
 public:
  MixedRadixDomain(std::vector<PrimePower> factors, Residue q);

  const std::vector<PrimePower>& factors() const { return factors_; }
  Residue q() const { return q_; }
  Residue lambda() const { return lambda_; }
  Residue length() const { return length_; }  // product of all p_a^{m_a}
  int factor_count() const { return static_cast<int>(factors_.size()); }
  int variable_count() const { return variable_count_; }  // sum of the m_a

  // First variable of factor a in the concatenated point vector.
  int variable_offset(int factor) const;
  Residue factor_length(int factor) const;  // p_a^{m_a}

  // Per-factor indices (i_1, ..., i_k) of a flat index, and back.
  std::vector<Residue> factor_indices(Residue flat) const;
  Residue flat_index(std::span<const Residue> indices) const;

  // Digits of the point at a flat index; out.size() == variable_count().
  void point_at(Residue flat, std::span<int> out) const;

  // All points as rows, in flat-index order: length() x variable_count().
  Eigen::MatrixXi enumerate_points() const;

  friend bool operator==(const MixedRadixDomain&, const MixedRadixDomain&);

 private:
  std::vector<PrimePower> factors_;
  Residue q_ = 1;
  Residue lambda_ = 1;
  Residue length_ = 1;
  int variable_count_ = 0;
  std::vector<Residue> factor_length_;
  std::vector<Residue> stride_;
  std::vector<int> variable_offset_;
};

}  // namespace ccc
