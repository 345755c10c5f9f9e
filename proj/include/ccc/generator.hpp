#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ccc/code.hpp"
#include "ccc/function.hpp"
#include "ccc/types.hpp"

// Direct synthesis of complete complementary codes from multivariable
// functions.  One prime-power block p^m contributes m variables over Z_p and
// a seed function
//
//   f = (lambda/p) * sum_b v_{pi(b)} v_{pi(b+1)}  +  sum_b c_b v_b
//
// (a path of quadratic couplings along a variable ordering pi, plus an
// arbitrary linear part).  Row a of code t then uses f shifted by
// (lambda/p)(a * v_{pi(1)} + t * v_{pi(m)}) plus a constant, and the p codes
// obtained this way form a (p, p, p^m) complete complementary code.  Blocks
// for distinct prime powers add over disjoint variables, which multiplies
// the sequences samplewise and yields (K, K, L) sets for any length
// L = prod p_a^{m_a} with K = prod p_a.

namespace ccc {

// Everything needed to build one prime-power block.
struct FactorSpec {
  Residue prime = 2;
  int arity = 1;                       // m, the number of Z_p variables
  std::vector<int> permutation;        // 1-based images of 1..m; empty: identity
  std::vector<Residue> linear_coeffs;  // one per variable; empty: all zero
  Residue constant = 0;

  void validate() const;
  std::vector<int> effective_permutation() const;  // always m entries
};

// The quadratic-path-plus-linear seed over Z_p^m with values in
// Z_lcm(p, q).  Ignores spec.constant.
MultivariableFunction seed_function(const FactorSpec& spec, Residue q);

// f plus the row/code offsets (lambda/p)(alpha * v_{pi(1)} + t * v_{pi(m)})
// and the constant c.  f must be a single-block function matching spec;
// alpha and t lie in [0, p).  For m = 1 both offsets land on the same
// variable and accumulate.
MultivariableFunction shifted_function(const MultivariableFunction& f,
                                       const FactorSpec& spec, Residue alpha,
                                       Residue t, Residue c);

// The (p, p, p^m) complete complementary code of one block; code t carries
// label {t} and its row alpha is psi of the shifted seed.
CodeSet prime_power_ccc(const FactorSpec& spec, Residue q);

// Binary Golay pair over Z_{2^h}: psi(f + c0) and psi(f + 2^{h-1} v_{pi(1)}
// + c1) for the m-variable binary seed f.  m >= 1, h >= 1.
std::pair<ExponentSequence, ExponentSequence> gdj_pair(
    int m, int h, const std::vector<int>& permutation,
    const std::vector<Residue>& coeffs, Residue c0, Residue c1);

// The composite construction over several blocks sharing the value ring
// Z_q: code labels are tuples (t_1, ..., t_k) in row-major order (last
// block fastest), rows likewise tuples (alpha_1, ..., alpha_k), and the
// row function is the sum of the per-block shifted seeds (each block's
// constant folded in).  Every block prime must divide q, else
// ConstraintError.  Equals the k-fold Kronecker composition of the
// per-block sets, but is built directly from the joint functions.
CodeSet composite_ccc(std::span<const FactorSpec> specs, Residue q);

// Identity permutations, zero coefficients, zero constants.
std::vector<FactorSpec> default_factor_specs(const Factorization& fac);

// Seeded draw of permutation, linear coefficients and constant for every
// block, in that order block by block.  Uses a fixed generator and rejection
// sampling, so a seed pins the output bit-for-bit across platforms.
void randomize_factor_specs(std::span<FactorSpec> specs, Residue q,
                            std::uint64_t seed);

// One-call synthesis for a length: canonical factorization, q defaulting to
// the radical of the length, optional seeded randomization.
CodeSet generate_for_length(Residue length, std::optional<Residue> q = {},
                            std::optional<std::uint64_t> seed = {});

}  // namespace ccc
