#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "ccc/domain.hpp"
#include "ccc/types.hpp"

namespace ccc {

// A sequence of Z_lambda exponents; entry e stands for the unimodular sample
// exp(2*pi*i*e/lambda).
struct ExponentSequence {
  Residue lambda = 1;
  ResidueVector values;

  friend bool operator==(const ExponentSequence& a, const ExponentSequence& b) {
    return a.lambda == b.lambda && a.values.size() == b.values.size() &&
           (a.values.array() == b.values.array()).all();
  }
};

// Every entry must lie in [0, lambda).
void validate(const ExponentSequence& seq);

// A Z_lambda-valued function on a mixed-radix domain, stored as a sum of
// squarefree monomials: each term is a set of distinct variables (kept as a
// bitmask) with a coefficient in Z_lambda.  The empty set is the constant
// term.  Coefficients accumulate mod lambda and vanished terms are dropped,
// so equal functions compare equal structurally.
class MultivariableFunction {
 public:
  explicit MultivariableFunction(MixedRadixDomain domain);

  const MixedRadixDomain& domain() const { return domain_; }
  Residue lambda() const { return domain_.lambda(); }

  // Adds coeff * prod(vars).  Variables must be distinct (a repeated index
  // would mean an exponent above 1) and within the domain.
  void add_term(std::span<const int> vars, Residue coeff);
  void add_constant(Residue coeff) { add_term({}, coeff); }

  Residue coefficient(std::span<const int> vars) const;
  Residue constant() const { return coefficient({}); }
  const std::map<std::uint64_t, Residue>& terms() const { return terms_; }
  int degree() const;  // 0 for the zero function and pure constants

  Residue evaluate(std::span<const int> point) const;

  friend bool operator==(const MultivariableFunction&,
                         const MultivariableFunction&) = default;

 private:
  std::uint64_t mask_of(std::span<const int> vars) const;

  MixedRadixDomain domain_;
  std::map<std::uint64_t, Residue> terms_;
};

// Pointwise sum; both operands must live on the same domain.
MultivariableFunction add(const MultivariableFunction& f,
                          const MultivariableFunction& g);

// Every coefficient multiplied by c (mod lambda).
MultivariableFunction scale(const MultivariableFunction& f, Residue c);

// The exponent sequence of f over the domain in flat-index order.
ExponentSequence psi(const MultivariableFunction& f);

// All domain points as rows, in flat-index order.
Eigen::MatrixXi enumerate_domain(const MixedRadixDomain& domain);

}  // namespace ccc
