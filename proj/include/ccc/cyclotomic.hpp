#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccc/types.hpp"

// Exact arithmetic in Z[w] for w = exp(2*pi*i/lambda).
//
// The ring Z[w] is isomorphic to Z[x]/Phi_lambda(x), a free Z-module with
// basis 1, w, ..., w^{phi(lambda)-1}.  Freeness is what makes the zero test
// exact: an element is zero iff every coordinate in that basis is zero, so
// "this correlation sum vanishes" becomes an integer statement with no
// floating-point tolerance anywhere.
//
// Correlation sums arrive as exponent counts: counts[j] is the number of
// terms contributing w^j, and the sum itself is sum_j counts[j] * w^j.
// Reducing that polynomial mod Phi_lambda yields the canonical coordinates.

namespace ccc {

using BigInt = boost::multiprecision::cpp_int;

// Largest supported root order.  Phi_lambda is computed by repeated exact
// polynomial division, which is quadratic in lambda; the cap keeps that and
// the reduction tables at desk scale.
inline constexpr Residue kMaxCyclotomicOrder = 10000;

// Coefficients of the lambda-th cyclotomic polynomial, ascending degree
// (coeffs[i] multiplies x^i).  Monic, degree euler_phi(lambda).
// lambda >= 1; lambda > kMaxCyclotomicOrder raises CapacityError.
std::vector<BigInt> cyclotomic_polynomial(Residue lambda);

// An element of Z[w], stored by its canonical coordinates.  Coefficients are
// arbitrary-precision, so no input magnitude can silently wrap.
class CyclotomicInt {
 public:
  // coeffs.size() must equal euler_phi(lambda).
  CyclotomicInt(Residue lambda, std::vector<BigInt> coeffs);

  Residue order() const { return lambda_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

 private:
  Residue lambda_;
  std::vector<BigInt> coeffs_;
};

// Reduction context for one root order.  Construction does all the expensive
// work (Phi_lambda, the table of w^j coordinates, the complex embedding);
// every query afterwards is a small dot product.  Zero tests take a machine
// arithmetic fast path when the precomputed table and the count magnitudes
// provably fit, and fall back to big-integer reduction otherwise — the two
// paths agree by construction.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(Residue lambda);

  Residue order() const { return lambda_; }
  int degree() const { return degree_; }
  const std::vector<BigInt>& modulus() const { return phi_; }

  // Exact value of sum_j counts[j] * w^j.  counts.size() == order().
  CyclotomicInt from_exponent_counts(std::span<const std::int64_t> counts) const;

  // Exact zero test of the same sum, without materializing the element.
  bool counts_are_zero(std::span<const std::int64_t> counts) const;

  // Floating shadow of the same sum under w -> exp(2*pi*i/lambda).
  std::complex<double> embed_counts(std::span<const std::int64_t> counts) const;
  std::complex<double> embed(const CyclotomicInt& v) const;

 private:
  void reduce_big(std::span<const std::int64_t> counts,
                  std::vector<BigInt>& out) const;

  Residue lambda_;
  int degree_;
  std::vector<BigInt> phi_;
  std::vector<std::complex<double>> roots_;
  // Row j holds the canonical coordinates of w^j.  Kept in machine integers
  // when every entry fits (the usual case); kept big otherwise.
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>
      table64_;
  std::vector<std::vector<BigInt>> table_big_;
  bool has_table_ = false;
  bool table_fits64_ = false;
  std::int64_t safe_count_sum_ = 0;  // int64 path valid while sum|counts| <= this
};

// One-shot convenience wrapper; hot paths should hold a CyclotomicRing.
CyclotomicInt cyclo_from_exponent_counts(std::span<const std::int64_t> counts,
                                         Residue lambda);

}  // namespace ccc
