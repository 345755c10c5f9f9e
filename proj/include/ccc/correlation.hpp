#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ccc/code.hpp"
#include "ccc/cyclotomic.hpp"
#include "ccc/function.hpp"
#include "ccc/types.hpp"

// Aperiodic correlation of exponent sequences and exhaustive verification of
// the complementary-code property.
//
// For sequences a, b of length L over Z_lambda the aperiodic cross
// correlation at shift u is
//
//   C(a,b)(u) = sum_{i=0}^{L-1-u} w^{a_{i+u} - b_i}        (0 <= u < L)
//             = sum_{i=0}^{L-1+u} w^{a_i - b_{i-u}}        (-L < u < 0)
//
// with w = exp(2*pi*i/lambda), and zero beyond |u| >= L.  Each sum is a
// cyclotomic integer, represented here by the vector of exponent counts it
// accumulates; zero tests are therefore exact.  Code-level sums add the
// row-wise correlations of two codes.
//
// A set of K same-shape codes is verified against the defining property:
// summed auto correlations vanish at every nonzero shift with peak M*L at
// shift zero, and summed cross correlations between distinct codes vanish
// everywhere.  Negative shifts never need their own pass, because
// C(a,b)(-u) = conj(C(b,a)(u)) and the verifier visits all ordered pairs.

namespace ccc {

struct CorrelationValue {
  CyclotomicInt exact;
  std::complex<double> approx;

  bool is_zero() const { return exact.is_zero(); }
};

// Single-shift correlations; operands must share lambda and length.
CorrelationValue cross_correlation(const ExponentSequence& a,
                                   const ExponentSequence& b, Residue shift);
CorrelationValue code_correlation_sum(const Code& a, const Code& b,
                                      Residue shift);

// Dense correlation trace over every shift in (-L, L).
struct CorrelationProfile {
  Residue length = 0;
  std::vector<Residue> shifts;  // -(L-1), ..., L-1
  std::vector<std::complex<double>> values;
  std::vector<bool> exact_zero;
};

CorrelationProfile correlation_profile(const ExponentSequence& a,
                                       const ExponentSequence& b);
CorrelationProfile codeset_profile(const CodeSet& set, std::size_t mu1,
                                   std::size_t mu2);

enum class SetClass {
  Ccc,                    // no violations and K == M
  Mogcs,                  // no violations and K < M
  ComplementarySetOnly,   // autos clean, some cross correlation fails
  Fail,                   // some auto correlation fails
};

std::string_view to_string(SetClass c);

struct Violation {
  std::size_t mu1 = 0;
  std::size_t mu2 = 0;
  Residue shift = 0;
  std::complex<double> value;
};

struct VerificationReport {
  SetClass classification = SetClass::Fail;
  std::size_t set_size = 0;       // K
  Eigen::Index code_size = 0;     // M
  Eigen::Index length = 0;        // L
  Residue lambda = 1;
  Residue peak = 0;               // correlation value at shift 0, always M*L
  double worst_offpeak = 0.0;     // max |value| over required-zero points
  bool offpeak_exactly_zero = false;
  std::vector<Violation> violations;  // ordered by (mu1, mu2, shift)

  bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
  // Exact mode proves zeros in Z[w]; float mode only thresholds magnitudes
  // and exists for moduli past the exact-arithmetic cap.
  bool exact = true;
  double tolerance_scale = 1e-8;  // float mode: violation if |C| > scale*M*L
  // Refuse jobs whose K^2 * M * L^2 count-accumulation estimate exceeds this.
  std::uint64_t max_work = 10'000'000'000ULL;
};

inline constexpr std::uint64_t kDefaultMaxWork = 10'000'000'000ULL;

// Exhaustive check of all K^2 ordered code pairs at all shifts 0 <= u < L.
VerificationReport verify_code_set(const CodeSet& set,
                                   const VerifyOptions& options = {});

// Golay-pair check: the two sequences form one code verified on its own.
VerificationReport verify_gcp(const ExponentSequence& a,
                              const ExponentSequence& b,
                              const VerifyOptions& options = {});

}  // namespace ccc
