#include "ccc/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace ccc {

namespace {

// Count-vector allocation is linear in lambda; past this there is no
// sensible dense representation either way.
constexpr Residue kMaxCountOrder = Residue{1} << 24;

std::vector<std::complex<double>> unit_roots(Residue lambda) {
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(lambda));
  for (Residue j = 0; j < lambda; ++j) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                   static_cast<double>(lambda);
    roots[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
  }
  return roots;
}

std::complex<double> embed_with(const std::vector<std::complex<double>>& roots,
                                const std::vector<std::int64_t>& counts) {
  std::complex<double> v{0.0, 0.0};
  for (std::size_t j = 0; j < counts.size(); ++j)
    if (counts[j] != 0) v += static_cast<double>(counts[j]) * roots[j];
  return v;
}

// Exponent-difference counts of the row-summed correlation at shift
// u >= 0: counts[d] += #{(r, i) : a(r, i+u) - b(r, i) == d mod lambda}.
// This inner loop carries the whole verification cost.
void accumulate_counts(const ResidueMatrix& a, const ResidueMatrix& b,
                       Residue u, Residue lambda,
                       std::vector<std::int64_t>& counts) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index len = a.cols();
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Residue* pa = a.data() + r * len + u;
    const Residue* pb = b.data() + r * len;
    const Eigen::Index n = len - u;
    for (Eigen::Index i = 0; i < n; ++i) {
      Residue d = pa[i] - pb[i];
      d += (d >> 63) & lambda;  // branchless mod for |d| < lambda
      ++counts[static_cast<std::size_t>(d)];
    }
  }
}

void check_pair(const ExponentSequence& a, const ExponentSequence& b) {
  validate(a);
  validate(b);
  if (a.lambda != b.lambda)
    throw std::invalid_argument("sequences must share a modulus");
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("sequences must share a length");
}

void check_pair(const Code& a, const Code& b) {
  validate(a);
  validate(b);
  if (a.lambda != b.lambda)
    throw std::invalid_argument("codes must share a modulus");
  if (a.size() != b.size() || a.length() != b.length())
    throw std::invalid_argument("codes must share a shape");
}

// Counts of C(a, b)(shift) for any -L < shift < L; matrices are row stacks.
std::vector<std::int64_t> counts_at(const ResidueMatrix& a,
                                    const ResidueMatrix& b, Residue lambda,
                                    Residue shift) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(lambda), 0);
  if (shift >= 0)
    accumulate_counts(a, b, shift, lambda, counts);
  else
    // C(a,b)(-v) collects a_i against b_{i+v}: same loop with the roles of
    // the operands swapped and every difference negated.
    accumulate_counts(b, a, -shift, lambda, counts);
  if (shift < 0) {
    std::vector<std::int64_t> neg(counts.size(), 0);
    neg[0] = counts[0];
    for (std::size_t d = 1; d < counts.size(); ++d)
      neg[d] = counts[counts.size() - d];
    counts = std::move(neg);
  }
  return counts;
}

CorrelationValue value_of(const CyclotomicRing& ring,
                          const std::vector<std::int64_t>& counts) {
  return {ring.from_exponent_counts(counts), ring.embed_counts(counts)};
}

}  // namespace

std::string_view to_string(SetClass c) {
  switch (c) {
    case SetClass::Ccc: return "CCC";
    case SetClass::Mogcs: return "MOGCS";
    case SetClass::ComplementarySetOnly: return "ComplementarySet-only";
    case SetClass::Fail: return "Fail";
  }
  throw std::invalid_argument("unknown classification");
}

CorrelationValue cross_correlation(const ExponentSequence& a,
                                   const ExponentSequence& b, Residue shift) {
  check_pair(a, b);
  const CyclotomicRing ring(a.lambda);
  const Eigen::Index len = a.values.size();
  if (shift <= -len || shift >= len) {
    std::vector<std::int64_t> empty(static_cast<std::size_t>(a.lambda), 0);
    return value_of(ring, empty);
  }
  const ResidueMatrix ma = a.values.transpose();
  const ResidueMatrix mb = b.values.transpose();
  return value_of(ring, counts_at(ma, mb, a.lambda, shift));
}

CorrelationValue code_correlation_sum(const Code& a, const Code& b,
                                      Residue shift) {
  check_pair(a, b);
  const CyclotomicRing ring(a.lambda);
  if (shift <= -a.length() || shift >= a.length()) {
    std::vector<std::int64_t> empty(static_cast<std::size_t>(a.lambda), 0);
    return value_of(ring, empty);
  }
  return value_of(ring, counts_at(a.rows, b.rows, a.lambda, shift));
}

namespace {

CorrelationProfile profile_of(const ResidueMatrix& a, const ResidueMatrix& b,
                              Residue lambda) {
  const CyclotomicRing ring(lambda);
  const Residue len = a.cols();
  CorrelationProfile profile;
  profile.length = len;
  const std::size_t slots = static_cast<std::size_t>(2 * len - 1);
  profile.shifts.resize(slots);
  profile.values.resize(slots);
  profile.exact_zero.resize(slots);
  // Positive shifts directly; negative ones through the mirrored pair,
  // since C(a,b)(-u) is the conjugate of C(b,a)(u) (zeroness carries over).
  for (Residue u = 0; u < len; ++u) {
    std::vector<std::int64_t> counts = counts_at(a, b, lambda, u);
    const std::size_t slot = static_cast<std::size_t>(len - 1 + u);
    profile.shifts[slot] = u;
    profile.values[slot] = ring.embed_counts(counts);
    profile.exact_zero[slot] = ring.counts_are_zero(counts);
  }
  for (Residue u = 1; u < len; ++u) {
    std::vector<std::int64_t> counts = counts_at(b, a, lambda, u);
    const std::size_t slot = static_cast<std::size_t>(len - 1 - u);
    profile.shifts[slot] = -u;
    profile.values[slot] = std::conj(ring.embed_counts(counts));
    profile.exact_zero[slot] = ring.counts_are_zero(counts);
  }
  return profile;
}

}  // namespace

CorrelationProfile correlation_profile(const ExponentSequence& a,
                                       const ExponentSequence& b) {
  check_pair(a, b);
  const ResidueMatrix ma = a.values.transpose();
  const ResidueMatrix mb = b.values.transpose();
  return profile_of(ma, mb, a.lambda);
}

CorrelationProfile codeset_profile(const CodeSet& set, std::size_t mu1,
                                   std::size_t mu2) {
  validate(set);
  if (mu1 >= set.size() || mu2 >= set.size())
    throw std::out_of_range("code index outside the set");
  return profile_of(set.codes[mu1].rows, set.codes[mu2].rows, set.lambda);
}

VerificationReport verify_code_set(const CodeSet& set,
                                   const VerifyOptions& options) {
  validate(set);
  const std::size_t K = set.size();
  const Eigen::Index M = set.code_size();
  const Eigen::Index L = set.length();
  const Residue lambda = set.lambda;
  if (lambda > kMaxCountOrder)
    throw CapacityError("modulus exceeds the dense count cap");

  const unsigned __int128 work = static_cast<unsigned __int128>(K) * K *
                                 static_cast<unsigned __int128>(M) *
                                 static_cast<unsigned __int128>(L) * L;
  if (work > options.max_work)
    throw CapacityError("verification work estimate exceeds the budget");

  // Exact mode goes through Z[w]; float mode only thresholds magnitudes and
  // imposes no order cap beyond the count vector itself.
  std::optional<CyclotomicRing> ring;
  std::vector<std::complex<double>> roots;
  if (options.exact)
    ring.emplace(lambda);
  else
    roots = unit_roots(lambda);

  VerificationReport report;
  report.set_size = K;
  report.code_size = M;
  report.length = L;
  report.lambda = lambda;

  const double tolerance =
      options.tolerance_scale * static_cast<double>(M) * static_cast<double>(L);
  bool auto_ok = true;
  bool cross_ok = true;
  bool exact_nonzero_seen = false;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(lambda));

  for (std::size_t mu1 = 0; mu1 < K; ++mu1) {
    for (std::size_t mu2 = 0; mu2 < K; ++mu2) {
      const ResidueMatrix& a = set.codes[mu1].rows;
      const ResidueMatrix& b = set.codes[mu2].rows;
      for (Residue u = 0; u < L; ++u) {
        std::fill(counts.begin(), counts.end(), 0);
        accumulate_counts(a, b, u, lambda, counts);
        if (mu1 == mu2 && u == 0) {
          // Same code, shift zero: every difference is 0, so the measured
          // peak is M*L by construction; record it rather than assume it.
          report.peak = counts[0];
          continue;
        }
        const std::complex<double> value = options.exact
                                               ? ring->embed_counts(counts)
                                               : embed_with(roots, counts);
        report.worst_offpeak =
            std::max(report.worst_offpeak, std::abs(value));
        bool violated;
        if (options.exact) {
          violated = !ring->counts_are_zero(counts);
          if (violated) exact_nonzero_seen = true;
        } else {
          violated = std::abs(value) > tolerance;
        }
        if (violated) {
          report.violations.push_back({mu1, mu2, u, value});
          (mu1 == mu2 ? auto_ok : cross_ok) = false;
        }
      }
    }
  }

  report.offpeak_exactly_zero = options.exact && !exact_nonzero_seen;
  if (auto_ok && cross_ok)
    report.classification = static_cast<Eigen::Index>(K) == M
                                ? SetClass::Ccc
                                : SetClass::Mogcs;
  else if (auto_ok)
    report.classification = SetClass::ComplementarySetOnly;
  else
    report.classification = SetClass::Fail;
  return report;
}

VerificationReport verify_gcp(const ExponentSequence& a,
                              const ExponentSequence& b,
                              const VerifyOptions& options) {
  check_pair(a, b);
  Code code{a.lambda, ResidueMatrix(2, a.values.size())};
  code.rows.row(0) = a.values.transpose();
  code.rows.row(1) = b.values.transpose();
  CodeSet set{a.lambda, {std::move(code)}, {{0}}};
  return verify_code_set(set, options);
}

}  // namespace ccc
