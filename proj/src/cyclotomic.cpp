#include "ccc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ccc/numbers.hpp"

namespace ccc {

namespace {

// Root orders up to this bound get a precomputed w^j coordinate table
// (lambda * phi(lambda) entries); larger orders reduce by division per call.
constexpr Residue kPowerTableMaxOrder = 2048;

std::vector<Residue> divisors_of(Residue n) {
  std::vector<Residue> divs;
  for (Residue d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divs.push_back(d);
    if (d != n / d) divs.push_back(n / d);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Quotient of num / den over Z; den monic, division known to be exact.
std::vector<BigInt> exact_div(std::vector<BigInt> num,
                              const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  const std::size_t qn = num.size() - 1 - dn;
  std::vector<BigInt> quot(qn + 1);
  for (std::size_t k = qn + 1; k-- > 0;) {
    BigInt c = num[k + dn];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k + i] -= c * den[i];
  }
  return quot;
}

// Remainder of the counts polynomial mod the monic modulus phi.
void reduce_mod(std::vector<BigInt>& poly, const std::vector<BigInt>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    BigInt c = poly[k];
    if (c == 0) continue;
    poly[k] = 0;
    for (std::size_t i = 0; i < deg; ++i) poly[k - deg + i] -= c * phi[i];
  }
  poly.resize(deg);
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(Residue lambda) {
  if (lambda < 1)
    throw std::invalid_argument("cyclotomic order must be positive");
  if (lambda > kMaxCyclotomicOrder)
    throw CapacityError("cyclotomic order exceeds supported cap");
  // Phi_d = (x^d - 1) / prod(Phi_e : e | d, e < d), built over the divisor
  // lattice in increasing order.
  std::vector<std::pair<Residue, std::vector<BigInt>>> phi_by_divisor;
  for (Residue d : divisors_of(lambda)) {
    std::vector<BigInt> p(static_cast<std::size_t>(d) + 1);
    p.front() = -1;
    p.back() = 1;
    for (const auto& [e, phi_e] : phi_by_divisor) {
      if (d % e == 0) p = exact_div(std::move(p), phi_e);
    }
    phi_by_divisor.emplace_back(d, std::move(p));
  }
  return std::move(phi_by_divisor.back().second);
}

CyclotomicInt::CyclotomicInt(Residue lambda, std::vector<BigInt> coeffs)
    : lambda_(lambda), coeffs_(std::move(coeffs)) {
  if (lambda_ < 1)
    throw std::invalid_argument("cyclotomic order must be positive");
  if (static_cast<Residue>(coeffs_.size()) != euler_phi(lambda_))
    throw std::invalid_argument(
        "coordinate count must equal the basis degree phi(lambda)");
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigInt& c) { return c == 0; });
}

CyclotomicRing::CyclotomicRing(Residue lambda)
    : lambda_(lambda), phi_(cyclotomic_polynomial(lambda)) {
  degree_ = static_cast<int>(phi_.size()) - 1;
  roots_.resize(static_cast<std::size_t>(lambda_));
  for (Residue j = 0; j < lambda_; ++j) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                   static_cast<double>(lambda_);
    roots_[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
  }
  if (lambda_ > kPowerTableMaxOrder) return;

  // Row j of the table: coordinates of w^j, built by shift-and-reduce
  // (x * x^{deg-1} == -phi_0 - phi_1 x - ... since phi is monic).
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(lambda_));
  std::vector<BigInt> rep(static_cast<std::size_t>(degree_));
  rep[0] = 1;
  for (Residue j = 0; j < lambda_; ++j) {
    rows[static_cast<std::size_t>(j)] = rep;
    BigInt top = rep[static_cast<std::size_t>(degree_) - 1];
    for (std::size_t i = static_cast<std::size_t>(degree_); i-- > 1;)
      rep[i] = rep[i - 1] - top * phi_[i];
    rep[0] = -top * phi_[0];
  }
  has_table_ = true;

  BigInt max_abs = 0;
  for (const auto& row : rows)
    for (const auto& e : row) {
      BigInt a = abs(e);
      if (a > max_abs) max_abs = a;
    }
  // Leave headroom so sum|counts| * max|entry| stays below 2^62.
  if (max_abs <= BigInt(1) << 40) {
    table_fits64_ = true;
    table64_.resize(lambda_, degree_);
    for (Residue j = 0; j < lambda_; ++j)
      for (int i = 0; i < degree_; ++i)
        table64_(j, i) = rows[static_cast<std::size_t>(j)]
                             [static_cast<std::size_t>(i)]
                                 .convert_to<std::int64_t>();
    std::int64_t m =
        std::max<std::int64_t>(1, max_abs.convert_to<std::int64_t>());
    safe_count_sum_ = (std::int64_t{1} << 62) / m;
  } else {
    table_big_ = std::move(rows);
  }
}

void CyclotomicRing::reduce_big(std::span<const std::int64_t> counts,
                                std::vector<BigInt>& out) const {
  out.assign(static_cast<std::size_t>(degree_), 0);
  if (has_table_) {
    for (Residue j = 0; j < lambda_; ++j) {
      std::int64_t c = counts[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      if (table_fits64_) {
        for (int i = 0; i < degree_; ++i)
          out[static_cast<std::size_t>(i)] += BigInt(c) * table64_(j, i);
      } else {
        const auto& row = table_big_[static_cast<std::size_t>(j)];
        for (int i = 0; i < degree_; ++i)
          out[static_cast<std::size_t>(i)] += c * row[static_cast<std::size_t>(i)];
      }
    }
    return;
  }
  std::vector<BigInt> poly(counts.begin(), counts.end());
  reduce_mod(poly, phi_);
  out = std::move(poly);
}

CyclotomicInt CyclotomicRing::from_exponent_counts(
    std::span<const std::int64_t> counts) const {
  if (static_cast<Residue>(counts.size()) != lambda_)
    throw std::invalid_argument("count vector length must equal the root order");
  std::vector<BigInt> coeffs;
  reduce_big(counts, coeffs);
  return CyclotomicInt(lambda_, std::move(coeffs));
}

bool CyclotomicRing::counts_are_zero(
    std::span<const std::int64_t> counts) const {
  if (static_cast<Residue>(counts.size()) != lambda_)
    throw std::invalid_argument("count vector length must equal the root order");
  if (table_fits64_) {
    unsigned __int128 sum_abs = 0;
    for (std::int64_t c : counts) {
      std::uint64_t u = static_cast<std::uint64_t>(c);
      sum_abs += c < 0 ? std::uint64_t{0} - u : u;
    }
    if (sum_abs <= static_cast<unsigned __int128>(safe_count_sum_)) {
      Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic> acc =
          Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>::Zero(degree_);
      for (Residue j = 0; j < lambda_; ++j) {
        std::int64_t c = counts[static_cast<std::size_t>(j)];
        if (c != 0) acc.noalias() += c * table64_.row(j);
      }
      return (acc.array() == 0).all();
    }
  }
  std::vector<BigInt> coeffs;
  reduce_big(counts, coeffs);
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const BigInt& c) { return c == 0; });
}

std::complex<double> CyclotomicRing::embed_counts(
    std::span<const std::int64_t> counts) const {
  if (static_cast<Residue>(counts.size()) != lambda_)
    throw std::invalid_argument("count vector length must equal the root order");
  std::complex<double> v{0.0, 0.0};
  for (Residue j = 0; j < lambda_; ++j) {
    std::int64_t c = counts[static_cast<std::size_t>(j)];
    if (c != 0)
      v += static_cast<double>(c) * roots_[static_cast<std::size_t>(j)];
  }
  return v;
}

std::complex<double> CyclotomicRing::embed(const CyclotomicInt& v) const {
  if (v.order() != lambda_)
    throw std::invalid_argument("element belongs to a different root order");
  std::complex<double> out{0.0, 0.0};
  for (int i = 0; i < degree_; ++i) {
    const BigInt& c = v.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0)
      out += c.convert_to<double>() * roots_[static_cast<std::size_t>(i)];
  }
  return out;
}

CyclotomicInt cyclo_from_exponent_counts(std::span<const std::int64_t> counts,
                                         Residue lambda) {
  return CyclotomicRing(lambda).from_exponent_counts(counts);
}

}  // namespace ccc
