#include "ccc/domain.hpp"

#include <limits>
#include <stdexcept>

namespace ccc {

namespace {
constexpr int kMaxVariables = 63;  // monomials are stored as variable bitmasks
}

MixedRadixDomain::MixedRadixDomain(std::vector<PrimePower> factors, Residue q)
    : factors_(std::move(factors)), q_(q) {
  if (factors_.empty())
    throw std::invalid_argument("domain needs at least one prime-power factor");
  if (q_ < 1) throw std::invalid_argument("q must be positive");
  std::vector<Residue> moduli;
  moduli.reserve(factors_.size() + 1);
  for (const auto& [p, m] : factors_) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("domain factor base must be prime");
    if (m < 1)
      throw std::invalid_argument("domain factor multiplicity must be positive");
    variable_count_ += m;
    if (variable_count_ > kMaxVariables)
      throw CapacityError("domain exceeds the variable cap");
    Residue len = checked_pow(p, m);
    factor_length_.push_back(len);
    unsigned __int128 next = static_cast<unsigned __int128>(length_) *
                             static_cast<unsigned __int128>(len);
    if (next > static_cast<unsigned __int128>(
                   std::numeric_limits<Residue>::max()))
      throw CapacityError("domain length exceeds 64-bit range");
    length_ = static_cast<Residue>(next);
    moduli.push_back(p);
  }
  moduli.push_back(q_);
  lambda_ = lcm_all(moduli);

  stride_.assign(factors_.size(), 1);
  for (std::size_t a = factors_.size() - 1; a-- > 0;)
    stride_[a] = stride_[a + 1] * factor_length_[a + 1];
  variable_offset_.assign(factors_.size(), 0);
  for (std::size_t a = 1; a < factors_.size(); ++a)
    variable_offset_[a] = variable_offset_[a - 1] + factors_[a - 1].multiplicity;
}

int MixedRadixDomain::variable_offset(int factor) const {
  return variable_offset_.at(static_cast<std::size_t>(factor));
}

Residue MixedRadixDomain::factor_length(int factor) const {
  return factor_length_.at(static_cast<std::size_t>(factor));
}

std::vector<Residue> MixedRadixDomain::factor_indices(Residue flat) const {
  if (flat < 0 || flat >= length_)
    throw std::out_of_range("flat index outside the domain");
  std::vector<Residue> idx(factors_.size());
  for (std::size_t a = 0; a < factors_.size(); ++a)
    idx[a] = flat / stride_[a] % factor_length_[a];
  return idx;
}

Residue MixedRadixDomain::flat_index(std::span<const Residue> indices) const {
  if (indices.size() != factors_.size())
    throw std::invalid_argument("one index per factor expected");
  Residue flat = 0;
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    if (indices[a] < 0 || indices[a] >= factor_length_[a])
      throw std::out_of_range("factor index outside [0, p^m)");
    flat += indices[a] * stride_[a];
  }
  return flat;
}

void MixedRadixDomain::point_at(Residue flat, std::span<int> out) const {
  if (flat < 0 || flat >= length_)
    throw std::out_of_range("flat index outside the domain");
  if (static_cast<int>(out.size()) != variable_count_)
    throw std::invalid_argument("point buffer size must match variable count");
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    Residue ia = flat / stride_[a] % factor_length_[a];
    const Residue p = factors_[a].prime;
    int* digits = out.data() + variable_offset_[a];
    for (int j = 0; j < factors_[a].multiplicity; ++j) {
      digits[j] = static_cast<int>(ia % p);
      ia /= p;
    }
  }
}

Eigen::MatrixXi MixedRadixDomain::enumerate_points() const {
  Eigen::MatrixXi points(length_, variable_count_);
  std::vector<int> buf(static_cast<std::size_t>(variable_count_));
  for (Residue i = 0; i < length_; ++i) {
    point_at(i, buf);
    for (int v = 0; v < variable_count_; ++v)
      points(i, v) = buf[static_cast<std::size_t>(v)];
  }
  return points;
}

bool operator==(const MixedRadixDomain& a, const MixedRadixDomain& b) {
  return a.factors_ == b.factors_ && a.q_ == b.q_;
}

}  // namespace ccc
