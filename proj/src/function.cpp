#include "ccc/function.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace ccc {

void validate(const ExponentSequence& seq) {
  if (seq.lambda < 1)
    throw std::invalid_argument("sequence modulus must be positive");
  for (Eigen::Index i = 0; i < seq.values.size(); ++i) {
    Residue v = seq.values[i];
    if (v < 0 || v >= seq.lambda)
      throw std::invalid_argument("sequence entry outside [0, lambda)");
  }
}

MultivariableFunction::MultivariableFunction(MixedRadixDomain domain)
    : domain_(std::move(domain)) {}

std::uint64_t MultivariableFunction::mask_of(std::span<const int> vars) const {
  std::uint64_t mask = 0;
  for (int v : vars) {
    if (v < 0 || v >= domain_.variable_count())
      throw std::invalid_argument("variable index outside the domain");
    std::uint64_t bit = std::uint64_t{1} << v;
    if (mask & bit)
      throw std::invalid_argument("monomial exponents above 1 are not allowed");
    mask |= bit;
  }
  return mask;
}

void MultivariableFunction::add_term(std::span<const int> vars, Residue coeff) {
  std::uint64_t mask = mask_of(vars);
  // Sums and products of residues go through 128 bits: lambda itself may be
  // anywhere in the 64-bit range.
  __int128 c = terms_[mask] + static_cast<__int128>(mod_reduce(coeff, lambda()));
  Residue r = static_cast<Residue>(c % lambda());
  if (r == 0)
    terms_.erase(mask);
  else
    terms_[mask] = r;
}

Residue MultivariableFunction::coefficient(std::span<const int> vars) const {
  auto it = terms_.find(mask_of(vars));
  return it == terms_.end() ? 0 : it->second;
}

int MultivariableFunction::degree() const {
  int deg = 0;
  for (const auto& [mask, coeff] : terms_)
    deg = std::max(deg, std::popcount(mask));
  return deg;
}

Residue MultivariableFunction::evaluate(std::span<const int> point) const {
  if (static_cast<int>(point.size()) != domain_.variable_count())
    throw std::invalid_argument("point size must match variable count");
  const Residue lam = lambda();
  Residue acc = 0;
  for (const auto& [mask, coeff] : terms_) {
    Residue term = coeff;
    for (std::uint64_t bits = mask; bits != 0 && term != 0;
         bits &= bits - 1) {
      int v = std::countr_zero(bits);
      term = static_cast<Residue>(static_cast<__int128>(term) *
                                  point[static_cast<std::size_t>(v)] % lam);
    }
    acc = static_cast<Residue>((static_cast<__int128>(acc) + term) % lam);
  }
  return acc;
}

MultivariableFunction add(const MultivariableFunction& f,
                          const MultivariableFunction& g) {
  if (!(f.domain() == g.domain()))
    throw std::invalid_argument("summands must share a domain");
  MultivariableFunction out = f;
  for (const auto& [mask, coeff] : g.terms()) {
    std::vector<int> vars;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
      vars.push_back(std::countr_zero(bits));
    out.add_term(vars, coeff);
  }
  return out;
}

MultivariableFunction scale(const MultivariableFunction& f, Residue c) {
  MultivariableFunction out(f.domain());
  for (const auto& [mask, coeff] : f.terms()) {
    std::vector<int> vars;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
      vars.push_back(std::countr_zero(bits));
    out.add_term(vars,
                 static_cast<Residue>(static_cast<__int128>(coeff) *
                                      mod_reduce(c, f.lambda()) % f.lambda()));
  }
  return out;
}

ExponentSequence psi(const MultivariableFunction& f) {
  const MixedRadixDomain& dom = f.domain();
  ResidueVector values(dom.length());
  std::vector<int> point(static_cast<std::size_t>(dom.variable_count()));
  for (Residue i = 0; i < dom.length(); ++i) {
    dom.point_at(i, point);
    values[i] = f.evaluate(point);
  }
  return {dom.lambda(), std::move(values)};
}

Eigen::MatrixXi enumerate_domain(const MixedRadixDomain& domain) {
  return domain.enumerate_points();
}

}  // namespace ccc
