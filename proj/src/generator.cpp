#include "ccc/generator.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ccc/numbers.hpp"

namespace ccc {

namespace {

// Uniform draw from [0, n) by rejection; never touches distribution classes
// whose output is implementation-defined.
std::uint64_t bounded_draw(std::mt19937_64& eng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % n;
}

// Seed terms of one block, shifted to variable offset `off` inside the
// domain of f.  lambda of the domain must be a multiple of spec.prime.
void add_seed_terms(MultivariableFunction& f, const FactorSpec& spec,
                    int off) {
  const Residue g = f.lambda() / spec.prime;
  const auto perm = spec.effective_permutation();
  const int m = spec.arity;
  for (int b = 0; b + 1 < m; ++b) {
    const std::array<int, 2> vars{off + perm[static_cast<std::size_t>(b)] - 1,
                                  off + perm[static_cast<std::size_t>(b) + 1] - 1};
    f.add_term(vars, g);
  }
  for (int j = 0; j < m; ++j) {
    if (spec.linear_coeffs.empty()) break;
    const std::array<int, 1> var{off + j};
    f.add_term(var, spec.linear_coeffs[static_cast<std::size_t>(j)]);
  }
}

// Row/code offsets of one block.  For m = 1 the two offsets address the
// same variable and must accumulate, which add_term guarantees.
void add_shift_terms(MultivariableFunction& f, const FactorSpec& spec,
                     int off, Residue alpha, Residue t) {
  if (alpha < 0 || alpha >= spec.prime)
    throw std::out_of_range("row index outside [0, p)");
  if (t < 0 || t >= spec.prime)
    throw std::out_of_range("code index outside [0, p)");
  const Residue g = f.lambda() / spec.prime;
  const auto perm = spec.effective_permutation();
  const std::array<int, 1> first{off + perm.front() - 1};
  const std::array<int, 1> last{off + perm.back() - 1};
  f.add_term(first, g * alpha);  // g * alpha < lambda, no overflow
  f.add_term(last, g * t);
}

}  // namespace

void FactorSpec::validate() const {
  if (!is_prime(static_cast<std::uint64_t>(prime)))
    throw std::invalid_argument("block base must be prime");
  if (arity < 1) throw std::invalid_argument("block arity must be positive");
  if (!permutation.empty()) {
    if (static_cast<int>(permutation.size()) != arity)
      throw std::invalid_argument("permutation must have one image per variable");
    std::vector<bool> seen(static_cast<std::size_t>(arity), false);
    for (int image : permutation) {
      if (image < 1 || image > arity || seen[static_cast<std::size_t>(image - 1)])
        throw std::invalid_argument("permutation must be a bijection of 1..m");
      seen[static_cast<std::size_t>(image - 1)] = true;
    }
  }
  if (!linear_coeffs.empty() &&
      static_cast<int>(linear_coeffs.size()) != arity)
    throw std::invalid_argument("one linear coefficient per variable expected");
}

std::vector<int> FactorSpec::effective_permutation() const {
  if (!permutation.empty()) return permutation;
  std::vector<int> identity(static_cast<std::size_t>(arity));
  std::iota(identity.begin(), identity.end(), 1);
  return identity;
}

MultivariableFunction seed_function(const FactorSpec& spec, Residue q) {
  spec.validate();
  MultivariableFunction f(MixedRadixDomain({{spec.prime, spec.arity}}, q));
  add_seed_terms(f, spec, 0);
  return f;
}

MultivariableFunction shifted_function(const MultivariableFunction& f,
                                       const FactorSpec& spec, Residue alpha,
                                       Residue t, Residue c) {
  spec.validate();
  const auto& factors = f.domain().factors();
  if (factors.size() != 1 || factors[0].prime != spec.prime ||
      factors[0].multiplicity != spec.arity)
    throw std::invalid_argument("function domain does not match the block");
  MultivariableFunction out = f;
  add_shift_terms(out, spec, 0, alpha, t);
  out.add_constant(c);
  return out;
}

CodeSet prime_power_ccc(const FactorSpec& spec, Residue q) {
  spec.validate();
  MixedRadixDomain dom({{spec.prime, spec.arity}}, q);
  MultivariableFunction f(dom);
  add_seed_terms(f, spec, 0);
  CodeSet out;
  out.lambda = dom.lambda();
  for (Residue t = 0; t < spec.prime; ++t) {
    Code code{dom.lambda(), ResidueMatrix(spec.prime, dom.length())};
    for (Residue alpha = 0; alpha < spec.prime; ++alpha) {
      MultivariableFunction row = f;
      add_shift_terms(row, spec, 0, alpha, t);
      row.add_constant(spec.constant);
      code.rows.row(alpha) = psi(row).values.transpose();
    }
    out.codes.push_back(std::move(code));
    out.labels.push_back({t});
  }
  return out;
}

std::pair<ExponentSequence, ExponentSequence> gdj_pair(
    int m, int h, const std::vector<int>& permutation,
    const std::vector<Residue>& coeffs, Residue c0, Residue c1) {
  if (h < 1) throw std::invalid_argument("modulus exponent must be positive");
  const Residue q = checked_pow(2, h);
  FactorSpec spec{2, m, permutation, coeffs, 0};
  MultivariableFunction f = seed_function(spec, q);
  MultivariableFunction a = f;
  a.add_constant(c0);
  MultivariableFunction b = f;
  const std::array<int, 1> first{spec.effective_permutation().front() - 1};
  b.add_term(first, q / 2);
  b.add_constant(c1);
  return {psi(a), psi(b)};
}

CodeSet composite_ccc(std::span<const FactorSpec> specs, Residue q) {
  if (specs.empty())
    throw std::invalid_argument("at least one block expected");
  std::vector<PrimePower> factors;
  factors.reserve(specs.size());
  for (const FactorSpec& spec : specs) {
    spec.validate();
    if (q % spec.prime != 0)
      throw ConstraintError(
          "the composite construction needs every block prime to divide q");
    factors.push_back({spec.prime, spec.arity});
  }
  const MixedRadixDomain dom(factors, q);
  const int k = static_cast<int>(specs.size());

  CodeSet out;
  out.lambda = dom.lambda();
  std::vector<Residue> t(specs.size(), 0);
  std::vector<Residue> alpha(specs.size(), 0);
  auto advance = [&](std::vector<Residue>& odo) {
    for (int a = k; a-- > 0;) {
      if (++odo[static_cast<std::size_t>(a)] <
          specs[static_cast<std::size_t>(a)].prime)
        return true;
      odo[static_cast<std::size_t>(a)] = 0;
    }
    return false;
  };

  Residue set_size = 1;
  for (const FactorSpec& spec : specs) {
    unsigned __int128 next = static_cast<unsigned __int128>(set_size) *
                             static_cast<unsigned __int128>(spec.prime);
    if (next > static_cast<unsigned __int128>(
                   std::numeric_limits<Residue>::max()))
      throw CapacityError("set size exceeds 64-bit range");
    set_size = static_cast<Residue>(next);
  }

  do {
    Code code{dom.lambda(),
              ResidueMatrix(static_cast<Eigen::Index>(set_size), dom.length())};
    std::fill(alpha.begin(), alpha.end(), 0);
    Eigen::Index row_index = 0;
    do {
      MultivariableFunction row(dom);
      for (int a = 0; a < k; ++a) {
        const auto ia = static_cast<std::size_t>(a);
        add_seed_terms(row, specs[ia], dom.variable_offset(a));
        add_shift_terms(row, specs[ia], dom.variable_offset(a), alpha[ia],
                        t[ia]);
        row.add_constant(specs[ia].constant);
      }
      code.rows.row(row_index++) = psi(row).values.transpose();
    } while (advance(alpha));
    out.codes.push_back(std::move(code));
    out.labels.push_back(t);
  } while (advance(t));
  return out;
}

std::vector<FactorSpec> default_factor_specs(const Factorization& fac) {
  std::vector<FactorSpec> specs;
  specs.reserve(fac.factors.size());
  for (const auto& [p, m] : fac.factors)
    specs.push_back({p, m, {}, {}, 0});
  return specs;
}

void randomize_factor_specs(std::span<FactorSpec> specs, Residue q,
                            std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  for (FactorSpec& spec : specs) {
    spec.validate();
    const std::array<Residue, 2> lams{spec.prime, q};
    const std::uint64_t lam = static_cast<std::uint64_t>(lcm_all(lams));
    // Draw order per block: permutation, linear coefficients, constant.
    std::vector<int> perm(static_cast<std::size_t>(spec.arity));
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t i = perm.size(); i-- > 1;)
      std::swap(perm[i], perm[bounded_draw(eng, i + 1)]);
    spec.permutation = std::move(perm);
    spec.linear_coeffs.resize(static_cast<std::size_t>(spec.arity));
    for (Residue& c : spec.linear_coeffs)
      c = static_cast<Residue>(bounded_draw(eng, lam));
    spec.constant = static_cast<Residue>(bounded_draw(eng, lam));
  }
}

CodeSet generate_for_length(Residue length, std::optional<Residue> q,
                            std::optional<std::uint64_t> seed) {
  const Factorization fac = factorize(length);
  const Residue q_eff = q.value_or(radical(length));
  std::vector<FactorSpec> specs = default_factor_specs(fac);
  if (seed) randomize_factor_specs(specs, q_eff, *seed);
  return composite_ccc(specs, q_eff);
}

}  // namespace ccc
