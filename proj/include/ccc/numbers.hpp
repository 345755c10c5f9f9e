#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccc/types.hpp"

namespace ccc {

struct PrimePower {
  Residue prime = 0;
  int multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, multiplicities >= 1.
struct Factorization {
  std::vector<PrimePower> factors;

  Residue value() const;  // product of all p^m, overflow-checked
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// n >= 2, else std::domain_error("length must exceed 1").
Factorization factorize(Residue n);

// Least common multiple of a non-empty list of positive values.
Residue lcm_all(std::span<const Residue> values);

Residue euler_phi(Residue n);  // n >= 1

// Product of the distinct primes dividing n.  n >= 1; radical(1) = 1.
Residue radical(Residue n);

// base >= 1, exp >= 0; CapacityError on 64-bit overflow.
Residue checked_pow(Residue base, int exp);

// Digits of i in base p, least significant first, exactly m of them.
// Requires p >= 2, m >= 0, 0 <= i < p^m.
std::vector<int> to_base_p_vector(Residue i, Residue p, int m);

// Inverse of to_base_p_vector: every digit must lie in [0, p).
Residue from_base_p_vector(std::span<const int> digits, Residue p);

}  // namespace ccc
