#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace ccc {

// All residues, moduli, lengths and shifts fit comfortably in 64 bits; the
// few places that could overflow (lcm accumulation, p^m products) check
// explicitly and raise CapacityError instead of wrapping.
using Residue = std::int64_t;

using ResidueVector = Eigen::Matrix<Residue, Eigen::Dynamic, 1>;
using ResidueMatrix =
    Eigen::Matrix<Residue, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// A request exceeds a documented implementation limit (root-order cap,
// verification work budget, 64-bit overflow).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A precondition tying several arguments together does not hold, e.g. the
// composite construction needs every factor prime to divide q.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Least non-negative representative of v mod m.  m > 0.
inline Residue mod_reduce(Residue v, Residue m) {
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace ccc
