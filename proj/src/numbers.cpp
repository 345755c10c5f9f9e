#include "ccc/numbers.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace ccc {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (a %= m; e != 0; e >>= 1) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

// Witness set covering the full 64-bit range (Sorenson & Webster).
constexpr std::uint64_t kWitnesses[] = {2,  3,  5,  7,  11, 13,
                                        17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(Residue n) {
  if (n < 2) throw std::domain_error("length must exceed 1");
  Factorization out;
  auto strip = [&](Residue p) {
    int m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (m > 0) out.factors.push_back({p, m});
  };
  strip(2);
  strip(3);
  for (Residue f = 5; f * f <= n; f += 6) {
    strip(f);
    strip(f + 2);
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

Residue Factorization::value() const {
  Residue v = 1;
  for (const auto& [p, m] : factors) {
    for (int j = 0; j < m; ++j) {
      if (v > std::numeric_limits<Residue>::max() / p)
        throw CapacityError("factorization value exceeds 64-bit range");
      v *= p;
    }
  }
  return v;
}

Residue lcm_all(std::span<const Residue> values) {
  if (values.empty()) throw std::invalid_argument("lcm of an empty list");
  Residue acc = 1;
  for (Residue v : values) {
    if (v < 1) throw std::invalid_argument("lcm arguments must be positive");
    Residue g = std::gcd(acc, v);
    unsigned __int128 next =
        static_cast<unsigned __int128>(acc / g) * static_cast<unsigned __int128>(v);
    if (next > static_cast<unsigned __int128>(std::numeric_limits<Residue>::max()))
      throw CapacityError("lcm exceeds 64-bit range");
    acc = static_cast<Residue>(next);
  }
  return acc;
}

Residue euler_phi(Residue n) {
  if (n < 1) throw std::domain_error("euler_phi requires n >= 1");
  if (n == 1) return 1;
  Residue phi = 1;
  for (const auto& [p, m] : factorize(n).factors) {
    phi *= p - 1;
    for (int j = 1; j < m; ++j) phi *= p;
  }
  return phi;
}

Residue radical(Residue n) {
  if (n < 1) throw std::domain_error("radical requires n >= 1");
  if (n == 1) return 1;
  Residue r = 1;
  for (const auto& [p, m] : factorize(n).factors) r *= p;
  return r;
}

Residue checked_pow(Residue base, int exp) {
  if (base < 1 || exp < 0) throw std::invalid_argument("checked_pow domain");
  Residue v = 1;
  for (int j = 0; j < exp; ++j) {
    if (v > std::numeric_limits<Residue>::max() / base)
      throw CapacityError("power exceeds 64-bit range");
    v *= base;
  }
  return v;
}

std::vector<int> to_base_p_vector(Residue i, Residue p, int m) {
  if (p < 2) throw std::invalid_argument("digit base must be at least 2");
  if (m < 0) throw std::invalid_argument("digit count must be non-negative");
  if (i < 0 || i >= checked_pow(p, m))
    throw std::out_of_range("index outside [0, p^m)");
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    digits[static_cast<std::size_t>(j)] = static_cast<int>(i % p);
    i /= p;
  }
  return digits;
}

Residue from_base_p_vector(std::span<const int> digits, Residue p) {
  if (p < 2) throw std::invalid_argument("digit base must be at least 2");
  Residue v = 0;
  for (std::size_t j = digits.size(); j-- > 0;) {
    int d = digits[j];
    if (d < 0 || d >= p) throw std::out_of_range("digit outside [0, p)");
    v = v * p + d;
  }
  return v;
}

}  // namespace ccc
