#pragma once

#include <stdexcept>
#include <string>

namespace parcr {

// Least non-negative representative of b mod r. Requires r >= 1.
inline long long residue(long long b, long long r) {
  if (r <= 0) throw std::domain_error("residue: modulus must be positive");
  long long v = b % r;
  return v < 0 ? v + r : v;
}

// Inverse of a mod m via the extended Euclidean algorithm.
// Requires gcd(a, m) = 1.
inline long long mod_inverse(long long a, long long m) {
  if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
  long long r0 = m, r1 = residue(a, m);
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    const long long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const long long s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) {
    throw std::domain_error("mod_inverse: " + std::to_string(a) +
                            " is not invertible mod " + std::to_string(m));
  }
  return residue(s0, m);
}

// An element of the cyclic group mu_r, stored as the exponent of a fixed
// primitive r-th root of unity. Purely symbolic: no complex numbers.
class UnityExponent {
 public:
  UnityExponent(long long exponent, long long order)
      : order_(order), exponent_(residue(exponent, check_order(order))) {}

  long long order() const { return order_; }
  long long exponent() const { return exponent_; }
  bool is_identity() const { return exponent_ == 0; }

  UnityExponent operator*(const UnityExponent& other) const {
    require_same_order(other);
    return UnityExponent(exponent_ + other.exponent_, order_);
  }

  UnityExponent inverse() const {
    return UnityExponent(order_ - exponent_, order_);
  }

  UnityExponent pow(long long k) const {
    return UnityExponent(exponent_ * residue(k, order_), order_);
  }

  friend bool operator==(const UnityExponent&, const UnityExponent&) = default;

 private:
  static long long check_order(long long order) {
    if (order < 1) {
      throw std::domain_error("UnityExponent: order must be at least 1");
    }
    return order;
  }

  void require_same_order(const UnityExponent& other) const {
    if (order_ != other.order_) {
      throw std::invalid_argument(
          "UnityExponent: mixed orders " + std::to_string(order_) + " and " +
          std::to_string(other.order_));
    }
  }

  long long order_;
  long long exponent_;
};

}  // namespace parcr
