#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "parcr/rational.hpp"
#include "parcr/unity.hpp"

namespace parcr {

// Multiset of eigenvalues of an order-r automorphism, stored as multiplicity
// per exponent e in {0,...,r-1}; the eigenvalue is exp(2 pi i e / r) and its
// b-value is e/r.
class Spectrum {
 public:
  explicit Spectrum(long long order)
      : order_(order), multiplicities_(check_order(order), 0) {}

  long long order() const { return order_; }

  void add(long long exponent, long long count) {
    if (count < 0) throw std::domain_error("Spectrum: negative multiplicity");
    multiplicities_[static_cast<std::size_t>(residue(exponent, order_))] +=
        count;
  }

  long long multiplicity(long long exponent) const {
    if (exponent < 0 || exponent >= order_) {
      throw std::out_of_range("Spectrum: exponent " + std::to_string(exponent) +
                              " outside [0, " + std::to_string(order_) + ")");
    }
    return multiplicities_[static_cast<std::size_t>(exponent)];
  }

  Rational b_value(long long exponent) const {
    if (exponent < 0 || exponent >= order_) {
      throw std::out_of_range("Spectrum: exponent out of range");
    }
    return Rational(exponent, order_);
  }

  long long total() const {
    long long sum = 0;
    for (long long mult : multiplicities_) sum += mult;
    return sum;
  }

  long long nonzero_exponent_total() const {
    return total() - multiplicities_[0];
  }

  Spectrum& operator+=(const Spectrum& other) {
    if (order_ != other.order_) {
      throw std::invalid_argument("Spectrum: mixed orders " +
                                  std::to_string(order_) + " and " +
                                  std::to_string(other.order_));
    }
    for (std::size_t e = 0; e < multiplicities_.size(); ++e) {
      multiplicities_[e] += other.multiplicities_[e];
    }
    return *this;
  }

  friend Spectrum operator+(Spectrum lhs, const Spectrum& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  static long long check_order(long long order) {
    if (order < 1) throw std::domain_error("Spectrum: order must be >= 1");
    return order;
  }

  long long order_;
  std::vector<long long> multiplicities_;
};

}  // namespace parcr
