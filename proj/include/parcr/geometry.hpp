#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "parcr/rational.hpp"

namespace parcr {

// The tuple (r, g, m, d): rank (a prime), genus, number of marked points,
// and the degree of the fixed determinant.
struct GeometryParams {
  long long r = 2;
  long long g = 2;
  long long m = 0;
  long long d = 1;

  friend bool operator==(const GeometryParams&, const GeometryParams&) =
      default;
};

// Trial division; the rank is small by design.
inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

// Every violated constraint, in a fixed order; empty means valid.
// The upper bounds keep all derived dimension arithmetic inside 64 bits.
inline std::vector<std::string> validate(const GeometryParams& p) {
  std::vector<std::string> violations;
  if (!is_prime(p.r)) {
    violations.push_back("r must be prime (got " + std::to_string(p.r) + ")");
  }
  if (p.r > 1000) {
    violations.push_back("r must be at most 1000 (got " + std::to_string(p.r) +
                         ")");
  }
  if (p.g < 2) {
    violations.push_back("g must be at least 2 (got " + std::to_string(p.g) +
                         ")");
  }
  if (p.g > 1000000) {
    violations.push_back("g must be at most 1000000 (got " +
                         std::to_string(p.g) + ")");
  }
  if (p.m < 0) {
    violations.push_back("m must be nonnegative (got " + std::to_string(p.m) +
                         ")");
  }
  if (p.m > 64) {
    violations.push_back("m must be at most 64 (got " + std::to_string(p.m) +
                         ")");
  }
  if (p.r >= 2 && std::gcd(p.d, p.r) != 1) {
    violations.push_back("d must be coprime to r (got d = " +
                         std::to_string(p.d) + ", r = " + std::to_string(p.r) +
                         ")");
  }
  return violations;
}

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& violations) {
    std::string msg = "invalid parameters";
    for (const auto& v : violations) msg += "; " + v;
    return msg;
  }

  std::vector<std::string> violations_;
};

inline void require_valid(const GeometryParams& p) {
  auto violations = validate(p);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

// Numerical invariants of the moduli space, the torsion group, and the fixed
// loci. Dimensions are complex unless the field name says otherwise.
struct InvariantReport {
  long long complex_dim_moduli = 0;
  long long real_dim_moduli = 0;
  long long complex_dim_fixed = 0;
  long long codim_fixed = 0;
  Integer gamma_order;
  Integer component_count;

  friend bool operator==(const InvariantReport&, const InvariantReport&) =
      default;
};

inline InvariantReport invariants(const GeometryParams& p) {
  require_valid(p);
  InvariantReport rep;
  const long long r = p.r, g = p.g, m = p.m;
  rep.complex_dim_moduli = (r * r - 1) * (g - 1) + m * r * (r - 1) / 2;
  rep.real_dim_moduli = 2 * rep.complex_dim_moduli;
  rep.complex_dim_fixed = (r - 1) * (g - 1);
  rep.codim_fixed = rep.complex_dim_moduli - rep.complex_dim_fixed;
  rep.gamma_order = integer_pow(Integer(r), 2 * g);
  rep.component_count = integer_pow(factorial(r), m);
  return rep;
}

}  // namespace parcr
