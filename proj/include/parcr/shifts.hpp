#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcr/geometry.hpp"
#include "parcr/rational.hpp"
#include "parcr/sectors.hpp"
#include "parcr/spectrum.hpp"
#include "parcr/unity.hpp"

namespace parcr {

// The definitional degree shift: sum of b-values over the spectrum,
// pi = sum_e mult(e) * e / r.
inline Rational shift_from_spectrum(const Spectrum& s) {
  long long weighted = 0;
  for (long long e = 0; e < s.order(); ++e) {
    weighted += s.multiplicity(e) * e;
  }
  return Rational(weighted, s.order());
}

namespace detail {

inline void check_l_tuple(const std::vector<int>& l, const GeometryParams& p,
                          const char* what) {
  if (l.size() != static_cast<std::size_t>(p.m)) {
    throw std::invalid_argument(std::string(what) + ": l-tuple has " +
                                std::to_string(l.size()) +
                                " entries, params expect " +
                                std::to_string(p.m));
  }
  for (int li : l) {
    if (li < 1 || li > p.r - 1) {
      throw std::domain_error(std::string(what) + ": l entry " +
                              std::to_string(li) + " outside [1, " +
                              std::to_string(p.r - 1) + "]");
    }
  }
}

}  // namespace detail

// Closed form for the shift of the component with base tuple l:
//   pi = (1/r) sum_i sum_{k=1}^{r-1} (r - [k c_i]_r) [k l_i c_i]_r
//        + r(r-1)(g-1)/2,
// where the c_i satisfy [l_i c_i]_r = const across points (one choice of the
// twisting root). When c is omitted the normalization c_i = l_i^{-1} mod r
// is used; the value is independent of the choice.
inline Rational shift_closed_form(
    const std::vector<int>& l, const GeometryParams& p,
    const std::optional<std::vector<int>>& c = std::nullopt) {
  require_valid(p);
  detail::check_l_tuple(l, p, "shift_closed_form");

  std::vector<long long> cs;
  cs.reserve(l.size());
  if (c) {
    if (c->size() != l.size()) {
      throw std::invalid_argument(
          "shift_closed_form: c-tuple size differs from l-tuple size");
    }
    std::optional<long long> common;
    for (std::size_t i = 0; i < l.size(); ++i) {
      const long long ci = (*c)[i];
      if (ci < 1 || ci > p.r - 1) {
        throw std::domain_error("shift_closed_form: c entry " +
                                std::to_string(ci) + " outside [1, " +
                                std::to_string(p.r - 1) + "]");
      }
      const long long s = residue(l[i] * ci, p.r);
      if (common && *common != s) {
        throw std::domain_error(
            "shift_closed_form: inconsistent c-tuple; [l_i c_i]_r differs "
            "across points");
      }
      common = s;
      cs.push_back(ci);
    }
  } else {
    for (int li : l) cs.push_back(mod_inverse(li, p.r));
  }

  long long flag_sum = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (long long k = 1; k <= p.r - 1; ++k) {
      flag_sum += (p.r - residue(k * cs[i], p.r)) * residue(k * l[i] * cs[i], p.r);
    }
  }
  return Rational(flag_sum, p.r) +
         Rational(p.r * (p.r - 1) * (p.g - 1), 2);
}

// Shift table over the base tuples: one row per l in {1,...,r-1}^m, with the
// number of components carrying that tuple according to the uniform census
// (r!/(r-1)) per point.
struct ShiftEntry {
  std::vector<int> l;
  Rational shift;
  Integer components;

  friend bool operator==(const ShiftEntry&, const ShiftEntry&) = default;
};

using ShiftTable = std::vector<ShiftEntry>;

inline ShiftTable shift_table(const GeometryParams& p) {
  require_valid(p);
  ShiftTable table;
  if (p.m == 0) {
    // Single empty tuple; the shift comes from the bundle spectrum alone.
    table.push_back(ShiftEntry{{},
                               shift_from_spectrum(bundle_spectrum(p)),
                               Integer(1)});
    return table;
  }
  const Integer rows = integer_pow(Integer(p.r - 1), p.m);
  if (rows > 1000000) {
    throw std::length_error("shift_table: " + rows.str() +
                            " rows exceed the table limit");
  }
  const Integer per_tuple = integer_pow(factorial(p.r) / (p.r - 1), p.m);
  std::vector<int> l(static_cast<std::size_t>(p.m), 1);
  while (true) {
    table.push_back(ShiftEntry{l, shift_closed_form(l, p), per_tuple});
    std::size_t pos = l.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++l[pos] <= p.r - 1) {
        done = false;
        break;
      }
      l[pos] = 1;
    }
    if (done) break;
  }
  return table;
}

// Verifies shift(l) + shift(r - l) = codim for every tuple in the table,
// where r - l is the componentwise inverse (the empty tuple at m = 0 is its
// own inverse).
struct ComplementarityReport {
  Rational expected;
  std::vector<std::pair<std::vector<int>, Rational>> violations;
  bool ok = false;
};

inline std::vector<int> inverse_tuple(const std::vector<int>& l, long long r) {
  std::vector<int> inv;
  inv.reserve(l.size());
  for (int li : l) inv.push_back(static_cast<int>(r - li));
  return inv;
}

inline ComplementarityReport complementarity_check(const GeometryParams& p) {
  const InvariantReport rep = invariants(p);
  ComplementarityReport out;
  out.expected = Rational(rep.codim_fixed);
  const ShiftTable table = shift_table(p);
  std::map<std::vector<int>, Rational> by_tuple;
  for (const auto& entry : table) by_tuple[entry.l] = entry.shift;
  for (const auto& entry : table) {
    const Rational sum = entry.shift + by_tuple.at(inverse_tuple(entry.l, p.r));
    if (sum != out.expected) out.violations.emplace_back(entry.l, sum);
  }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace parcr
