#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcr/geometry.hpp"
#include "parcr/rational.hpp"
#include "parcr/shifts.hpp"

namespace parcr {

// Dimension per cohomological degree (real-degree convention), carried
// against the span it lives on. Degrees are rationals; twisted contributions
// land at non-integral degrees.
class GradedDims {
 public:
  GradedDims() = default;

  explicit GradedDims(Rational span) : span_(std::move(span)) {
    if (span_ < 0) throw std::domain_error("GradedDims: negative span");
  }

  const Rational& span() const { return span_; }

  void add(const Rational& degree, const Integer& dim) {
    if (dim < 0) throw std::domain_error("GradedDims: negative dimension");
    if (degree < 0 || degree > span_) {
      throw std::domain_error("GradedDims: degree " + to_string(degree) +
                              " outside [0, " + to_string(span_) + "]");
    }
    if (dim == 0) return;
    entries_[degree] += dim;
  }

  Integer at(const Rational& degree) const {
    const auto it = entries_.find(degree);
    return it == entries_.end() ? Integer(0) : it->second;
  }

  const std::map<Rational, Integer>& entries() const { return entries_; }

  Integer total() const {
    Integer sum = 0;
    for (const auto& [degree, dim] : entries_) sum += dim;
    return sum;
  }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  Rational span_{};
  std::map<Rational, Integer> entries_;
};

// The two externally supplied Poincare tables: the ambient moduli space on
// [0, 2 dim] and the quotiented fixed locus on [0, 2(r-1)(g-1)].
struct SectorInput {
  GradedDims untwisted;
  GradedDims prym_quotient;
};

// Additive assembly: out(q) = untwisted(q)
//   + (r^{2g} - 1) * sum over l of mult(l) * prym(q - 2 shift(l)).
inline GradedDims assemble(const GeometryParams& p, const SectorInput& in) {
  const InvariantReport rep = invariants(p);
  const Rational full_span(rep.real_dim_moduli);
  const Rational prym_span(2 * rep.complex_dim_fixed);
  if (in.untwisted.span() != full_span) {
    throw std::domain_error("assemble: untwisted span " +
                            to_string(in.untwisted.span()) + ", expected " +
                            to_string(full_span));
  }
  if (in.prym_quotient.span() != prym_span) {
    throw std::domain_error("assemble: prym_quotient span " +
                            to_string(in.prym_quotient.span()) +
                            ", expected " + to_string(prym_span));
  }

  GradedDims out(full_span);
  for (const auto& [degree, dim] : in.untwisted.entries()) out.add(degree, dim);

  const Integer twist_count = rep.gamma_order - 1;
  for (const auto& entry : shift_table(p)) {
    const Integer weight = twist_count * entry.components;
    const Rational offset = Rational(2) * entry.shift;
    for (const auto& [degree, dim] : in.prym_quotient.entries()) {
      out.add(degree + offset, weight * dim);
    }
  }
  return out;
}

// Palindromicity against the table's own span: lists every degree q with
// t(q) != t(span - q).
struct DualityReport {
  Rational span;
  std::vector<Rational> bad_degrees;
  bool ok = false;
};

inline DualityReport duality_check(const GradedDims& t) {
  DualityReport rep;
  rep.span = t.span();
  std::map<Rational, Integer> mirror;
  for (const auto& [degree, dim] : t.entries()) {
    mirror[degree] = dim;
    mirror.try_emplace(rep.span - degree, 0);
  }
  for (const auto& [degree, dim] : mirror) {
    if (t.at(degree) != t.at(rep.span - degree)) {
      rep.bad_degrees.push_back(degree);
    }
  }
  rep.ok = rep.bad_degrees.empty();
  return rep;
}

// A sector label: the untwisted sector or a twisted sector's base tuple.
class SectorRef {
 public:
  static SectorRef untwisted() { return SectorRef(false, {}); }

  static SectorRef twisted(std::vector<int> l) {
    return SectorRef(true, std::move(l));
  }

  bool is_twisted() const { return twisted_; }

  const std::vector<int>& l() const {
    if (!twisted_) {
      throw std::domain_error("SectorRef: the untwisted sector has no l-tuple");
    }
    return l_;
  }

  friend bool operator==(const SectorRef&, const SectorRef&) = default;

 private:
  SectorRef(bool twisted, std::vector<int> l)
      : twisted_(twisted), l_(std::move(l)) {}

  bool twisted_ = false;
  std::vector<int> l_;
};

enum class PairingConvention { same_sector, complementary_sector };

// Sum of the two internal (fixed-locus) degrees of a pairing of (sector, q)
// with its partner at ambient degree 2d - q. A degree-consistent pairing
// must make this 2(r-1)(g-1) on twisted sectors and 2d on the untwisted one.
// The same-sector reading fails this for every sector with shift != codim/2.
inline Rational pairing_internal_degree_sum(const SectorRef& sector,
                                            const Rational& q,
                                            const GeometryParams& p,
                                            PairingConvention convention) {
  const InvariantReport rep = invariants(p);
  const Rational ambient_sum =
      Rational(rep.real_dim_moduli);  // q + (2d - q)
  if (!sector.is_twisted()) return ambient_sum;
  const Rational own_shift = shift_closed_form(sector.l(), p);
  const Rational partner_shift =
      convention == PairingConvention::same_sector
          ? own_shift
          : shift_closed_form(inverse_tuple(sector.l(), p.r), p);
  return ambient_sum - Rational(2) * own_shift - Rational(2) * partner_shift;
}

// The degree-consistent Poincare partner: the untwisted sector pairs with
// itself at 2d - q; a twisted sector with tuple l pairs with the
// componentwise inverse r - l at 2d - q. The internal degrees then sum to
// 2(r-1)(g-1) exactly.
inline std::pair<SectorRef, Rational> pairing_partner(const SectorRef& sector,
                                                      const Rational& q,
                                                      const GeometryParams& p) {
  const InvariantReport rep = invariants(p);
  const Rational full_span(rep.real_dim_moduli);
  if (!sector.is_twisted()) {
    if (q < 0 || q > full_span) {
      throw std::domain_error("pairing_partner: degree " + to_string(q) +
                              " outside [0, " + to_string(full_span) + "]");
    }
    return {SectorRef::untwisted(), full_span - q};
  }
  detail::check_l_tuple(sector.l(), p, "pairing_partner");
  const Rational internal = q - Rational(2) * shift_closed_form(sector.l(), p);
  const Rational prym_span(2 * rep.complex_dim_fixed);
  if (internal < 0 || internal > prym_span) {
    throw std::domain_error("pairing_partner: internal degree " +
                            to_string(internal) + " outside [0, " +
                            to_string(prym_span) + "]");
  }
  return {SectorRef::twisted(inverse_tuple(sector.l(), p.r)), full_span - q};
}

// A sector-component triple whose ages cannot belong to a commuting pair of
// twists: the rank formula came out non-integral.
class InvalidComponentCombination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rank of the obstruction bundle on a triple intersection:
//   dim_T - dim_moduli + shift_1 + shift_2 + shift_3
// in complex dimensions. dim_T is the (externally known) dimension of the
// intersection locus; the shifts are per-component ages, each nonnegative
// with r * shift integral.
inline Rational obstruction_rank(long long dim_T_complex,
                                 const GeometryParams& p,
                                 const std::vector<Rational>& shifts) {
  const InvariantReport rep = invariants(p);
  if (shifts.size() != 3) {
    throw std::invalid_argument("obstruction_rank: exactly three shifts");
  }
  Rational sum = 0;
  for (const auto& s : shifts) {
    if (s < 0 || !is_integral(s * Rational(p.r))) {
      throw std::invalid_argument("obstruction_rank: " + to_string(s) +
                                  " is not a valid age (needs s >= 0 and r*s "
                                  "integral)");
    }
    sum += s;
  }
  const Rational rank = Rational(dim_T_complex) -
                        Rational(rep.complex_dim_moduli) + sum;
  if (!is_integral(rank)) {
    throw InvalidComponentCombination(
        "obstruction_rank: non-integral rank " + to_string(rank) +
        "; the component triple is incompatible");
  }
  if (rank < 0) {
    throw std::domain_error("obstruction_rank: negative rank " +
                            to_string(rank));
  }
  return rank;
}

// Orbifold integration normalization: divide by the order of the group.
inline Rational orbifold_scale(const Rational& value, const GeometryParams& p) {
  require_valid(p);
  return value / Rational(integer_pow(Integer(p.r), 2 * p.g));
}

}  // namespace parcr
