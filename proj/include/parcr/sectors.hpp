#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcr/geometry.hpp"
#include "parcr/rational.hpp"
#include "parcr/spectrum.hpp"
#include "parcr/unity.hpp"

namespace parcr {

// A filtration ordering of the r fiber summands at one marked point, as the
// image tuple (tau(0), ..., tau(r-1)).
using Permutation = std::vector<int>;

inline bool is_permutation_tuple(const Permutation& tau) {
  std::vector<bool> seen(tau.size(), false);
  for (int v : tau) {
    if (v < 0 || static_cast<std::size_t>(v) >= tau.size() || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

inline void require_permutation(const Permutation& tau, long long r,
                                const char* what) {
  if (tau.size() != static_cast<std::size_t>(r) || !is_permutation_tuple(tau)) {
    throw std::invalid_argument(std::string(what) +
                                ": not a permutation of {0,...," +
                                std::to_string(r - 1) + "}");
  }
}

// All r! permutations in lexicographic order. Exhaustive enumeration is
// supported for r <= 8; larger ranks exceed desk scale.
inline std::vector<Permutation> all_permutations(long long r) {
  if (r < 1) throw std::domain_error("all_permutations: r must be >= 1");
  if (r > 8) {
    throw std::length_error("all_permutations: r = " + std::to_string(r) +
                            " exceeds the enumeration limit of 8");
  }
  Permutation tau(static_cast<std::size_t>(r));
  std::iota(tau.begin(), tau.end(), 0);
  std::vector<Permutation> result;
  do {
    result.push_back(tau);
  } while (std::next_permutation(tau.begin(), tau.end()));
  return result;
}

// Eigenvalue exponents of the twist differential on the flag directions at
// one point: each pair u < v contributes Hom of the tau(u)-th summand into
// the tau(v)-th, twisted by lambda^{tau(u)} against lambda^{tau(v)}, i.e.
// exponent [a (tau(v) - tau(u))]_r. Exponent 0 never occurs and the total
// multiplicity is r(r-1)/2.
inline Spectrum flag_tangent_spectrum(const Permutation& tau,
                                      const UnityExponent& a) {
  const long long r = a.order();
  if (a.is_identity()) {
    throw std::domain_error(
        "flag_tangent_spectrum: the twist eigenvalue must be nontrivial");
  }
  require_permutation(tau, r, "flag_tangent_spectrum");
  Spectrum s(r);
  for (std::size_t u = 0; u < tau.size(); ++u) {
    for (std::size_t v = u + 1; v < tau.size(); ++v) {
      s.add(residue(a.exponent() * (tau[v] - tau[u]), r), 1);
    }
  }
  return s;
}

// The reference pattern: multiplicity r-c at exponent [l c]_r for c=1..r-1.
inline Spectrum canonical_spectrum(long long l, long long r) {
  if (r < 2) throw std::domain_error("canonical_spectrum: r must be >= 2");
  if (l < 1 || l > r - 1) {
    throw std::domain_error("canonical_spectrum: l = " + std::to_string(l) +
                            " outside [1, " + std::to_string(r - 1) + "]");
  }
  Spectrum s(r);
  for (long long c = 1; c <= r - 1; ++c) {
    s.add(residue(l * c, r), r - c);
  }
  return s;
}

// The unique l with canonical_spectrum(l, r) == s, or nullopt when the
// spectrum matches no canonical pattern. Distinct l give distinct patterns,
// so a match is unique.
inline std::optional<int> extract_base(const Spectrum& s) {
  const long long r = s.order();
  for (long long l = 1; l <= r - 1; ++l) {
    if (canonical_spectrum(l, r) == s) return static_cast<int>(l);
  }
  return std::nullopt;
}

// Eigenvalue multiplicities of the twist differential on the bundle-level
// fixed locus: (r-1)(g-1) at the unit eigenvalue, r(g-1) at each other.
inline Spectrum bundle_spectrum(const GeometryParams& p) {
  require_valid(p);
  Spectrum s(p.r);
  s.add(0, (p.r - 1) * (p.g - 1));
  for (long long e = 1; e <= p.r - 1; ++e) {
    s.add(e, p.r * (p.g - 1));
  }
  return s;
}

// A connected component of the fixed locus: one filtration ordering per
// marked point, plus the derived base exponent l_i wherever the point's flag
// spectrum matches a canonical pattern.
struct SectorComponent {
  std::vector<Permutation> perms;
  std::vector<std::optional<int>> reduced;

  bool fully_reduced() const {
    for (const auto& l : reduced) {
      if (!l) return false;
    }
    return true;
  }

  // The l-tuple; requires fully_reduced().
  std::vector<int> reduced_tuple() const {
    std::vector<int> out;
    out.reserve(reduced.size());
    for (const auto& l : reduced) {
      if (!l) {
        throw std::domain_error(
            "SectorComponent: a point's flag spectrum is not canonical; no "
            "l-tuple exists");
      }
      out.push_back(*l);
    }
    return out;
  }

  friend bool operator==(const SectorComponent&, const SectorComponent&) =
      default;
};

// Builds a component from its orderings, deriving the reduced invariant per
// point with the normalization a = 1.
inline SectorComponent make_component(std::vector<Permutation> perms,
                                      long long r) {
  SectorComponent c;
  c.reduced.reserve(perms.size());
  for (const auto& tau : perms) {
    require_permutation(tau, r, "make_component");
    c.reduced.push_back(
        extract_base(flag_tangent_spectrum(tau, UnityExponent(1, r))));
  }
  c.perms = std::move(perms);
  return c;
}

// Pointwise sum of the bundle spectrum and the component's m flag spectra,
// all normalized to a = 1. Total multiplicity equals the complex dimension
// of the moduli space.
inline Spectrum combined_spectrum(const SectorComponent& c,
                                  const GeometryParams& p) {
  require_valid(p);
  if (c.perms.size() != static_cast<std::size_t>(p.m)) {
    throw std::invalid_argument(
        "combined_spectrum: component has " + std::to_string(c.perms.size()) +
        " orderings, params expect " + std::to_string(p.m));
  }
  Spectrum s = bundle_spectrum(p);
  for (const auto& tau : c.perms) {
    s += flag_tangent_spectrum(tau, UnityExponent(1, p.r));
  }
  return s;
}

inline Integer component_count(long long r, long long m) {
  if (m < 0) throw std::domain_error("component_count: m must be >= 0");
  return integer_pow(factorial(r), m);
}

// Streams all (r!)^m components in lexicographic order of their permutation
// tuples. The callback receives a reference valid only for that call.
template <typename Fn>
void for_each_component(long long r, long long m, Fn&& fn) {
  if (r < 2) throw std::domain_error("for_each_component: r must be >= 2");
  if (m < 0) throw std::domain_error("for_each_component: m must be >= 0");
  const auto perms = all_permutations(r);
  std::vector<std::optional<int>> reduced_of(perms.size());
  if (m > 0) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      reduced_of[i] =
          extract_base(flag_tangent_spectrum(perms[i], UnityExponent(1, r)));
    }
  }

  SectorComponent c;
  c.perms.assign(static_cast<std::size_t>(m), perms.front());
  c.reduced.assign(static_cast<std::size_t>(m), reduced_of.front());
  std::vector<std::size_t> odometer(static_cast<std::size_t>(m), 0);
  while (true) {
    for (std::size_t i = 0; i < odometer.size(); ++i) {
      c.perms[i] = perms[odometer[i]];
      c.reduced[i] = reduced_of[odometer[i]];
    }
    fn(static_cast<const SectorComponent&>(c));
    std::size_t pos = odometer.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < perms.size()) break;
      odometer[pos] = 0;
      if (pos == 0) return;
    }
    if (odometer.empty()) return;
  }
}

// Materializes the full component list. Guarded against runaway sizes; use
// for_each_component to stream larger spaces.
inline std::vector<SectorComponent> enumerate_components(long long r,
                                                         long long m) {
  const Integer count = component_count(r, m);
  if (count > 2000000) {
    throw std::length_error("enumerate_components: " + count.str() +
                            " components exceed the materialization limit");
  }
  std::vector<SectorComponent> out;
  out.reserve(count.convert_to<std::size_t>());
  for_each_component(r, m, [&](const SectorComponent& c) { out.push_back(c); });
  return out;
}

// Census of components by the base exponent l_i at each point index, against
// the claimed uniform count (r!)^m / (r-1). Components whose flag spectrum
// at the point matches no canonical pattern are tallied separately; their
// presence (r >= 5) makes the check fail.
struct DistributionReport {
  long long r = 0;
  long long m = 0;
  Integer expected;
  std::vector<std::map<int, Integer>> per_point;
  std::vector<Integer> non_canonical;
  bool ok = false;
};

inline DistributionReport distribution_check(long long r, long long m) {
  if (r < 2) throw std::domain_error("distribution_check: r must be >= 2");
  if (m < 0) throw std::domain_error("distribution_check: m must be >= 0");
  DistributionReport rep;
  rep.r = r;
  rep.m = m;
  if (m == 0) {
    rep.expected = 0;
    rep.ok = true;
    return rep;
  }
  const auto perms = all_permutations(r);
  std::map<int, Integer> counts;
  Integer non_canonical = 0;
  for (const auto& tau : perms) {
    const auto l = extract_base(flag_tangent_spectrum(tau, UnityExponent(1, r)));
    if (l) {
      counts[*l] += 1;
    } else {
      non_canonical += 1;
    }
  }
  // The per-point census factorizes: the other m-1 points range freely.
  const Integer other_points = integer_pow(factorial(r), m - 1);
  for (auto& [l, count] : counts) count *= other_points;
  non_canonical *= other_points;

  rep.expected = integer_pow(factorial(r), m) / (r - 1);
  rep.per_point.assign(static_cast<std::size_t>(m), counts);
  rep.non_canonical.assign(static_cast<std::size_t>(m), non_canonical);
  rep.ok = (non_canonical == 0);
  for (long long l = 1; l <= r - 1 && rep.ok; ++l) {
    const auto it = counts.find(static_cast<int>(l));
    if (it == counts.end() || it->second != rep.expected) rep.ok = false;
  }
  return rep;
}

}  // namespace parcr
