#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "parcr/cohomology.hpp"
#include "parcr/geometry.hpp"
#include "parcr/io.hpp"
#include "parcr/parabolic.hpp"
#include "parcr/rational.hpp"
#include "parcr/sectors.hpp"
#include "parcr/shifts.hpp"
#include "parcr/spectrum.hpp"
#include "parcr/unity.hpp"

namespace parcr {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  bool quick = false;
};

namespace verify_detail {

// Collects violations, keeping the first few as printable counterexamples.
class Violations {
 public:
  void add(std::string example) {
    if (examples_.size() < 3) examples_.push_back(std::move(example));
    ++count_;
  }

  bool any() const { return count_ > 0; }

  std::string summary(const std::string& checked) const {
    if (count_ == 0) return checked;
    std::string out = std::to_string(count_) + " violation(s): " + examples_[0];
    for (std::size_t i = 1; i < examples_.size(); ++i) {
      out += " | " + examples_[i];
    }
    if (count_ > examples_.size()) out += " | ...";
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> examples_;
};

struct Grid {
  std::vector<long long> rs;
  std::vector<long long> gs;
  std::vector<long long> ms;
};

inline Grid make_grid(bool quick) {
  if (quick) return Grid{{2, 3}, {2, 3}, {0, 1}};
  return Grid{{2, 3, 5, 7}, {2, 3, 4}, {0, 1, 2}};
}

inline GeometryParams params_for(long long r, long long g, long long m) {
  return GeometryParams{r, g, m, 1};
}

inline std::string spectrum_text(const Spectrum& s) {
  std::string out = "{";
  bool first = true;
  for (long long e = 0; e < s.order(); ++e) {
    if (s.multiplicity(e) == 0) continue;
    if (!first) out += ",";
    out += std::to_string(e) + ":" + std::to_string(s.multiplicity(e));
    first = false;
  }
  out += "}";
  return out;
}

inline std::string case_tag(long long r, long long g, long long m) {
  return "r=" + std::to_string(r) + " g=" + std::to_string(g) +
         " m=" + std::to_string(m);
}

// Per-permutation flag data: spectrum total, multiplicity at exponent 0,
// the weighted sum of exponents (numerator of the flag shift over r), and
// the base exponent when the spectrum is canonical.
struct PermFlagData {
  long long total = 0;
  long long zero = 0;
  long long shift_num = 0;
  std::optional<int> l;
};

inline std::vector<PermFlagData> perm_flag_data(long long r) {
  const auto perms = all_permutations(r);
  std::vector<PermFlagData> out(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const Spectrum s = flag_tangent_spectrum(perms[i], UnityExponent(1, r));
    PermFlagData d;
    d.total = s.total();
    d.zero = s.multiplicity(0);
    for (long long e = 1; e < r; ++e) d.shift_num += s.multiplicity(e) * e;
    d.l = extract_base(s);
    out[i] = d;
  }
  return out;
}

inline GradedDims sum_tables(const GradedDims& a, const GradedDims& b) {
  GradedDims out(a.span());
  for (const auto& [degree, dim] : a.entries()) out.add(degree, dim);
  for (const auto& [degree, dim] : b.entries()) out.add(degree, dim);
  return out;
}

}  // namespace verify_detail

// Runs every library property over the parameter grid (full: r in {2,3,5,7},
// g in {2,3,4}, m in {0,1,2}; quick: r in {2,3}, g in {2,3}, m in {0,1}) and
// reports one result per property with counterexamples on failure.
inline std::vector<PropertyResult> run_verification(
    const VerifyOptions& opt = {}) {
  using namespace verify_detail;
  const Grid grid = make_grid(opt.quick);
  std::vector<PropertyResult> results;
  const auto record = [&](std::string name, const Violations& v,
                          const std::string& checked) {
    results.push_back(PropertyResult{std::move(name), !v.any(),
                                     v.summary(checked)});
  };

  {  // residue stays in range and is congruent to its argument
    Violations v;
    long long cases = 0;
    for (long long r = 1; r <= 12; ++r) {
      for (long long b = -60; b <= 60; ++b) {
        const long long res = residue(b, r);
        if (res < 0 || res >= r || (b - res) % r != 0) {
          v.add("residue(" + std::to_string(b) + "," + std::to_string(r) +
                ")=" + std::to_string(res));
        }
        ++cases;
      }
    }
    record("residue-range", v, "checked " + std::to_string(cases) + " cases");
  }

  {  // root-of-unity exponents form a cyclic group of order r
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long a = 0; a < r; ++a) {
        const UnityExponent x(a, r);
        if (x.pow(r).exponent() != 0) {
          v.add("x^r != 1 at a=" + std::to_string(a) + " r=" +
                std::to_string(r));
        }
        if ((x * x.inverse()).exponent() != 0) {
          v.add("x*x^{-1} != 1 at a=" + std::to_string(a) + " r=" +
                std::to_string(r));
        }
        for (long long b = 0; b < r; ++b) {
          const UnityExponent y(b, r);
          if ((x * y).exponent() != residue(a + b, r)) {
            v.add("exponent addition failed at r=" + std::to_string(r));
          }
          ++cases;
        }
      }
    }
    record("unity-group-law", v, "checked " + std::to_string(cases) + " pairs");
  }

  {  // rational arithmetic round-trips exactly, including serialization
    Violations v;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<long long> coef(-50, 50);
    long long cases = 0;
    for (int i = 0; i < 200; ++i) {
      long long qd = coef(rng), td = coef(rng);
      if (qd == 0) qd = 7;
      if (td == 0) td = 9;
      const Rational x = make_rational(coef(rng), qd);
      const Rational y = make_rational(coef(rng), td);
      if ((x + y) - y != x) v.add("(x+y)-y != x at i=" + std::to_string(i));
      if (y != 0 && (x * y) / y != x) {
        v.add("(x*y)/y != x at i=" + std::to_string(i));
      }
      if (parse_rational(to_string(x)) != x) {
        v.add("string round-trip failed for " + to_string(x));
      }
      ++cases;
    }
    record("rational-exactness", v,
           "checked " + std::to_string(cases) + " random triples");
  }

  {  // parabolic degree shifts with the underlying degree
    Violations v;
    const WeightSystem w = WeightSystem::full_flag(
        {{Rational(0), Rational(1, 9), Rational(2, 9)},
         {Rational(0), Rational(1, 9), Rational(2, 9)}});
    for (long long shift : {-3LL, 0LL, 5LL}) {
      const ParabolicData base(3, 0, w);
      const ParabolicData moved(3, shift, w);
      if (par_degree(moved) - par_degree(base) != Rational(shift)) {
        v.add("degree shift " + std::to_string(shift));
      }
    }
    const ParabolicData mixed(
        4, 2,
        WeightSystem({FlagPoint{{Rational(0), Rational(1, 4), Rational(1, 2)},
                                {2, 1, 1}}}));
    if (par_degree(mixed) != Rational(2) + Rational(3, 4)) {
      v.add("multiplicity-weighted degree");
    }
    record("parabolic-degree-additivity", v, "checked 4 cases");
  }

  {  // single zero weight of full multiplicity degrades to ordinary slope
    Violations v;
    for (long long rank : {2LL, 3LL, 5LL}) {
      const WeightSystem trivial(
          {FlagPoint{{Rational(0)}, {rank}}, FlagPoint{{Rational(0)}, {rank}}});
      const ParabolicData p(rank, 7, trivial);
      if (par_degree(p) != Rational(7)) v.add("pdeg rank " + std::to_string(rank));
      if (par_slope(p) != Rational(7, rank)) {
        v.add("pmu rank " + std::to_string(rank));
      }
    }
    record("parabolic-trivial-weights", v, "checked ranks 2, 3, 5");
  }

  {  // concentration survives shrinking every spread
    Violations v;
    long long cases = 0;
    for (long long denom : {10LL, 12LL, 30LL, 100LL}) {
      const std::vector<Rational> weights{Rational(0), Rational(1, denom),
                                          Rational(2, denom)};
      const WeightSystem w = WeightSystem::full_flag({weights});
      if (is_concentrated(w, 3, 1)) {
        const WeightSystem half = WeightSystem::full_flag(
            {{Rational(0), Rational(1, 2 * denom), Rational(2, 2 * denom)}});
        if (!is_concentrated(half, 3, 1)) {
          v.add("halving lost concentration at denom " + std::to_string(denom));
        }
      }
      ++cases;
    }
    const WeightSystem loose = WeightSystem::full_flag(
        {{Rational(0), Rational(3, 10), Rational(1, 2)}});
    if (is_concentrated(loose, 3, 1)) v.add("spread 1/2 accepted at r=3, m=1");
    record("concentration-monotonicity", v,
           "checked " + std::to_string(cases) + " spreads");
  }

  {  // rank-2 moduli dimension matches 3g - 3 + m
    Violations v;
    for (long long g = 2; g <= 6; ++g) {
      for (long long m = 0; m <= 4; ++m) {
        const auto rep = invariants(GeometryParams{2, g, m, 1});
        if (rep.complex_dim_moduli != 3 * g - 3 + m) {
          v.add("g=" + std::to_string(g) + " m=" + std::to_string(m));
        }
      }
    }
    record("rank2-moduli-dimension", v, "checked g in 2..6, m in 0..4");
  }

  {  // flag spectra avoid exponent 0 and have total r(r-1)/2
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (const auto& tau : all_permutations(r)) {
        for (long long a = 1; a < r; ++a) {
          const Spectrum s = flag_tangent_spectrum(tau, UnityExponent(a, r));
          if (s.multiplicity(0) != 0 || s.total() != r * (r - 1) / 2) {
            v.add("r=" + std::to_string(r) + " tau=" +
                  io::format_permutation(tau) + " a=" + std::to_string(a));
          }
          ++cases;
        }
      }
    }
    record("flag-spectrum-shape", v,
           "checked " + std::to_string(cases) + " spectra");
  }

  {  // every ordering's flag spectrum matches a canonical pattern
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (const auto& tau : all_permutations(r)) {
        const Spectrum s = flag_tangent_spectrum(tau, UnityExponent(1, r));
        if (!extract_base(s)) {
          v.add("r=" + std::to_string(r) + " tau=" +
                io::format_permutation(tau) + " spectrum=" + spectrum_text(s));
        }
        ++cases;
      }
    }
    record("canonical-form-coverage", v,
           "checked " + std::to_string(cases) + " orderings");
  }

  {  // changing the twist generator rescales the base exponent
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (const auto& tau : all_permutations(r)) {
        const auto l1 =
            extract_base(flag_tangent_spectrum(tau, UnityExponent(1, r)));
        for (long long a = 1; a < r; ++a) {
          const auto la =
              extract_base(flag_tangent_spectrum(tau, UnityExponent(a, r)));
          const bool both = l1.has_value() && la.has_value();
          const bool neither = !l1.has_value() && !la.has_value();
          if (!(both || neither) ||
              (both && *la != residue(a * *l1, r))) {
            v.add("r=" + std::to_string(r) + " tau=" +
                  io::format_permutation(tau) + " a=" + std::to_string(a));
          }
          ++cases;
        }
      }
    }
    record("base-change-rescaling", v,
           "checked " + std::to_string(cases) + " rescalings");
  }

  {  // per-point census of base exponents is uniform, (r!)^m/(r-1) each
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long m : grid.ms) {
        if (m == 0) continue;
        const DistributionReport rep = distribution_check(r, m);
        if (!rep.ok) {
          std::string counts;
          for (const auto& [l, count] : rep.per_point.front()) {
            counts += " l=" + std::to_string(l) + ":" + count.str();
          }
          v.add("r=" + std::to_string(r) + " m=" + std::to_string(m) +
                ": expected " + rep.expected.str() + " per l, found" + counts +
                ", non-canonical " + rep.non_canonical.front().str());
        }
        ++cases;
      }
    }
    record("eigenvalue-distribution", v,
           "checked " + std::to_string(cases) + " censuses");
  }

  {  // enumeration cardinality equals (r!)^m
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long m : grid.ms) {
        const Integer expected = component_count(r, m);
        if (expected > 20000) continue;
        const auto components = enumerate_components(r, m);
        if (Integer(components.size()) != expected) {
          v.add("r=" + std::to_string(r) + " m=" + std::to_string(m));
        }
        ++cases;
      }
    }
    record("component-count", v,
           "checked " + std::to_string(cases) + " spaces");
  }

  // Spectrum accounting and the two shift routes, over every component.
  // Small spaces go through the public enumeration; the r=7, m=2 space
  // (5040^2 components) uses an equivalent per-point reduction.
  {
    Violations dim_v, codim_v, oracle_stated_v, oracle_canonical_v;
    long long combos = 0;

    for (long long r : grid.rs) {
      std::vector<long long> ms_here = grid.ms;
      if (component_count(r, 3) <= 20000) ms_here.push_back(3);
      for (long long m : ms_here) {
        if (component_count(r, m) <= 20000) {
          const auto components = enumerate_components(r, m);
          for (long long g : grid.gs) {
            const GeometryParams p = params_for(r, g, m);
            const InvariantReport rep = invariants(p);
            std::map<std::vector<int>, Rational> closed;
            for (const auto& entry : shift_table(p)) closed[entry.l] = entry.shift;
            for (const auto& c : components) {
              const Spectrum s = combined_spectrum(c, p);
              const std::string tag = case_tag(r, g, m);
              if (s.total() != rep.complex_dim_moduli ||
                  s.multiplicity(0) != rep.complex_dim_fixed) {
                dim_v.add(tag);
              }
              if (s.nonzero_exponent_total() != rep.codim_fixed) {
                codim_v.add(tag);
              }
              if (c.fully_reduced()) {
                const Rational oracle = shift_from_spectrum(s);
                if (closed.at(c.reduced_tuple()) != oracle) {
                  oracle_stated_v.add(tag + " l=" +
                                      io::format_l_tuple(c.reduced_tuple()));
                  oracle_canonical_v.add(tag);
                }
              } else {
                std::string perms_text;
                for (const auto& tau : c.perms) {
                  perms_text += " " + io::format_permutation(tau);
                }
                oracle_stated_v.add(tag + ": no base tuple for orderings" +
                                    perms_text);
              }
              ++combos;
            }
          }
        } else {
          // Reduced pass: all accounting identities are independent of g
          // once the bundle part is subtracted, and both shift routes share
          // the bundle constant r^2(r-1)(g-1)/2 exactly.
          const auto pd = perm_flag_data(r);
          const long long flag_total_expected = m * r * (r - 1) / 2;
          std::vector<long long> closed_flag_num(
              static_cast<std::size_t>(integer_pow(Integer(r - 1), m)
                                           .convert_to<long long>()),
              0);
          {
            const GeometryParams p0 = params_for(r, 2, m);
            std::vector<int> l(static_cast<std::size_t>(m), 1);
            const Rational bundle_const(r * (r - 1) * (2 - 1), 2);
            bool done = false;
            std::size_t flat = 0;
            while (!done) {
              const Rational flag_part =
                  (shift_closed_form(l, p0) - bundle_const) * Rational(r);
              closed_flag_num[flat] = to_integer(flag_part).convert_to<long long>();
              ++flat;
              std::size_t pos = l.size();
              done = true;
              while (pos > 0) {
                --pos;
                if (++l[pos] <= r - 1) {
                  done = false;
                  break;
                }
                l[pos] = 1;
              }
            }
          }
          std::vector<std::size_t> odo(static_cast<std::size_t>(m), 0);
          while (true) {
            long long ftot = 0, fzero = 0, fshift = 0;
            bool all_l = true;
            std::size_t flat = 0;
            for (std::size_t i = 0; i < odo.size(); ++i) {
              const PermFlagData& d = pd[odo[i]];
              ftot += d.total;
              fzero += d.zero;
              fshift += d.shift_num;
              if (d.l) {
                flat = flat * static_cast<std::size_t>(r - 1) +
                       static_cast<std::size_t>(*d.l - 1);
              } else {
                all_l = false;
              }
            }
            const std::string tag =
                "r=" + std::to_string(r) + " m=" + std::to_string(m);
            if (ftot != flag_total_expected || fzero != 0) {
              dim_v.add(tag);
              codim_v.add(tag);
            }
            if (all_l) {
              if (closed_flag_num[flat] != fshift) {
                oracle_stated_v.add(tag);
                oracle_canonical_v.add(tag);
              }
            } else {
              oracle_stated_v.add(tag + ": no base tuple");
            }
            ++combos;
            std::size_t pos = odo.size();
            bool done = true;
            while (pos > 0) {
              --pos;
              if (++odo[pos] < pd.size()) {
                done = false;
                break;
              }
              odo[pos] = 0;
            }
            if (done) break;
          }
        }
      }
    }
    const std::string checked =
        "checked " + std::to_string(combos) + " component cases";
    record("dimension-accounting", dim_v, checked);
    record("codim-eigenvalue-accounting", codim_v, checked);
    record("oracle-shift-equivalence", oracle_stated_v, checked);
    record("oracle-shift-equivalence-canonical", oracle_canonical_v, checked);
  }

  {  // the closed form is independent of the choice of c
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long m : grid.ms) {
        if (m == 0) continue;
        for (long long g : grid.gs) {
          const GeometryParams p = params_for(r, g, m);
          for (const auto& entry : shift_table(p)) {
            for (long long e = 1; e < r; ++e) {
              std::vector<int> c;
              c.reserve(entry.l.size());
              for (int li : entry.l) {
                c.push_back(
                    static_cast<int>(residue(e * mod_inverse(li, r), r)));
              }
              if (shift_closed_form(entry.l, p, c) != entry.shift) {
                v.add(case_tag(r, g, m) + " l=" + io::format_l_tuple(entry.l) +
                      " e=" + std::to_string(e));
              }
              ++cases;
            }
          }
        }
      }
    }
    record("choice-independence", v,
           "checked " + std::to_string(cases) + " choices");
  }

  {  // shift(l) + shift(r - l) = codim, every tuple
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long g : grid.gs) {
        for (long long m : grid.ms) {
          const auto rep = complementarity_check(params_for(r, g, m));
          if (!rep.ok) {
            v.add(case_tag(r, g, m) + ": " +
                  io::format_l_tuple(rep.violations.front().first) + " sums to " +
                  to_string(rep.violations.front().second) + ", expected " +
                  to_string(rep.expected));
          }
          ++cases;
        }
      }
    }
    record("shift-complementarity", v,
           "checked " + std::to_string(cases) + " grid points");
  }

  {  // r * shift is integral and shifts are positive
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long g : grid.gs) {
        for (long long m : grid.ms) {
          const GeometryParams p = params_for(r, g, m);
          for (const auto& entry : shift_table(p)) {
            if (!is_integral(entry.shift * Rational(r)) ||
                !(entry.shift > 0)) {
              v.add(case_tag(r, g, m) + " l=" + io::format_l_tuple(entry.l));
            }
            ++cases;
          }
        }
      }
    }
    record("shift-integrality-positivity", v,
           "checked " + std::to_string(cases) + " shifts");
  }

  {  // table multiplicities: uniform per tuple, total (r!)^m
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long g : grid.gs) {
        for (long long m : grid.ms) {
          const GeometryParams p = params_for(r, g, m);
          const Integer per_tuple =
              m == 0 ? Integer(1)
                     : integer_pow(factorial(r) / (r - 1), m);
          Integer mass = 0;
          bool uniform = true;
          for (const auto& entry : shift_table(p)) {
            mass += entry.components;
            if (entry.components != per_tuple) uniform = false;
          }
          if (mass != component_count(r, m) || !uniform) {
            v.add(case_tag(r, g, m));
          }
          ++cases;
        }
      }
    }
    record("shift-table-mass", v,
           "checked " + std::to_string(cases) + " tables");
  }

  // Assembly properties share deterministic input tables per grid point.
  {
    Violations linear_v, total_v, duality_v, asymmetry_v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long g : grid.gs) {
        for (long long m : grid.ms) {
          const GeometryParams p = params_for(r, g, m);
          const InvariantReport rep = invariants(p);
          const Rational full_span(rep.real_dim_moduli);
          const Rational prym_span(2 * rep.complex_dim_fixed);
          const std::string tag = case_tag(r, g, m);

          GradedDims u1(full_span), u2(full_span);
          u1.add(Rational(0), 1);
          u1.add(full_span, 1);
          u2.add(Rational(2), 3);
          GradedDims p1(prym_span), p2(prym_span);
          p1.add(Rational(0), 1);
          p1.add(prym_span, 2);
          p2.add(Rational(1), 5);

          const GradedDims lhs =
              assemble(p, SectorInput{sum_tables(u1, u2), sum_tables(p1, p2)});
          const GradedDims rhs = sum_tables(assemble(p, SectorInput{u1, p1}),
                                            assemble(p, SectorInput{u2, p2}));
          if (!(lhs == rhs)) linear_v.add(tag);

          const Integer expected_total =
              u1.total() + u2.total() +
              (rep.gamma_order - 1) * component_count(r, m) *
                  (p1.total() + p2.total());
          if (lhs.total() != expected_total) total_v.add(tag);

          GradedDims pal_u(full_span), pal_p(prym_span);
          pal_u.add(Rational(0), 1);
          pal_u.add(full_span, 1);
          pal_u.add(full_span / 2, 4);
          pal_p.add(Rational(0), 2);
          pal_p.add(prym_span, 2);
          pal_p.add(prym_span / 2, 1);
          const auto good =
              duality_check(assemble(p, SectorInput{pal_u, pal_p}));
          if (!good.ok) duality_v.add(tag);

          GradedDims skew_p(prym_span);
          skew_p.add(Rational(0), 1);
          const auto bad =
              duality_check(assemble(p, SectorInput{pal_u, skew_p}));
          if (bad.ok || bad.bad_degrees.empty()) asymmetry_v.add(tag);

          ++cases;
        }
      }
    }
    const std::string checked =
        "checked " + std::to_string(cases) + " grid points";
    record("assembly-linearity", linear_v, checked);
    record("assembly-total-dimension", total_v, checked);
    record("assembly-duality", duality_v, checked);
    record("duality-asymmetry-detection", asymmetry_v, checked);
  }

  {  // the complementary pairing is an involution
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long g : grid.gs) {
        for (long long m : grid.ms) {
          const GeometryParams p = params_for(r, g, m);
          const InvariantReport rep = invariants(p);
          const Rational full_span(rep.real_dim_moduli);
          const Rational prym_span(2 * rep.complex_dim_fixed);
          for (const Rational& q :
               {Rational(0), Rational(1), full_span}) {
            const auto once = pairing_partner(SectorRef::untwisted(), q, p);
            const auto twice = pairing_partner(once.first, once.second, p);
            if (!(twice.first == SectorRef::untwisted()) || twice.second != q) {
              v.add(case_tag(r, g, m) + " untwisted q=" + to_string(q));
            }
            ++cases;
          }
          for (const auto& entry : shift_table(p)) {
            if (m == 0) continue;
            const Rational base = Rational(2) * entry.shift;
            for (const Rational& internal :
                 {Rational(0), Rational(1), prym_span}) {
              const Rational q = base + internal;
              const SectorRef sector = SectorRef::twisted(entry.l);
              const auto once = pairing_partner(sector, q, p);
              const auto twice = pairing_partner(once.first, once.second, p);
              if (!(twice.first == sector) || twice.second != q) {
                v.add(case_tag(r, g, m) + " l=" + io::format_l_tuple(entry.l) +
                      " q=" + to_string(q));
              }
              ++cases;
            }
          }
        }
      }
    }
    record("pairing-involution", v,
           "checked " + std::to_string(cases) + " pairs");
  }

  {  // only the complementary convention closes the degree bookkeeping
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long g : grid.gs) {
        for (long long m : grid.ms) {
          if (m == 0) continue;
          const GeometryParams p = params_for(r, g, m);
          const InvariantReport rep = invariants(p);
          const Rational target(2 * rep.complex_dim_fixed);
          bool same_sector_closes_everywhere = true;
          for (const auto& entry : shift_table(p)) {
            const SectorRef sector = SectorRef::twisted(entry.l);
            const Rational q = Rational(2) * entry.shift;
            if (pairing_internal_degree_sum(
                    sector, q, p, PairingConvention::complementary_sector) !=
                target) {
              v.add(case_tag(r, g, m) + " l=" + io::format_l_tuple(entry.l) +
                    ": complementary convention failed");
            }
            const Rational same = pairing_internal_degree_sum(
                sector, q, p, PairingConvention::same_sector);
            if (same != target) same_sector_closes_everywhere = false;
            const Rational expected_same =
                target + Rational(2) * (shift_closed_form(
                                            inverse_tuple(entry.l, p.r), p) -
                                        entry.shift);
            if (same != expected_same) {
              v.add(case_tag(r, g, m) + " l=" + io::format_l_tuple(entry.l) +
                    ": same-sector bookkeeping mismatch");
            }
            ++cases;
          }
          if (r >= 3 && same_sector_closes_everywhere) {
            v.add(case_tag(r, g, m) +
                  ": same-sector convention unexpectedly closed everywhere");
          }
          if (r == 2 && !same_sector_closes_everywhere) {
            v.add(case_tag(r, g, m) +
                  ": self-inverse tuples must make the conventions agree");
          }
        }
      }
    }
    record("pairing-convention-balance", v,
           "checked " + std::to_string(cases) + " sectors");
  }

  {  // obstruction rank: one trivial sector forces rank exactly 0
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long g : grid.gs) {
        for (long long m : grid.ms) {
          const GeometryParams p = params_for(r, g, m);
          const InvariantReport rep = invariants(p);
          for (const auto& entry : shift_table(p)) {
            const Rational partner =
                shift_closed_form(inverse_tuple(entry.l, p.r), p);
            const Rational rank = obstruction_rank(
                rep.complex_dim_fixed, p, {entry.shift, Rational(0), partner});
            if (rank != 0) {
              v.add(case_tag(r, g, m) + " l=" + io::format_l_tuple(entry.l));
            }
            ++cases;
          }
        }
      }
    }
    record("obstruction-rank-sanity", v,
           "checked " + std::to_string(cases) + " triples");
  }

  {  // orbifold normalization: |group| scales to 1, and scaling is linear
    Violations v;
    long long cases = 0;
    for (long long r : grid.rs) {
      for (long long g : grid.gs) {
        const GeometryParams p = params_for(r, g, 0);
        const Rational order(integer_pow(Integer(r), 2 * g));
        if (orbifold_scale(order, p) != 1) {
          v.add("scale(|G|) != 1 at r=" + std::to_string(r) + " g=" +
                std::to_string(g));
        }
        if (orbifold_scale(Rational(0), p) != 0) {
          v.add("scale(0) != 0 at r=" + std::to_string(r));
        }
        const Rational x(7, 3), y(-2, 5);
        if (orbifold_scale(x + y, p) !=
            orbifold_scale(x, p) + orbifold_scale(y, p)) {
          v.add("scale not additive at r=" + std::to_string(r));
        }
        ++cases;
      }
    }
    record("orbifold-scale-normalization", v,
           "checked " + std::to_string(cases) + " grid points");
  }

  return results;
}

}  // namespace parcr
