#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parcr/cohomology.hpp"
#include "parcr/geometry.hpp"
#include "parcr/parabolic.hpp"
#include "parcr/rational.hpp"
#include "parcr/sectors.hpp"
#include "parcr/spectrum.hpp"

namespace parcr::io {

// Key order is part of the byte-stable output contract.
using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path);
  return buffer.str();
}

// Integers stay JSON numbers while they fit 64 bits; beyond that they are
// decimal strings, never floats.
inline json integer_to_json(const Integer& n) {
  if (fits_int64(n)) return json(n.convert_to<long long>());
  return json(n.str());
}

// Exact rationals serialize as "p/q" strings, or plain numbers when
// integral and small.
inline json rational_to_json(const Rational& q) {
  if (is_integral(q)) return integer_to_json(numerator(q));
  return json(to_string(q));
}

inline Integer integer_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    return detail::parse_integer_token(j.get<std::string>(), what.c_str(),
                                       true);
  }
  throw std::invalid_argument(what + ": expected an integer or decimal string");
}

inline long long int64_from_json(const json& j, const std::string& what) {
  const Integer n = integer_from_json(j, what);
  if (!fits_int64(n)) {
    throw std::invalid_argument(what + ": value " + n.str() +
                                " exceeds 64-bit range");
  }
  return n.convert_to<long long>();
}

inline Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(Integer(j.get<unsigned long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(what + ": " + e.what());
    }
  }
  // Floats are rejected: they cannot carry exact rationals.
  throw std::invalid_argument(what + ": expected an integer or a \"p/q\" string");
}

inline json params_to_json(const GeometryParams& p) {
  return json{{"r", p.r}, {"g", p.g}, {"m", p.m}, {"d", p.d}};
}

inline GeometryParams params_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("params: expected an object");
  }
  GeometryParams p;
  for (const auto& key : {"r", "g", "m", "d"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("params: missing key \"") + key +
                                  "\"");
    }
  }
  p.r = int64_from_json(j.at("r"), "params.r");
  p.g = int64_from_json(j.at("g"), "params.g");
  p.m = int64_from_json(j.at("m"), "params.m");
  p.d = int64_from_json(j.at("d"), "params.d");
  return p;
}

// Spectra serialize as {"e": mult} over the nonzero multiplicities,
// ascending in e.
inline json spectrum_to_json(const Spectrum& s) {
  json out = json::object();
  for (long long e = 0; e < s.order(); ++e) {
    if (s.multiplicity(e) != 0) out[std::to_string(e)] = s.multiplicity(e);
  }
  return out;
}

inline json graded_to_json(const GradedDims& t) {
  json rows = json::array();
  for (const auto& [degree, dim] : t.entries()) {
    rows.push_back(json::array({rational_to_json(degree),
                                integer_to_json(dim)}));
  }
  return rows;
}

inline GradedDims graded_from_json(const json& j, const Rational& span,
                                   const std::string& what) {
  if (!j.is_array()) {
    throw std::invalid_argument(what + ": expected an array of [degree, dim]");
  }
  GradedDims t(span);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 2) {
      throw std::invalid_argument(what + ": each row must be [degree, dim]");
    }
    const Rational degree = rational_from_json(row[0], what + " degree");
    const Integer dim = integer_from_json(row[1], what + " dimension");
    if (dim < 0) {
      throw std::invalid_argument(what + ": negative dimension");
    }
    try {
      t.add(degree, dim);
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(what + ": " + e.what());
    }
  }
  return t;
}

// Weight files: an array with one entry per point; each entry is an array of
// "p/q" weight strings (full flag) or an array of [weight, multiplicity]
// pairs.
inline WeightSystem weight_system_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("weights: expected an array of points");
  }
  std::vector<FlagPoint> points;
  points.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& pt = j[i];
    const std::string where = "weights point " + std::to_string(i);
    if (!pt.is_array() || pt.empty()) {
      throw std::invalid_argument(where + ": expected a nonempty array");
    }
    FlagPoint fp;
    for (const auto& cell : pt) {
      if (cell.is_array()) {
        if (cell.size() != 2) {
          throw std::invalid_argument(where +
                                      ": pairs must be [weight, multiplicity]");
        }
        fp.weights.push_back(rational_from_json(cell[0], where + " weight"));
        fp.multiplicities.push_back(
            int64_from_json(cell[1], where + " multiplicity"));
      } else {
        fp.weights.push_back(rational_from_json(cell, where + " weight"));
        fp.multiplicities.push_back(1);
      }
    }
    points.push_back(std::move(fp));
  }
  try {
    return WeightSystem(std::move(points));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

// Sector files: {"params": {...} (optional), "untwisted": rows,
// "prym_quotient": rows}. When params are present they must agree with the
// command line.
inline SectorInput sector_input_from_json(const json& j,
                                          const GeometryParams& p) {
  if (!j.is_object()) {
    throw std::invalid_argument("sectors: expected a JSON object");
  }
  if (j.contains("params")) {
    const GeometryParams file_params = params_from_json(j.at("params"));
    if (!(file_params == p)) {
      throw std::invalid_argument(
          "sectors: file params disagree with the command line");
    }
  }
  for (const auto& key : {"untwisted", "prym_quotient"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("sectors: missing key \"") + key +
                                  "\"");
    }
  }
  const InvariantReport rep = invariants(p);
  SectorInput in;
  in.untwisted = graded_from_json(j.at("untwisted"),
                                  Rational(rep.real_dim_moduli), "untwisted");
  in.prym_quotient =
      graded_from_json(j.at("prym_quotient"),
                       Rational(2 * rep.complex_dim_fixed), "prym_quotient");
  return in;
}

// l-tuples print as "(1 2)"; the empty tuple as "()".
inline std::string format_l_tuple(const std::vector<int>& l) {
  std::string out = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(l[i]);
  }
  out += ')';
  return out;
}

// Permutations print in image notation over digits, e.g. "021"; only ranks
// up to 10 have single-digit labels.
inline std::string format_permutation(const Permutation& tau) {
  if (tau.size() > 10) {
    throw std::domain_error("format_permutation: rank exceeds digit notation");
  }
  std::string out;
  out.reserve(tau.size());
  for (int v : tau) out += static_cast<char>('0' + v);
  return out;
}

inline Permutation parse_permutation(const std::string& text, long long r) {
  if (r > 10) {
    throw std::invalid_argument(
        "permutations in digit notation require r <= 10");
  }
  Permutation tau;
  tau.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("permutation \"" + text +
                                  "\": expected digits only");
    }
    tau.push_back(ch - '0');
  }
  if (tau.size() != static_cast<std::size_t>(r) || !is_permutation_tuple(tau)) {
    throw std::invalid_argument("permutation \"" + text +
                                "\" is not a permutation of {0,...," +
                                std::to_string(r - 1) + "}");
  }
  return tau;
}

// CSV fields are quoted only when they contain a comma, quote, or newline.
inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace parcr::io
