#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcr/rational.hpp"

namespace parcr {

// Flag data at one marked point: strictly increasing weights in [0,1) and the
// dimensions of the successive flag quotients.
struct FlagPoint {
  std::vector<Rational> weights;
  std::vector<long long> multiplicities;
};

// Quasi-parabolic weights over all marked points. Invariants are enforced at
// construction: 0 <= a_1 < a_2 < ... < a_k < 1 and positive multiplicities,
// with weights and multiplicities aligned pointwise.
class WeightSystem {
 public:
  WeightSystem() = default;

  explicit WeightSystem(std::vector<FlagPoint> points)
      : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) validate_point(i);
  }

  // Full-flag convenience: every multiplicity is 1.
  static WeightSystem full_flag(std::vector<std::vector<Rational>> weights) {
    std::vector<FlagPoint> pts;
    pts.reserve(weights.size());
    for (auto& w : weights) {
      FlagPoint fp;
      fp.multiplicities.assign(w.size(), 1);
      fp.weights = std::move(w);
      pts.push_back(std::move(fp));
    }
    return WeightSystem(std::move(pts));
  }

  const std::vector<FlagPoint>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }

  bool is_full_flag(long long rank) const {
    for (const auto& pt : points_) {
      if (pt.weights.size() != static_cast<std::size_t>(rank)) return false;
      for (long long mult : pt.multiplicities) {
        if (mult != 1) return false;
      }
    }
    return true;
  }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  void validate_point(std::size_t index) const {
    const auto& pt = points_[index];
    const std::string where = "WeightSystem point " + std::to_string(index);
    if (pt.weights.size() != pt.multiplicities.size()) {
      throw std::domain_error(where +
                              ": weights and multiplicities differ in length");
    }
    if (pt.weights.empty()) {
      throw std::domain_error(where + ": empty flag");
    }
    for (std::size_t j = 0; j < pt.weights.size(); ++j) {
      if (pt.multiplicities[j] < 1) {
        throw std::domain_error(where + ": multiplicities must be positive");
      }
      if (pt.weights[j] < 0 || pt.weights[j] >= 1) {
        throw std::domain_error(where + ": weight " + to_string(pt.weights[j]) +
                                " outside [0,1)");
      }
      if (j > 0 && !(pt.weights[j - 1] < pt.weights[j])) {
        throw std::domain_error(where + ": weights must be strictly increasing");
      }
    }
  }

  std::vector<FlagPoint> points_;
};

// A bundle's discrete data together with its parabolic weights. Flag
// multiplicities must sum to the rank at every point.
class ParabolicData {
 public:
  ParabolicData(long long rank, long long degree, WeightSystem weights)
      : rank_(rank), degree_(degree), weights_(std::move(weights)) {
    if (rank_ < 1) throw std::domain_error("ParabolicData: rank must be >= 1");
    for (std::size_t i = 0; i < weights_.points().size(); ++i) {
      long long total = 0;
      for (long long mult : weights_.points()[i].multiplicities) total += mult;
      if (total != rank_) {
        throw std::domain_error("ParabolicData: flag multiplicities at point " +
                                std::to_string(i) + " sum to " +
                                std::to_string(total) + ", expected rank " +
                                std::to_string(rank_));
      }
    }
  }

  long long rank() const { return rank_; }
  long long degree() const { return degree_; }
  const WeightSystem& weights() const { return weights_; }
  std::size_t point_count() const { return weights_.point_count(); }

 private:
  long long rank_;
  long long degree_;
  WeightSystem weights_;
};

// pdeg(E) = deg(E) + sum over points of sum_j m_j a_j, exactly.
inline Rational par_degree(const ParabolicData& p) {
  Rational total(p.degree());
  for (const auto& pt : p.weights().points()) {
    for (std::size_t j = 0; j < pt.weights.size(); ++j) {
      total += Rational(pt.multiplicities[j]) * pt.weights[j];
    }
  }
  return total;
}

inline Rational par_slope(const ParabolicData& p) {
  return par_degree(p) / Rational(p.rank());
}

enum class SlopeClass { stable_direction, semistable_boundary, destabilizing };

// The semistability inequality compares slopes exactly: a subobject with
// slope above the total slope destabilizes.
inline SlopeClass semistable_compare(const Rational& sub_slope,
                                     const Rational& total_slope) {
  if (sub_slope > total_slope) return SlopeClass::destabilizing;
  if (sub_slope == total_slope) return SlopeClass::semistable_boundary;
  return SlopeClass::stable_direction;
}

// True iff every per-point weight spread is strictly below 4/(m r^2).
// Requires a full-flag system on exactly m points; m = 0 is vacuously true.
inline bool is_concentrated(const WeightSystem& w, long long rank,
                            long long point_count) {
  if (rank < 1) throw std::domain_error("is_concentrated: rank must be >= 1");
  if (point_count < 0 ||
      w.point_count() != static_cast<std::size_t>(point_count)) {
    throw std::domain_error("is_concentrated: weight system has " +
                            std::to_string(w.point_count()) +
                            " points, expected " + std::to_string(point_count));
  }
  if (!w.is_full_flag(rank)) {
    throw std::domain_error("is_concentrated: weight system is not full-flag");
  }
  if (point_count == 0) return true;
  const Rational bound(4, point_count * rank * rank);
  for (const auto& pt : w.points()) {
    const Rational spread = pt.weights.back() - pt.weights.front();
    if (!(spread < bound)) return false;
  }
  return true;
}

}  // namespace parcr
