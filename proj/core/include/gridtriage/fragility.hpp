#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <span>
#include <vector>

#include "gridtriage/errors.hpp"

namespace gridtriage {

using ClassId = int;

inline constexpr int kDefaultProbabilityPrecision = 4;

// How an expected damaged-pole count is turned into an integer.
enum class CountRounding { Nearest, Ceil };

std::string_view to_string(CountRounding r);
std::optional<CountRounding> parse_count_rounding(std::string_view text);

// Round half away from zero at `decimals` places. Binary representation
// noise of order 1e-9 relative is absorbed so that printed ties such as
// 0.18625 round up.
double round_half_up(double value, int decimals);
long long round_half_up_to_integer(double value);
// Ceiling that treats values within 1e-9 of an integer as that integer.
long long ceil_tolerant(double value);

// Piecewise-linear fragility curve of one pole lifetime class.
struct PoleClassSpec {
  ClassId class_id = 1;
  double life_min_yr = 0.0;
  double life_max_yr = std::numeric_limits<double>::infinity();  // exclusive
  double p0 = 0.0;      // failure probability below the threshold speed
  double v_th = 0.0;    // km/h, ramp starts
  double v_max = 0.0;   // km/h, failure certain beyond
  int count = 0;        // poles of this class in the network

  friend bool operator==(const PoleClassSpec&, const PoleClassSpec&) = default;
};

struct ClassDamage {
  ClassId class_id = 0;
  double q = 0.0;          // failure probability, unrounded
  int damaged_count = 0;   // integer damaged poles in the class

  friend bool operator==(const ClassDamage&, const ClassDamage&) = default;
};

// Ramp slope (1 - p0) / (v_max - v_th). Throws DegenerateCurve when
// v_max <= v_th.
double fragility_slope(const PoleClassSpec& spec);

// Failure probability at `v_real` km/h, without rounding. The ramp branch
// covers both v_th and v_max inclusive.
double failure_probability_exact(const PoleClassSpec& spec, double v_real);

// Same, rounded half-up to `precision` decimals. A negative precision
// disables rounding.
double failure_probability(const PoleClassSpec& spec, double v_real,
                           int precision = kDefaultProbabilityPrecision);

// Expected damaged poles of a class, integerized and clamped to [0, count].
ClassDamage class_damage_count(const PoleClassSpec& spec, double v_real,
                               CountRounding rounding = CountRounding::Nearest);

/// Ordered set of lifetime classes.
///
/// Construction enforces per-class validity (0 <= p0 < 1, 0 < v_th < v_max,
/// count >= 0), unique ascending class ids and disjoint ascending lifetime
/// ranges. The monotone trends expected with age (p0 and v_th rising, v_max
/// falling) are only checked as warnings with code W-ORDERING.
class FragilitySet {
 public:
  FragilitySet() = default;
  explicit FragilitySet(std::vector<PoleClassSpec> classes);

  std::span<const PoleClassSpec> classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  bool contains(ClassId id) const noexcept;
  const PoleClassSpec& at(ClassId id) const;  // throws UnknownClass

  const std::vector<Warning>& warnings() const noexcept { return warnings_; }

  int total_count() const noexcept;

 private:
  std::vector<PoleClassSpec> classes_;
  std::vector<Warning> warnings_;
};

std::vector<ClassDamage> class_damage_counts(const FragilitySet& set, double v_real,
                                             CountRounding rounding = CountRounding::Nearest);

}  // namespace gridtriage
