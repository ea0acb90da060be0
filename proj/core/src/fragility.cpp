#include "gridtriage/fragility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gridtriage {

namespace {

constexpr double kTieTolerance = 1e-9;

std::string class_label(ClassId id) { return "class " + std::to_string(id); }

}  // namespace

std::string_view to_string(CountRounding r) {
  return r == CountRounding::Ceil ? "ceil" : "nearest";
}

std::optional<CountRounding> parse_count_rounding(std::string_view text) {
  if (text == "nearest") return CountRounding::Nearest;
  if (text == "ceil") return CountRounding::Ceil;
  return std::nullopt;
}

double round_half_up(double value, int decimals) {
  if (decimals < 0 || !std::isfinite(value)) return value;
  const double scale = std::pow(10.0, decimals);
  const double scaled = std::abs(value) * scale;
  const double lower = std::floor(scaled);
  const double frac = scaled - lower;
  const double tol = kTieTolerance * std::max(1.0, scaled);
  const double magnitude = (frac + tol >= 0.5) ? lower + 1.0 : lower;
  return std::copysign(magnitude / scale, value);
}

long long round_half_up_to_integer(double value) {
  return static_cast<long long>(round_half_up(value, 0));
}

long long ceil_tolerant(double value) {
  const double nearest = std::round(value);
  if (std::abs(value - nearest) <= kTieTolerance * std::max(1.0, std::abs(value)))
    return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(value));
}

double fragility_slope(const PoleClassSpec& spec) {
  if (!(spec.v_max > spec.v_th))
    throw Error(Errc::DegenerateCurve,
                class_label(spec.class_id) + ": v_max must exceed v_th", {spec.class_id});
  return (1.0 - spec.p0) / (spec.v_max - spec.v_th);
}

double failure_probability_exact(const PoleClassSpec& spec, double v_real) {
  const double slope = fragility_slope(spec);
  if (!(v_real >= 0.0))
    throw Error(Errc::InvalidValue, "wind speed must be >= 0", {spec.class_id});
  if (v_real < spec.v_th) return spec.p0;
  // The line reaches 1 at v_max exactly; returning it directly avoids an ulp
  // short of 1 there.
  if (v_real >= spec.v_max) return 1.0;
  return std::min(1.0, slope * (v_real - spec.v_th) + spec.p0);
}

double failure_probability(const PoleClassSpec& spec, double v_real, int precision) {
  return round_half_up(failure_probability_exact(spec, v_real), precision);
}

ClassDamage class_damage_count(const PoleClassSpec& spec, double v_real, CountRounding rounding) {
  const double q = failure_probability_exact(spec, v_real);
  const double expected = q * spec.count;
  long long n = rounding == CountRounding::Ceil ? ceil_tolerant(expected)
                                                : round_half_up_to_integer(expected);
  n = std::clamp<long long>(n, 0, spec.count);
  return ClassDamage{spec.class_id, q, static_cast<int>(n)};
}

FragilitySet::FragilitySet(std::vector<PoleClassSpec> classes) : classes_(std::move(classes)) {
  for (const auto& c : classes_) {
    if (c.class_id <= 0)
      throw Error(Errc::InvalidValue, "class id must be positive", {c.class_id});
    if (!(c.p0 >= 0.0 && c.p0 < 1.0))
      throw Error(Errc::InvalidValue, class_label(c.class_id) + ": p0 must lie in [0, 1)", {c.class_id});
    if (!(c.v_th > 0.0))
      throw Error(Errc::InvalidValue, class_label(c.class_id) + ": v_th must be > 0", {c.class_id});
    if (!(c.v_max > c.v_th))
      throw Error(Errc::DegenerateCurve, class_label(c.class_id) + ": v_max must exceed v_th",
                  {c.class_id});
    if (c.count < 0)
      throw Error(Errc::InvalidValue, class_label(c.class_id) + ": count must be >= 0", {c.class_id});
    if (!(c.life_max_yr > c.life_min_yr))
      throw Error(Errc::InvalidValue, class_label(c.class_id) + ": empty lifetime range",
                  {c.class_id});
  }
  for (std::size_t i = 1; i < classes_.size(); ++i) {
    const auto& prev = classes_[i - 1];
    const auto& cur = classes_[i];
    if (cur.class_id <= prev.class_id)
      throw Error(Errc::InvalidValue, "class ids must be unique and ascending",
                  {prev.class_id, cur.class_id});
    if (cur.life_min_yr < prev.life_max_yr)
      throw Error(Errc::InvalidValue,
                  class_label(prev.class_id) + " and " + class_label(cur.class_id) +
                      " have overlapping lifetime ranges",
                  {prev.class_id, cur.class_id});

    auto warn = [&](const char* what) {
      warnings_.push_back(Warning{
          "W-ORDERING", class_label(prev.class_id) + " -> " + class_label(cur.class_id) + ": " + what});
    };
    if (!(cur.p0 > prev.p0)) warn("p0 does not increase with lifetime");
    if (!(cur.v_th > prev.v_th)) warn("v_th does not increase with lifetime");
    if (!(cur.v_max < prev.v_max)) warn("v_max does not decrease with lifetime");
  }
}

bool FragilitySet::contains(ClassId id) const noexcept {
  return std::any_of(classes_.begin(), classes_.end(),
                     [id](const PoleClassSpec& c) { return c.class_id == id; });
}

const PoleClassSpec& FragilitySet::at(ClassId id) const {
  auto it = std::find_if(classes_.begin(), classes_.end(),
                         [id](const PoleClassSpec& c) { return c.class_id == id; });
  if (it == classes_.end())
    throw Error(Errc::UnknownClass, class_label(id) + " is not defined", {id});
  return *it;
}

int FragilitySet::total_count() const noexcept {
  int total = 0;
  for (const auto& c : classes_) total += c.count;
  return total;
}

std::vector<ClassDamage> class_damage_counts(const FragilitySet& set, double v_real,
                                             CountRounding rounding) {
  std::vector<ClassDamage> out;
  out.reserve(set.size());
  for (const auto& c : set.classes()) out.push_back(class_damage_count(c, v_real, rounding));
  return out;
}

}  // namespace gridtriage
