#include "gridtriage/damage.hpp"

#include <string>

namespace gridtriage {

int LinePoleInventory::total() const noexcept {
  int sum = 0;
  for (const auto& [cls, n] : per_class_counts) sum += n;
  return sum;
}

double line_damaged_poles(const LinePoleInventory& inv, const FragilitySet& fragility,
                          double v_real, int precision) {
  double bt = 0.0;
  for (const auto& [cls, n] : inv.per_class_counts) {
    if (!fragility.contains(cls))
      throw Error(Errc::UnknownClass,
                  "line " + std::to_string(inv.line_id) + " references undefined class " +
                      std::to_string(cls),
                  {inv.line_id, cls});
    if (n == 0) continue;
    bt += failure_probability(fragility.at(cls), v_real, precision) * n;
  }
  return bt;
}

double line_repair_time(double bt, double avg_repair_hours) {
  if (!(avg_repair_hours > 0.0))
    throw Error(Errc::NonpositiveAverage, "average repair time must be > 0 hours");
  if (!(bt >= 0.0)) throw Error(Errc::InvalidValue, "damaged pole count must be >= 0");
  return bt * avg_repair_hours;
}

double line_repair_time_itemized(std::span<const double> per_pole_hours) {
  double sum = 0.0;
  for (double h : per_pole_hours) {
    if (!(h >= 0.0)) throw Error(Errc::NegativeDuration, "pole repair duration must be >= 0");
    sum += h;
  }
  return sum;
}

LineDamage assess_line(const LinePoleInventory& inv, const FragilitySet& fragility, double v_real,
                       double avg_repair_hours, int precision) {
  const double bt = line_damaged_poles(inv, fragility, v_real, precision);
  return LineDamage{inv.line_id, bt, line_repair_time(bt, avg_repair_hours), std::nullopt};
}

}  // namespace gridtriage
