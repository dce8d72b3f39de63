#include <array>
#include <cmath>
#include <string>

#include "qsched/errors.hpp"
#include "qsched/nsp.hpp"

namespace qsched::nsp {
namespace {

constexpr std::array<std::string_view, 7> kWeekdayNames{"Mon", "Tue", "Wed", "Thu",
                                                       "Fri", "Sat", "Sun"};

void check_group(const char* name, int size, int per_day) {
  using std::to_string;
  if (size < 0) throw InstanceError(std::string(name) + " group size must be nonnegative");
  if (per_day < 0) throw InstanceError(std::string(name) + " per-day count must be nonnegative");
  if (size == 0 && per_day != 0)
    throw InstanceError(std::string(name) + " group is empty but requires " + to_string(per_day) +
                        " per day");
  if (size > 0 && per_day >= size)
    throw InstanceError(std::string(name) + " per-day count " + to_string(per_day) +
                        " must be below the group size " + to_string(size));
}

void check_weight(const char* name, const std::optional<double>& w) {
  if (w && (!std::isfinite(*w) || *w < 0.0))
    throw InstanceError(std::string("weight ") + name + " must be a nonnegative number");
}

}  // namespace

std::optional<Weekday> parse_weekday(std::string_view text) {
  for (std::size_t i = 0; i < kWeekdayNames.size(); ++i)
    if (kWeekdayNames[i] == text) return static_cast<Weekday>(i);
  return std::nullopt;
}

std::string_view to_string(Weekday day) { return kWeekdayNames[static_cast<int>(day)]; }

void Instance::validate() const {
  using std::to_string;
  if (nurses < 1) throw InstanceError("nurse count must be positive");
  if (days < 1) throw InstanceError("days must be at least 1");
  if (max_consecutive < 2) throw InstanceError("max_consecutive must be at least 2");
  check_group("graveyard", graveyard_size, graveyard_per_day);
  check_group("night", night_size, night_per_day);
  if (graveyard_size + night_size > nurses)
    throw InstanceError("graveyard and night groups exceed the nurse count");
  if (day_per_day < 0 || day_per_day > day_size())
    throw InstanceError("day_per_day " + to_string(day_per_day) + " exceeds the " +
                        to_string(day_size()) + " day-shift nurses");
  check_weight("t1", weights.t1);
  check_weight("t2", weights.t2);
  check_weight("t3", weights.t3);
  check_weight("t4", weights.t4);
  check_weight("workload", weights.workload);
  check_weight("soft", weights.soft);
  if (workload_target && (*workload_target < 0 || *workload_target > days))
    throw InstanceError("workload_target must lie in [0, days]");
}

ResolvedWeights resolve_weights(const Instance& inst) {
  const double hard =
      inst.soft_two_day_leave ? inst.graveyard_size * (inst.days - 1) + 1.0 : 1.0;
  const auto& w = inst.weights;
  return {w.t1.value_or(hard),       w.t2.value_or(hard), w.t3.value_or(hard),
          w.t4.value_or(hard),       w.workload.value_or(hard),
          inst.soft_two_day_leave ? w.soft.value_or(1.0) : 0.0};
}

std::vector<int> saturdays(Weekday first_weekday, int days) {
  std::vector<int> out;
  const int first = static_cast<int>(first_weekday);
  const int sat = static_cast<int>(Weekday::Sat);
  for (int j = 1 + (sat - first + 7) % 7; j <= days; j += 7) out.push_back(j);
  return out;
}

std::vector<int> full_week_starts(const Instance& inst) {
  std::vector<int> out;
  for (int s : saturdays(inst.first_weekday, inst.days))
    if (s + 6 <= inst.days) out.push_back(s);
  return out;
}

Schedule::Schedule(int nurses, int days)
    : nurses_(nurses), days_(days), bits_(static_cast<std::size_t>(nurses) * days, 0) {}

Schedule::Schedule(int nurses, int days, std::vector<std::uint8_t> bits)
    : nurses_(nurses), days_(days), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(nurses) * days)
    throw InvalidArgument("schedule bit count does not match its dimensions");
  for (auto b : bits_)
    if (b > 1) throw InvalidArgument("schedule entries must be 0 or 1");
}

int Schedule::row_sum(int nurse) const {
  int total = 0;
  for (int j = 0; j < days_; ++j) total += at(nurse, j);
  return total;
}

}  // namespace qsched::nsp
