#include <string>

#include "qsched/errors.hpp"
#include "qsched/nsp.hpp"

namespace qsched::nsp {
namespace {

std::string cell_name(int nurse, int day) {
  return "x[" + std::to_string(nurse + 1) + "," + std::to_string(day + 1) + "]";
}

std::string slack_name(char prefix, int nurse, int start, int p) {
  return std::string(1, prefix) + "[" + std::to_string(nurse) + "," + std::to_string(start) + "," +
         std::to_string(p) + "]";
}

Expr column_sum(const ScheduleVars& vars, int first_nurse, int count, int day) {
  Expr sum;
  for (int i = first_nurse; i < first_nurse + count; ++i) sum += vars.at(i, day);
  return sum;
}

Expr window_sum(const ScheduleVars& vars, int nurse, int first_day, int length) {
  Expr sum;
  for (int j = first_day; j < first_day + length; ++j) sum += vars.at(nurse, j);
  return sum;
}

// (sum of cells in the window - sum of fresh slack bits)^2, slack keys 1-based.
Expr slack_window(const ScheduleVars& vars, SlackMap& slacks, char prefix, int nurse,
                  int first_day, int length, int num_slacks) {
  Expr slack_sum;
  for (int p = 1; p <= num_slacks; ++p) {
    const VarRef ref = vars.registry()->intern(slack_name(prefix, nurse + 1, first_day + 1, p));
    slacks.emplace(SlackKey{nurse + 1, first_day + 1, p}, ref.index);
    slack_sum += Expr::variable(vars.registry(), ref.index);
  }
  return square(window_sum(vars, nurse, first_day, length) - slack_sum);
}

}  // namespace

ScheduleVars::ScheduleVars(const RegistryPtr& registry, int nurses, int days)
    : registry_(registry), nurses_(nurses), days_(days) {
  cells_.reserve(static_cast<std::size_t>(nurses) * days);
  indices_.reserve(cells_.capacity());
  for (int i = 0; i < nurses; ++i) {
    for (int j = 0; j < days; ++j) {
      const VarRef ref = registry->intern(cell_name(i, j));
      indices_.push_back(ref.index);
      cells_.push_back(Expr::variable(registry, ref.index));
    }
  }
}

Expr build_t1(const Instance& inst, const ScheduleVars& vars) {
  const std::array<std::array<int, 3>, 3> groups{{
      {0, inst.graveyard_size, inst.graveyard_per_day},
      {inst.graveyard_size, inst.night_size, inst.night_per_day},
      {inst.shift_nurses(), inst.day_size(), inst.day_per_day},
  }};
  Expr t1;
  for (int j = 0; j < inst.days; ++j)
    for (const auto& [first, size, required] : groups)
      if (size > 0) t1 += square(column_sum(vars, first, size, j) - static_cast<double>(required));
  return label(std::move(t1), "T1");
}

Expr build_t2(const Instance& inst, const ScheduleVars& vars, T2Mode mode) {
  const int d = inst.days;
  if (inst.shift_nurses() == 0) return label(Expr(), "T2");
  if (d < 2) throw InstanceError("the run-length rule needs at least 2 days");

  const RegistryPtr& reg = vars.registry();
  auto aux = [&](const char* kind, int nurse, int j) {
    return binary(reg, std::string(kind) + "[" + std::to_string(nurse + 1) + "," +
                           std::to_string(j + 1) + "]");
  };

  Expr t2;
  for (int i = 0; i < inst.shift_nurses(); ++i) {
    auto x = [&](int j) -> const Expr& { return vars.at(i, j); };
    if (mode == T2Mode::polynomial) {
      for (int j = 0; j + 2 < d; ++j) t2 += x(j + 1) * logic_not(x(j)) * logic_not(x(j + 2));
      t2 += x(0) * logic_not(x(1));
      t2 += x(d - 1) * logic_not(x(d - 2));
      continue;
    }
    // An AND whose output is pinned to 0 has penalty a*b (c = 0 in
    // ab - 2c(a + b) + 3c), so the outer gate needs no output variable.
    for (int j = 0; j + 2 < d; ++j) {
      const Expr either = aux("t2or", i, j);
      const Expr neither = aux("t2nor", i, j);
      t2 += gate_penalty(Gate::Or, x(j), x(j + 2), either);
      t2 += gate_penalty(Gate::Not, either, neither);
      t2 += x(j + 1) * neither;
    }
    const Expr off_second = aux("t2head", i, 0);
    t2 += gate_penalty(Gate::Not, x(1), off_second) + x(0) * off_second;
    const Expr off_before_last = aux("t2tail", i, d - 1);
    t2 += gate_penalty(Gate::Not, x(d - 2), off_before_last) + x(d - 1) * off_before_last;
  }
  return label(std::move(t2), "T2");
}

Expr build_t3(const Instance& inst, const ScheduleVars& vars, SlackMap& slacks) {
  const int k = inst.max_consecutive;
  const int windows = inst.days - (k + 1);
  Expr t3;
  for (int i = 0; i < inst.shift_nurses(); ++i)
    for (int start = 0; start < windows; ++start)
      t3 += slack_window(vars, slacks, 's', i, start, k + 2, k);
  return label(std::move(t3), "T3");
}

Expr build_t4(const Instance& inst, const ScheduleVars& vars, SlackMap& slacks) {
  const std::vector<int> weeks = full_week_starts(inst);
  Expr t4;
  for (int i = 0; i < inst.nurses; ++i)
    for (int sat : weeks) t4 += slack_window(vars, slacks, 'y', i, sat - 1, 7, 5);
  return label(std::move(t4), "T4");
}

Expr build_soft_two_day(const Instance& inst, const ScheduleVars& vars) {
  Expr cost;
  for (int i = 0; i < inst.graveyard_size; ++i)
    for (int j = 0; j + 1 < inst.days; ++j) cost += 1.0 - vars.at(i, j) * vars.at(i, j + 1);
  return label(std::move(cost), "soft");
}

Expr build_workload_equality(const Instance& inst, const ScheduleVars& vars,
                             std::span<const int> group, int target) {
  Expr total;
  for (int i : group) {
    if (i < 0 || i >= inst.nurses) throw InvalidArgument("workload group names an unknown nurse");
    total += square(window_sum(vars, i, 0, inst.days) - static_cast<double>(target));
  }
  return label(std::move(total), "workload");
}

}  // namespace qsched::nsp
