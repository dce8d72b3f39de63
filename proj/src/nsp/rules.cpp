#include <algorithm>
#include <string>

#include "qsched/errors.hpp"
#include "qsched/nsp.hpp"

namespace qsched::nsp {
namespace {

void check_head_counts(const Schedule& s, const Instance& inst, RuleReport& report) {
  struct Group {
    int rule, first, size, required;
    const char* name;
  };
  const Group groups[] = {
      {1, 0, inst.graveyard_size, inst.graveyard_per_day, "graveyard"},
      {2, inst.graveyard_size, inst.night_size, inst.night_per_day, "night"},
      {3, inst.shift_nurses(), inst.day_size(), inst.day_per_day, "day"},
  };
  for (const Group& g : groups) {
    RuleVerdict& verdict = report.rules[g.rule - 1];
    verdict.checked = true;
    for (int j = 0; j < s.days(); ++j) {
      int on = 0;
      for (int i = g.first; i < g.first + g.size; ++i) on += s.at(i, j);
      if (on != g.required)
        verdict.violations.push_back({g.rule, 0, j + 1, j + 1,
                                      std::to_string(on) + " " + g.name + " nurses on duty, " +
                                          std::to_string(g.required) + " required"});
    }
  }
}

void check_runs(const Schedule& s, const Instance& inst, bool lower, bool upper,
                UpperBoundCheck mode, RuleVerdict& verdict) {
  const int k = inst.max_consecutive;
  for (int i = 0; i < inst.shift_nurses(); ++i) {
    for (int j = 0; j < s.days();) {
      if (!s.at(i, j)) {
        ++j;
        continue;
      }
      int end = j;
      while (end + 1 < s.days() && s.at(i, end + 1)) ++end;
      const int length = end - j + 1;
      if (lower && length < 2)
        verdict.violations.push_back({4, i + 1, j + 1, end + 1, "isolated working day"});
      if (upper && mode == UpperBoundCheck::run_length && length > k)
        verdict.violations.push_back({4, i + 1, j + 1, end + 1,
                                      std::to_string(length) + " consecutive working days, at most " +
                                          std::to_string(k) + " allowed"});
      j = end + 1;
    }
    if (upper && mode == UpperBoundCheck::window_sum) {
      for (int start = 0; start + k + 2 <= s.days(); ++start) {
        int on = 0;
        for (int j = start; j < start + k + 2; ++j) on += s.at(i, j);
        if (on > k)
          verdict.violations.push_back({4, i + 1, start + 1, start + k + 2,
                                        std::to_string(on) + " working days in a " +
                                            std::to_string(k + 2) + "-day window"});
      }
    }
  }
}

void check_weeks(const Schedule& s, const Instance& inst, RuleVerdict& verdict) {
  for (int sat : full_week_starts(inst)) {
    for (int i = 0; i < s.nurses(); ++i) {
      int on = 0;
      for (int j = sat - 1; j < sat + 6; ++j) on += s.at(i, j);
      if (on > 5)
        verdict.violations.push_back(
            {5, i + 1, sat, sat + 6, std::to_string(on) + " working days in the week"});
    }
  }
}

}  // namespace

bool RuleReport::feasible() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleVerdict& r) { return r.passed(); });
}

RuleReport check_rules(const Schedule& sched, const Instance& inst, UpperBoundCheck upper) {
  if (sched.nurses() != inst.nurses || sched.days() != inst.days)
    throw InvalidArgument("schedule is " + std::to_string(sched.nurses()) + "x" +
                          std::to_string(sched.days()) + ", instance expects " +
                          std::to_string(inst.nurses) + "x" + std::to_string(inst.days));
  const ResolvedWeights w = resolve_weights(inst);
  RuleReport report;
  if (w.t1 > 0) check_head_counts(sched, inst, report);
  if (w.t2 > 0 || w.t3 > 0) {
    report.rules[3].checked = true;
    check_runs(sched, inst, w.t2 > 0, w.t3 > 0, upper, report.rules[3]);
  }
  if (w.t4 > 0) {
    report.rules[4].checked = true;
    check_weeks(sched, inst, report.rules[4]);
  }
  return report;
}

int soft_two_day_cost(const Schedule& sched, const Instance& inst) {
  int cost = 0;
  for (int i = 0; i < inst.graveyard_size; ++i)
    for (int j = 0; j + 1 < sched.days(); ++j) cost += !(sched.at(i, j) && sched.at(i, j + 1));
  return cost;
}

}  // namespace qsched::nsp
