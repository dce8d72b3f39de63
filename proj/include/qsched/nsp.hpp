#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "qsched/anneal.hpp"
#include "qsched/poly.hpp"

/// Three-shift nurse rostering as a penalty QUBO.
///
/// Nurses are split into fixed groups: the first `graveyard_size` nurses work
/// graveyard shifts (U1), the next `night_size` work night shifts (U2) and the
/// rest work day shifts (U3). Storage and accessors are 0-based; anything shown
/// to a person (reports, tables, variable names, Saturday lists) is 1-based.
namespace qsched::nsp {

enum class Weekday { Mon, Tue, Wed, Thu, Fri, Sat, Sun };

std::optional<Weekday> parse_weekday(std::string_view text);
std::string_view to_string(Weekday day);

/// Penalty multipliers. Unset entries resolve to defaults in resolve_weights().
struct Weights {
  std::optional<double> t1;        // rules 1-3: per-day group head counts
  std::optional<double> t2;        // rule 4: no isolated working day
  std::optional<double> t3;        // rule 4: at most k days in any k+2 window
  std::optional<double> t4;        // rule 5: at most 5 days per Saturday week
  std::optional<double> workload;  // per-nurse shift count target
  std::optional<double> soft;      // two-day-leave preference
};

struct ResolvedWeights {
  double t1, t2, t3, t4, workload, soft;
};

struct Instance {
  int nurses = 0;
  int graveyard_size = 0;
  int graveyard_per_day = 0;
  int night_size = 0;
  int night_per_day = 0;
  int day_per_day = 0;
  int max_consecutive = 2;  // k
  int days = 1;
  Weekday first_weekday = Weekday::Mon;
  Weights weights;
  bool soft_two_day_leave = false;
  std::optional<int> workload_target;

  int day_size() const { return nurses - graveyard_size - night_size; }
  /// Nurses subject to the run-length rule (U1 and U2).
  int shift_nurses() const { return graveyard_size + night_size; }

  /// Throws InstanceError describing the first violated invariant.
  void validate() const;
};

/// Hard weights default to 1 without the soft term. With it they default to
/// graveyard_size * (days - 1) + 1, one more than the largest possible soft
/// cost, so no soft gain can pay for a hard violation.
ResolvedWeights resolve_weights(const Instance& inst);

/// 1-based days in 1..days that fall on a Saturday, ascending.
std::vector<int> saturdays(Weekday first_weekday, int days);

/// Saturdays whose full week [s, s + 6] fits in the horizon.
std::vector<int> full_week_starts(const Instance& inst);

/// One binary expression per (nurse, day) cell, named x[i,j] (1-based).
class ScheduleVars {
 public:
  ScheduleVars(const RegistryPtr& registry, int nurses, int days);
  const Expr& at(int nurse, int day) const { return cells_[nurse * days_ + day]; }
  VarIndex index(int nurse, int day) const { return indices_[nurse * days_ + day]; }
  int nurses() const { return nurses_; }
  int days() const { return days_; }
  const RegistryPtr& registry() const { return registry_; }

 private:
  RegistryPtr registry_;
  int nurses_;
  int days_;
  std::vector<Expr> cells_;
  std::vector<VarIndex> indices_;
};

/// (nurse, window start day, slack position), all 1-based -> variable index.
using SlackKey = std::tuple<int, int, int>;
using SlackMap = std::map<SlackKey, VarIndex>;

enum class T2Mode {
  /// Closed-form cubic x_{j+1}(1 - x_j)(1 - x_{j+2}) plus the two boundary
  /// terms; degree is reduced later by quadratize().
  polynomial,
  /// OR/NOT/AND gate penalties over auxiliary gate outputs (already quadratic).
  gates,
};

/// Rules 1-3: sum over days and groups of (on-duty count - required)^2. "T1".
Expr build_t1(const Instance& inst, const ScheduleVars& vars);

/// Rule 4 lower bound: zero iff no U1/U2 nurse has a working run of length 1.
/// Throws InstanceError when days < 2. "T2".
Expr build_t2(const Instance& inst, const ScheduleVars& vars, T2Mode mode = T2Mode::polynomial);

/// Rule 4 upper bound: for every U1/U2 nurse and every (k+2)-day window,
/// (window sum - sum of k slack bits)^2. Zero expression when days < k + 2.
/// "T3".
Expr build_t3(const Instance& inst, const ScheduleVars& vars, SlackMap& slacks);

/// Rule 5: for every nurse and every full Saturday week,
/// (week sum - sum of 5 slack bits)^2. "T4".
Expr build_t4(const Instance& inst, const ScheduleVars& vars, SlackMap& slacks);

/// Count of graveyard (nurse, j) pairs that are not two consecutive working
/// days, j = 1..days-1. "soft".
Expr build_soft_two_day(const Instance& inst, const ScheduleVars& vars);

/// sum over `group` (0-based nurses) of (shifts worked - target)^2. "workload".
Expr build_workload_equality(const Instance& inst, const ScheduleVars& vars,
                             std::span<const int> group, int target);

struct BuiltModel {
  Expr expr;  // weighted objective before degree reduction
  CompiledModel model;
  std::vector<VarIndex> var_map;  // nurse * days + day -> variable index
  SlackMap t3_slacks;
  SlackMap t4_slacks;
  ResolvedWeights weights;
  int nurses = 0;
  int days = 0;

  VarIndex cell(int nurse, int day) const { return var_map[nurse * days + day]; }
};

/// Builds every term with a positive weight, quadratizes and compiles. Terms
/// with weight 0 are left out entirely, including their slack variables.
/// Variables are registered cells first, then T3 slacks, T4 slacks, T2 gate
/// auxiliaries and finally quadratization auxiliaries.
BuiltModel assemble(const Instance& inst, T2Mode mode = T2Mode::polynomial);

/// Energy of `assignment` restricted to the hard terms (T1..T4 and workload),
/// with weights applied; labeled residuals are read from the model.
double hard_energy(const BuiltModel& built, std::span<const std::uint8_t> assignment);

// ---------------------------------------------------------------------------
// Schedules and rule checking

class Schedule {
 public:
  Schedule(int nurses, int days);
  Schedule(int nurses, int days, std::vector<std::uint8_t> bits);

  int nurses() const { return nurses_; }
  int days() const { return days_; }
  std::uint8_t at(int nurse, int day) const { return bits_[nurse * days_ + day]; }
  void set(int nurse, int day, bool on) { bits_[nurse * days_ + day] = on ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  int row_sum(int nurse) const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  int nurses_;
  int days_;
  std::vector<std::uint8_t> bits_;
};

/// Reads the schedule cells of a sample through the model's var_map.
Schedule decode(const anneal::Sample& sample, const BuiltModel& built);

/// Soft cost of graveyard nurses: number of (i, j) with not (x_ij and x_i,j+1).
int soft_two_day_cost(const Schedule& sched, const Instance& inst);

enum class UpperBoundCheck {
  /// Every maximal working run has length <= k.
  run_length,
  /// Every (k+2)-day window holds at most k working days (what T3 encodes).
  window_sum,
};

struct Violation {
  int rule;       // 1..5
  int nurse;      // 1-based, 0 when the violation is a whole-day count
  int first_day;  // 1-based
  int last_day;   // 1-based, inclusive
  std::string detail;
};

struct RuleVerdict {
  bool checked = false;  // false when the rule's weight is 0
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

struct RuleReport {
  std::array<RuleVerdict, 5> rules;  // rules[r - 1] is rule r
  bool feasible() const;
};

/// Direct combinatorial check of rules 1-5, independent of the QUBO:
///   1-3  per-day on-duty counts of U1/U2/U3 equal the required numbers;
///   4    every working run of a U1/U2 nurse is at least 2 days long and
///        respects the upper bound selected by `upper`;
///   5    no nurse works more than 5 days of a full Saturday-anchored week.
/// A rule is skipped when the weight of its penalty term is 0 (rule 4 checks
/// its lower half against t2 and its upper half against t3).
RuleReport check_rules(const Schedule& sched, const Instance& inst,
                       UpperBoundCheck upper = UpperBoundCheck::run_length);

}  // namespace qsched::nsp
