#include <numeric>

#include "qsched/errors.hpp"
#include "qsched/nsp.hpp"

namespace qsched::nsp {

BuiltModel assemble(const Instance& inst, T2Mode mode) {
  inst.validate();
  const ResolvedWeights w = resolve_weights(inst);

  auto registry = make_registry();
  const ScheduleVars vars(registry, inst.nurses, inst.days);

  BuiltModel out;
  out.weights = w;
  out.nurses = inst.nurses;
  out.days = inst.days;

  // Order fixes variable numbering: cells, T3 slacks, T4 slacks, T2 gate
  // outputs, then quadratization auxiliaries.
  Expr h;
  if (w.t1 > 0) h += w.t1 * build_t1(inst, vars);
  if (w.t3 > 0) h += w.t3 * build_t3(inst, vars, out.t3_slacks);
  if (w.t4 > 0) h += w.t4 * build_t4(inst, vars, out.t4_slacks);
  if (w.t2 > 0) h += w.t2 * build_t2(inst, vars, mode);
  if (inst.workload_target && w.workload > 0) {
    std::vector<int> everyone(inst.nurses);
    std::iota(everyone.begin(), everyone.end(), 0);
    h += w.workload * build_workload_equality(inst, vars, everyone, *inst.workload_target);
  }
  if (inst.soft_two_day_leave && w.soft > 0) h += w.soft * build_soft_two_day(inst, vars);

  out.model = compile(quadratize(h));
  out.expr = std::move(h);
  out.var_map.reserve(static_cast<std::size_t>(inst.nurses) * inst.days);
  for (int i = 0; i < inst.nurses; ++i)
    for (int j = 0; j < inst.days; ++j) out.var_map.push_back(vars.index(i, j));
  return out;
}

double hard_energy(const BuiltModel& built, std::span<const std::uint8_t> assignment) {
  double total = energy(built.model, assignment);
  auto it = built.model.labels().find("soft");
  if (it != built.model.labels().end())
    total -= built.weights.soft * evaluate_terms(it->second, assignment);
  return total;
}

Schedule decode(const anneal::Sample& sample, const BuiltModel& built) {
  if (sample.assignment.size() != built.model.num_vars())
    throw InvalidArgument("sample has " + std::to_string(sample.assignment.size()) +
                          " variables, model has " + std::to_string(built.model.num_vars()));
  Schedule sched(built.nurses, built.days);
  for (int i = 0; i < built.nurses; ++i)
    for (int j = 0; j < built.days; ++j) sched.set(i, j, sample.assignment[built.cell(i, j)] != 0);
  return sched;
}

}  // namespace qsched::nsp
