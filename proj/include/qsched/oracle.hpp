#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsched/nsp.hpp"
#include "qsched/poly.hpp"

/// Exhaustive ground truth for desk-sized problems.
namespace qsched::oracle {

inline constexpr std::size_t kDefaultVarLimit = 22;
inline constexpr std::size_t kDefaultCellLimit = 20;
inline constexpr std::size_t kArgminCap = 1024;

struct OracleResult {
  double min_energy = 0.0;
  /// Minimizers in lexicographic order (x_0 most significant), at most
  /// kArgminCap of them.
  std::vector<Assignment> argmins;
  bool truncated = false;
};

/// Exact minimum over all 2^n assignments. Throws SizeError above var_limit.
OracleResult brute_force_min(const CompiledModel& model, std::size_t var_limit = kDefaultVarLimit);

/// For every assignment of `kept` (key bit K-1-p holds kept[p], so ascending
/// keys are lexicographic), the minimum energy over all other variables.
std::vector<double> projected_minima(const CompiledModel& model, std::span<const VarIndex> kept,
                                     std::size_t var_limit = kDefaultVarLimit);

/// Minimum of `e` over the `free_vars`, every other variable fixed by `base`.
double min_over(const Expr& e, Assignment base, std::span<const VarIndex> free_vars);

/// Every schedule passing check_rules, in lexicographic order of the row-major
/// bit vector. Throws SizeError when nurses * days exceeds cell_limit.
std::vector<nsp::Schedule> enumerate_feasible(
    const nsp::Instance& inst, std::size_t cell_limit = kDefaultCellLimit,
    nsp::UpperBoundCheck upper = nsp::UpperBoundCheck::run_length);

}  // namespace qsched::oracle
