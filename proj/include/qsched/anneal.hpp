#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsched/poly.hpp"

namespace qsched::anneal {

struct BetaRange {
  double hot;   // first sweep
  double cold;  // last sweep
};

struct AnnealParams {
  std::uint32_t num_reads = 10;
  std::uint32_t num_sweeps = 10000;
  std::uint64_t seed = 0;
  /// Derived from the model by default_beta_range() when absent.
  std::optional<BetaRange> beta_range;
  /// Worker threads for independent reads; 0 picks hardware concurrency.
  /// Results do not depend on this value.
  unsigned num_threads = 0;
};

struct Sample {
  Assignment assignment;
  double energy = 0.0;
  std::uint32_t read_index = 0;
};

/// One final-state sample per read, ordered by read_index.
struct SampleSet {
  std::vector<Sample> samples;
};

/// beta_hot = ln 2 / dE_max, beta_cold = ln 1000 / dE_min, where dE_max is the
/// largest per-variable sum of |coefficients| touching it and dE_min the
/// smallest nonzero |coefficient| in the model. Throws DegenerateModelError for
/// a model with no linear or quadratic term.
BetaRange default_beta_range(const CompiledModel& model);

/// Multi-read single-flip Metropolis annealing. Read r draws from an RNG
/// seeded only by (seed, r), so output is reproducible and independent of
/// thread scheduling.
SampleSet sample(const CompiledModel& model, const AnnealParams& params);

/// Lowest-energy sample; ties go to the lowest read_index.
const Sample& best(const SampleSet& set);

/// Inverse temperature of sweep `t` out of `num_sweeps` (geometric ramp).
double beta_at(const BetaRange& range, std::uint32_t t, std::uint32_t num_sweeps);

/// Adjacency of a compiled model in compressed-row form.
class Adjacency {
 public:
  explicit Adjacency(const CompiledModel& model);

  std::size_t size() const { return linear_.size(); }
  double linear(std::size_t i) const { return linear_[i]; }
  std::span<const VarIndex> neighbors(std::size_t i) const {
    return {neighbor_.data() + start_[i], neighbor_.data() + start_[i + 1]};
  }
  std::span<const double> weights(std::size_t i) const {
    return {weight_.data() + start_[i], weight_.data() + start_[i + 1]};
  }

 private:
  std::vector<double> linear_;
  std::vector<std::size_t> start_;
  std::vector<VarIndex> neighbor_;
  std::vector<double> weight_;
};

/// Bit state plus cached local fields f_i = linear_i + sum_j Q_ij x_j, so the
/// cost of flipping i is (1 - 2 x_i) f_i and a flip updates only i's
/// neighbors.
class FlipState {
 public:
  FlipState(const Adjacency& adj, Assignment initial);

  double delta(std::size_t i) const {
    return bits_[i] ? -field_[i] : field_[i];
  }
  void flip(std::size_t i);
  const Assignment& bits() const { return bits_; }

 private:
  const Adjacency* adj_;
  Assignment bits_;
  std::vector<double> field_;
};

}  // namespace qsched::anneal
