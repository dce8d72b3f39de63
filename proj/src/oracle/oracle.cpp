#include <cmath>
#include <limits>
#include <string>

#include "qsched/errors.hpp"
#include "qsched/oracle.hpp"

namespace qsched::oracle {
namespace {

constexpr double kTie = 1e-9;
constexpr std::uint64_t kResyncPeriod = 1u << 12;

void check_size(std::size_t n, std::size_t limit) {
  if (n > limit)
    throw SizeError("exhaustive search over " + std::to_string(n) + " variables exceeds the limit of " +
                    std::to_string(limit));
  if (n >= 63) throw SizeError("exhaustive search needs fewer than 63 variables");
}

// Counts through {0,1}^n in lexicographic order (index 0 most significant),
// keeping the energy current with per-variable local fields.
class Odometer {
 public:
  explicit Odometer(const CompiledModel& model)
      : model_(model), n_(model.num_vars()), bits_(n_, 0), field_(n_, 0.0), nbrs_(n_) {
    for (const auto& [i, c] : model.linear()) field_[i] = c;
    for (const auto& [key, c] : model.quadratic()) {
      nbrs_[key.first].push_back({key.second, c});
      nbrs_[key.second].push_back({key.first, c});
    }
    energy_ = model.offset();
  }

  const Assignment& bits() const { return bits_; }
  double energy() const { return energy_; }

  /// Advances to the next assignment; false after the last one.
  template <typename OnFlip>
  bool next(OnFlip&& on_flip) {
    std::size_t pos = n_;
    while (pos > 0 && bits_[pos - 1] == 1) {
      flip(pos - 1);
      on_flip(pos - 1);
      --pos;
    }
    if (pos == 0) return false;
    flip(pos - 1);
    on_flip(pos - 1);
    if (++steps_ % kResyncPeriod == 0) energy_ = qsched::energy(model_, bits_);
    return true;
  }

 private:
  void flip(std::size_t i) {
    const bool on = bits_[i] == 0;
    energy_ += on ? field_[i] : -field_[i];
    bits_[i] = on ? 1 : 0;
    for (const auto& [j, c] : nbrs_[i]) field_[j] += on ? c : -c;
  }

  const CompiledModel& model_;
  std::size_t n_;
  Assignment bits_;
  std::vector<double> field_;
  std::vector<std::vector<std::pair<VarIndex, double>>> nbrs_;
  double energy_ = 0.0;
  std::uint64_t steps_ = 0;
};

}  // namespace

OracleResult brute_force_min(const CompiledModel& model, std::size_t var_limit) {
  check_size(model.num_vars(), var_limit);
  OracleResult out;
  out.min_energy = std::numeric_limits<double>::infinity();
  Odometer odo(model);
  auto consider = [&] {
    if (odo.energy() > out.min_energy + kTie) return;
    const double exact = energy(model, odo.bits());
    if (exact < out.min_energy - kTie) {
      out.min_energy = exact;
      out.argmins.clear();
      out.truncated = false;
    } else if (exact > out.min_energy + kTie) {
      return;
    }
    if (out.argmins.size() < kArgminCap)
      out.argmins.push_back(odo.bits());
    else
      out.truncated = true;
  };
  consider();
  while (odo.next([](std::size_t) {})) consider();
  return out;
}

std::vector<double> projected_minima(const CompiledModel& model, std::span<const VarIndex> kept,
                                     std::size_t var_limit) {
  check_size(model.num_vars(), var_limit);
  const std::size_t k = kept.size();
  if (k >= 32) throw SizeError("too many projected variables");
  std::vector<std::uint64_t> key_bit(model.num_vars(), 0);
  for (std::size_t p = 0; p < k; ++p) {
    if (kept[p] >= model.num_vars()) throw InvalidArgument("projected variable out of range");
    key_bit[kept[p]] = std::uint64_t{1} << (k - 1 - p);
  }
  std::vector<double> best(std::size_t{1} << k, std::numeric_limits<double>::infinity());
  Odometer odo(model);
  std::uint64_t key = 0;
  best[0] = odo.energy();
  while (odo.next([&](std::size_t i) { key ^= key_bit[i]; }))
    if (odo.energy() < best[key]) best[key] = odo.energy();
  return best;
}

double min_over(const Expr& e, Assignment base, std::span<const VarIndex> free_vars) {
  if (free_vars.size() >= 30) throw SizeError("too many free variables");
  for (VarIndex v : free_vars)
    if (v >= base.size()) throw InvalidArgument("free variable outside the assignment");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_vars.size()); ++mask) {
    for (std::size_t p = 0; p < free_vars.size(); ++p) base[free_vars[p]] = (mask >> p) & 1;
    best = std::min(best, e.evaluate(base));
  }
  return best;
}

std::vector<nsp::Schedule> enumerate_feasible(const nsp::Instance& inst, std::size_t cell_limit,
                                              nsp::UpperBoundCheck upper) {
  inst.validate();
  const std::size_t cells = static_cast<std::size_t>(inst.nurses) * inst.days;
  if (cells > cell_limit)
    throw SizeError("enumerating " + std::to_string(cells) + " schedule cells exceeds the limit of " +
                    std::to_string(cell_limit));
  std::vector<nsp::Schedule> out;
  std::vector<std::uint8_t> bits(cells, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    for (std::size_t c = 0; c < cells; ++c) bits[c] = (code >> (cells - 1 - c)) & 1;
    nsp::Schedule sched(inst.nurses, inst.days, bits);
    if (nsp::check_rules(sched, inst, upper).feasible()) out.push_back(std::move(sched));
  }
  return out;
}

}  // namespace qsched::oracle
