#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "qsched/anneal.hpp"
#include "qsched/errors.hpp"

namespace qsched::anneal {

BetaRange default_beta_range(const CompiledModel& model) {
  const std::size_t n = model.num_vars();
  std::vector<double> total(n, 0.0);
  std::vector<double> smallest(n, std::numeric_limits<double>::infinity());
  auto touch = [&](VarIndex i, double coeff) {
    const double a = std::abs(coeff);
    total[i] += a;
    smallest[i] = std::min(smallest[i], a);
  };
  for (const auto& [i, coeff] : model.linear()) touch(i, coeff);
  for (const auto& [key, coeff] : model.quadratic()) {
    touch(key.first, coeff);
    touch(key.second, coeff);
  }
  const double de_max = n ? *std::max_element(total.begin(), total.end()) : 0.0;
  const double de_min = n ? *std::min_element(smallest.begin(), smallest.end())
                          : std::numeric_limits<double>::infinity();
  if (!(de_max > 0.0) || !std::isfinite(de_min))
    throw DegenerateModelError("model has no nonzero linear or quadratic coefficient");
  return {std::log(2.0) / de_max, std::log(1000.0) / de_min};
}

double beta_at(const BetaRange& range, std::uint32_t t, std::uint32_t num_sweeps) {
  if (num_sweeps <= 1) return range.hot;
  const double frac = static_cast<double>(t) / static_cast<double>(num_sweeps - 1);
  return range.hot * std::pow(range.cold / range.hot, frac);
}

Adjacency::Adjacency(const CompiledModel& model)
    : linear_(model.num_vars(), 0.0), start_(model.num_vars() + 1, 0) {
  for (const auto& [i, coeff] : model.linear()) linear_[i] = coeff;
  for (const auto& [key, coeff] : model.quadratic()) {
    ++start_[key.first + 1];
    ++start_[key.second + 1];
  }
  for (std::size_t i = 0; i < linear_.size(); ++i) start_[i + 1] += start_[i];
  neighbor_.resize(start_.back());
  weight_.resize(start_.back());
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (const auto& [key, coeff] : model.quadratic()) {
    neighbor_[fill[key.first]] = key.second;
    weight_[fill[key.first]++] = coeff;
    neighbor_[fill[key.second]] = key.first;
    weight_[fill[key.second]++] = coeff;
  }
}

FlipState::FlipState(const Adjacency& adj, Assignment initial)
    : adj_(&adj), bits_(std::move(initial)), field_(adj.size(), 0.0) {
  if (bits_.size() != adj.size()) throw InvalidArgument("state length does not match model");
  for (std::size_t i = 0; i < adj.size(); ++i) {
    double f = adj.linear(i);
    auto nbr = adj.neighbors(i);
    auto w = adj.weights(i);
    for (std::size_t k = 0; k < nbr.size(); ++k)
      if (bits_[nbr[k]]) f += w[k];
    field_[i] = f;
  }
}

void FlipState::flip(std::size_t i) {
  bits_[i] ^= 1;
  const double sign = bits_[i] ? 1.0 : -1.0;
  auto nbr = adj_->neighbors(i);
  auto w = adj_->weights(i);
  for (std::size_t k = 0; k < nbr.size(); ++k) field_[nbr[k]] += sign * w[k];
}

namespace {

// Uphill moves this far beyond the temperature are accepted with probability
// below e^-50; they are rejected without drawing.
constexpr double kMaxUphillExponent = 50.0;

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Sample run_read(const CompiledModel& model, const Adjacency& adj, const std::vector<double>& betas,
                std::uint64_t seed, std::uint32_t read) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), read};
  std::mt19937_64 rng(seq);

  const std::size_t n = adj.size();
  Assignment init(n);
  for (auto& bit : init) bit = static_cast<std::uint8_t>(rng() >> 63);
  FlipState state(adj, std::move(init));

  for (double beta : betas) {
    for (std::size_t i = 0; i < n; ++i) {
      const double de = state.delta(i);
      if (de <= 0.0) {
        state.flip(i);
        continue;
      }
      const double exponent = beta * de;
      if (exponent > kMaxUphillExponent) continue;
      if (unit_interval(rng) < std::exp(-exponent)) state.flip(i);
    }
  }

  Sample s;
  s.assignment = state.bits();
  s.energy = energy(model, s.assignment);
  s.read_index = read;
  return s;
}

}  // namespace

SampleSet sample(const CompiledModel& model, const AnnealParams& params) {
  if (params.num_reads == 0) throw InvalidArgument("num_reads must be positive");
  if (params.num_sweeps == 0) throw InvalidArgument("num_sweeps must be positive");
  const BetaRange range = params.beta_range ? *params.beta_range : default_beta_range(model);
  if (!(range.hot > 0.0) || !(range.cold >= range.hot) || !std::isfinite(range.cold))
    throw InvalidArgument("beta range must satisfy 0 < beta_hot <= beta_cold");

  std::vector<double> betas(params.num_sweeps);
  for (std::uint32_t t = 0; t < params.num_sweeps; ++t) betas[t] = beta_at(range, t, params.num_sweeps);

  const Adjacency adj(model);
  SampleSet out;
  out.samples.resize(params.num_reads);

  unsigned workers = params.num_threads ? params.num_threads : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, params.num_reads);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t r = next++; r < params.num_reads; r = next++)
      out.samples[r] = run_read(model, adj, betas, params.seed, r);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return out;
}

const Sample& best(const SampleSet& set) {
  if (set.samples.empty()) throw InvalidArgument("best() of an empty sample set");
  const Sample* winner = &set.samples.front();
  for (const Sample& s : set.samples)
    if (s.energy < winner->energy || (s.energy == winner->energy && s.read_index < winner->read_index))
      winner = &s;
  return *winner;
}

}  // namespace qsched::anneal
