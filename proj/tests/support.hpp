#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qsched/poly.hpp"

namespace qsched::test {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(QSCHED_TEST_DATA_DIR) / name;
}

/// Bits of `code` as an assignment of length n, x_0 most significant.
inline Assignment bits_of(std::uint64_t code, std::size_t n) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = (code >> (n - 1 - i)) & 1u;
  return a;
}

/// Calls f on every assignment of n bits.
inline void for_each_assignment(std::size_t n, const std::function<void(const Assignment&)>& f) {
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) f(bits_of(code, n));
}

/// QUBO energy summed straight from the maps, without the library's evaluator.
inline double naive_energy(const CompiledModel& m, const Assignment& x) {
  double e = m.offset();
  for (const auto& [i, c] : m.linear()) e += c * x[i];
  for (const auto& [p, c] : m.quadratic()) e += c * x[p.first] * x[p.second];
  return e;
}

/// Random integer-coefficient model: every linear and pairwise term present
/// with probability `density`, coefficients in [-5, 5].
inline CompiledModel random_model(std::mt19937_64& rng, std::size_t n, double density = 0.6) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::bernoulli_distribution keep(density);
  std::map<VarIndex, double> linear;
  std::map<Pair, double> quadratic;
  for (VarIndex i = 0; i < n; ++i) {
    if (keep(rng)) linear[i] = coef(rng);
    for (VarIndex j = i + 1; j < n; ++j)
      if (keep(rng)) quadratic[{i, j}] = coef(rng);
  }
  return CompiledModel(n, std::move(linear), std::move(quadratic), coef(rng));
}

/// Registry with variables v0..v{n-1} and their expressions.
struct Vars {
  RegistryPtr reg = make_registry();
  std::vector<Expr> x;
  explicit Vars(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x.push_back(binary(reg, "v" + std::to_string(i)));
  }
};

}  // namespace qsched::test
