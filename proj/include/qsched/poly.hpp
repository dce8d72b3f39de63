#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qsched {

using VarIndex = std::uint32_t;

/// Sorted, duplicate-free list of variable indices. The empty monomial is the
/// constant term.
using Monomial = std::vector<VarIndex>;

/// Multilinear polynomial body: monomial -> nonzero coefficient.
using TermMap = std::map<Monomial, double>;

/// One 0/1 value per registered variable, indexed by VarIndex.
using Assignment = std::vector<std::uint8_t>;

struct VarRef {
  VarIndex index;
  std::string name;
};

/// Name <-> index table for binary variables. Indices are handed out densely
/// in registration order.
class Registry {
 public:
  /// Returns the existing variable called `name`, or registers a new one.
  VarRef intern(std::string_view name);
  std::optional<VarRef> find(std::string_view name) const;
  const std::string& name(VarIndex index) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarIndex> index_;
};

using RegistryPtr = std::shared_ptr<Registry>;

RegistryPtr make_registry();

/// Multilinear polynomial over the binary variables of one registry, carrying
/// named sub-expressions ("labels") for residual reporting.
///
/// x*x is folded to x on construction and zero coefficients are never stored,
/// so two expressions with the same value on every 0/1 point compare equal
/// term by term. An expression without a registry is a pure constant and mixes
/// with any other expression.
class Expr {
 public:
  Expr() = default;
  Expr(double constant);  // NOLINT: implicit so scalars mix into arithmetic

  static Expr variable(RegistryPtr registry, VarIndex index);

  const TermMap& terms() const { return terms_; }
  const std::map<std::string, TermMap>& labels() const { return labels_; }
  const RegistryPtr& registry() const { return registry_; }

  /// Highest monomial size; 0 for constants and the zero polynomial.
  std::size_t degree() const;
  double constant() const;
  bool is_zero() const { return terms_.empty(); }

  /// Value at a 0/1 point. `values` must cover every index the expression
  /// references.
  double evaluate(std::span<const std::uint8_t> values) const;

  /// Adds `coeff * monomial` (the monomial need not be sorted or unique).
  void add_term(Monomial monomial, double coeff);

  Expr& operator+=(const Expr& other);
  Expr& operator-=(const Expr& other);
  Expr& operator*=(const Expr& other);
  Expr& operator*=(double factor);

  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
  friend Expr operator*(Expr a, double s) { return a *= s; }
  friend Expr operator*(double s, Expr a) { return a *= s; }
  friend Expr operator-(Expr a) { return a *= -1.0; }

 private:
  friend Expr label(Expr e, std::string name);

  void adopt_registry(const Expr& other);
  void merge_labels(const Expr& other);

  RegistryPtr registry_;
  TermMap terms_;
  std::map<std::string, TermMap> labels_;
};

/// Degree-1 expression for the variable `name`, registering it on first use.
Expr binary(const RegistryPtr& registry, std::string_view name);

Expr square(const Expr& e);

/// Records `e` under `name` for constraint_residuals. Throws on a duplicate.
Expr label(Expr e, std::string name);

/// Evaluates one labeled sub-expression (or any term map) at a 0/1 point.
double evaluate_terms(const TermMap& terms, std::span<const std::uint8_t> values);

std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

// ---------------------------------------------------------------------------
// Logic gates

enum class Gate { And, Or, Not };

/// Arithmetic value of a gate: AND -> ab, OR -> a + b - ab, NOT -> 1 - a.
Expr logic(Gate kind, const Expr& a, const std::optional<Expr>& b = std::nullopt);
inline Expr logic_and(const Expr& a, const Expr& b) { return logic(Gate::And, a, b); }
inline Expr logic_or(const Expr& a, const Expr& b) { return logic(Gate::Or, a, b); }
inline Expr logic_not(const Expr& a) { return logic(Gate::Not, a); }

/// Quadratic penalty that is 0 exactly when the gate relation holds and >= 1
/// otherwise:
///   AND  c = a & b   ab - 2c(a + b) + 3c
///   OR   c = a | b   ab - 2ac - 2bc + a + b + c
///   NOT  b = !a      2ab - a - b + 1        (no `c`)
/// Every operand must be a bare variable.
Expr gate_penalty(Gate kind, const Expr& a, const Expr& b,
                  const std::optional<Expr>& c = std::nullopt);

// ---------------------------------------------------------------------------
// Degree reduction

/// Reduces `e` to degree <= 2 by pairwise product substitution. In each round
/// every monomial of degree >= 3 has its two smallest indices (u, v) replaced by
/// an auxiliary z, and M * (uv - 2uz - 2vz + 3z) is added. One auxiliary is
/// shared per distinct pair. With no explicit strength, M for a pair is
/// 1 + sum |coeff| over the monomials containing both u and v.
///
/// For every assignment of the original variables, the minimum over the
/// auxiliaries equals the original value. Labels are carried over untouched.
Expr quadratize(const Expr& e, std::optional<double> strength = std::nullopt);

// ---------------------------------------------------------------------------
// Compiled QUBO / Ising models

using Pair = std::pair<VarIndex, VarIndex>;

/// Indexed QUBO: offset + sum linear[i] x_i + sum quadratic[(i, j)] x_i x_j,
/// with i < j and no zero coefficients stored. Immutable once built.
class CompiledModel {
 public:
  CompiledModel() = default;
  /// Validates key ordering, index range and drops zero coefficients.
  CompiledModel(std::size_t num_vars, std::map<VarIndex, double> linear,
                std::map<Pair, double> quadratic, double offset,
                std::vector<std::string> names = {},
                std::map<std::string, TermMap> labels = {});

  std::size_t num_vars() const { return num_vars_; }
  const std::map<VarIndex, double>& linear() const { return linear_; }
  const std::map<Pair, double>& quadratic() const { return quadratic_; }
  double offset() const { return offset_; }
  /// Variable names by index (empty strings when built without a registry).
  const std::vector<std::string>& names() const { return names_; }
  const std::map<std::string, TermMap>& labels() const { return labels_; }

  std::size_t num_terms() const { return linear_.size() + quadratic_.size(); }

 private:
  std::size_t num_vars_ = 0;
  std::map<VarIndex, double> linear_;
  std::map<Pair, double> quadratic_;
  double offset_ = 0.0;
  std::vector<std::string> names_;
  std::map<std::string, TermMap> labels_;
};

/// Spin model E(s) = offset + sum h_i s_i + sum J_ij s_i s_j, s in {-1, +1}.
struct IsingModel {
  std::size_t num_vars = 0;
  std::map<Pair, double> coupling;
  std::map<VarIndex, double> field;
  double offset = 0.0;
};

/// Throws DegreeError naming the first monomial of degree >= 3.
CompiledModel compile(const Expr& e);

double energy(const CompiledModel& model, std::span<const std::uint8_t> assignment);

IsingModel to_ising(const CompiledModel& model);

double ising_energy(const IsingModel& model, std::span<const std::int8_t> spins);

/// Value of every labeled sub-expression at `assignment`.
std::map<std::string, double> constraint_residuals(
    const CompiledModel& model, std::span<const std::uint8_t> assignment);

/// Text export:
///   p qubo <num_vars> <num_terms>
///   i j coeff          (i == j for linear terms, ascending (i, j))
///   offset <value>
void write_qubo(std::ostream& os, const CompiledModel& model);

}  // namespace qsched
