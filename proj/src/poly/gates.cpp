#include "qsched/errors.hpp"
#include "qsched/poly.hpp"

namespace qsched {
namespace {

bool is_bare_variable(const Expr& e) {
  if (e.terms().size() != 1) return false;
  const auto& [mono, coeff] = *e.terms().begin();
  return mono.size() == 1 && coeff == 1.0;
}

const Expr& require_variable(const Expr& e, const char* role) {
  if (!is_bare_variable(e))
    throw InvalidArgument(std::string("gate penalty operand ") + role + " must be a bare variable");
  return e;
}

const Expr& require_output(const std::optional<Expr>& c) {
  if (!c) throw InvalidArgument("gate penalty is missing operand c");
  return require_variable(*c, "c");
}

}  // namespace

Expr logic(Gate kind, const Expr& a, const std::optional<Expr>& b) {
  switch (kind) {
    case Gate::And:
      if (!b) throw InvalidArgument("AND needs two operands");
      return a * *b;
    case Gate::Or:
      if (!b) throw InvalidArgument("OR needs two operands");
      return a + *b - a * *b;
    case Gate::Not:
      return Expr(1.0) - a;
  }
  throw InvalidArgument("unknown gate");
}

Expr gate_penalty(Gate kind, const Expr& a, const Expr& b, const std::optional<Expr>& c) {
  const Expr& x = require_variable(a, "a");
  const Expr& y = require_variable(b, "b");
  switch (kind) {
    case Gate::And: {
      const Expr& z = require_output(c);
      return x * y - 2.0 * z * (x + y) + 3.0 * z;
    }
    case Gate::Or: {
      const Expr& z = require_output(c);
      return x * y - 2.0 * x * z - 2.0 * y * z + x + y + z;
    }
    case Gate::Not:
      if (c) throw InvalidArgument("NOT penalty takes exactly two operands");
      return 2.0 * x * y - x - y + 1.0;
  }
  throw InvalidArgument("unknown gate");
}

}  // namespace qsched
