#include <charconv>
#include <ostream>
#include <sstream>

#include "qsched/errors.hpp"
#include "qsched/poly.hpp"

namespace qsched {

CompiledModel::CompiledModel(std::size_t num_vars, std::map<VarIndex, double> linear,
                             std::map<Pair, double> quadratic, double offset,
                             std::vector<std::string> names,
                             std::map<std::string, TermMap> labels)
    : num_vars_(num_vars), offset_(offset), names_(std::move(names)), labels_(std::move(labels)) {
  for (const auto& [i, coeff] : linear) {
    if (i >= num_vars_) throw InvalidArgument("linear term index out of range");
    if (coeff != 0.0) linear_.emplace(i, coeff);
  }
  for (const auto& [key, coeff] : quadratic) {
    if (key.first >= key.second) throw InvalidArgument("quadratic keys must satisfy i < j");
    if (key.second >= num_vars_) throw InvalidArgument("quadratic term index out of range");
    if (coeff != 0.0) quadratic_.emplace(key, coeff);
  }
  if (names_.empty()) names_.resize(num_vars_);
  if (names_.size() != num_vars_) throw InvalidArgument("name table does not match num_vars");
}

CompiledModel compile(const Expr& e) {
  std::map<VarIndex, double> linear;
  std::map<Pair, double> quadratic;
  double offset = 0.0;
  for (const auto& [mono, coeff] : e.terms()) {
    switch (mono.size()) {
      case 0:
        offset = coeff;
        break;
      case 1:
        linear.emplace(mono[0], coeff);
        break;
      case 2:
        quadratic.emplace(Pair{mono[0], mono[1]}, coeff);
        break;
      default: {
        std::ostringstream msg;
        msg << "cannot compile monomial of degree " << mono.size() << ": ";
        for (std::size_t k = 0; k < mono.size(); ++k) {
          if (k) msg << '*';
          msg << e.registry()->name(mono[k]);
        }
        throw DegreeError(msg.str());
      }
    }
  }
  std::vector<std::string> names;
  if (e.registry()) names = e.registry()->names();
  const std::size_t n = names.size();
  return CompiledModel(n, std::move(linear), std::move(quadratic), offset, std::move(names), e.labels());
}

namespace {

void check_assignment(const CompiledModel& model, std::span<const std::uint8_t> x) {
  if (x.size() != model.num_vars())
    throw InvalidArgument("assignment length " + std::to_string(x.size()) + " does not match " +
                          std::to_string(model.num_vars()) + " model variables");
  for (auto bit : x)
    if (bit > 1) throw InvalidArgument("assignment entries must be 0 or 1");
}

}  // namespace

double energy(const CompiledModel& model, std::span<const std::uint8_t> x) {
  check_assignment(model, x);
  double total = model.offset();
  for (const auto& [i, coeff] : model.linear())
    if (x[i]) total += coeff;
  for (const auto& [key, coeff] : model.quadratic())
    if (x[key.first] && x[key.second]) total += coeff;
  return total;
}

// x = (s + 1) / 2:
//   a x_i        -> a/2 s_i + a/2
//   b x_i x_j    -> b/4 s_i s_j + b/4 s_i + b/4 s_j + b/4
IsingModel to_ising(const CompiledModel& model) {
  IsingModel out;
  out.num_vars = model.num_vars();
  out.offset = model.offset();
  for (const auto& [i, a] : model.linear()) {
    out.field[i] += a / 2.0;
    out.offset += a / 2.0;
  }
  for (const auto& [key, b] : model.quadratic()) {
    out.coupling[key] += b / 4.0;
    out.field[key.first] += b / 4.0;
    out.field[key.second] += b / 4.0;
    out.offset += b / 4.0;
  }
  std::erase_if(out.field, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

double ising_energy(const IsingModel& model, std::span<const std::int8_t> s) {
  if (s.size() != model.num_vars) throw InvalidArgument("spin vector length does not match model");
  for (auto v : s)
    if (v != 1 && v != -1) throw InvalidArgument("spins must be -1 or +1");
  double total = model.offset;
  for (const auto& [i, h] : model.field) total += h * s[i];
  for (const auto& [key, j] : model.coupling) total += j * s[key.first] * s[key.second];
  return total;
}

std::map<std::string, double> constraint_residuals(const CompiledModel& model,
                                                   std::span<const std::uint8_t> x) {
  check_assignment(model, x);
  std::map<std::string, double> out;
  for (const auto& [name, body] : model.labels()) out.emplace(name, evaluate_terms(body, x));
  return out;
}

namespace {

// Shortest text that parses back to the same double.
std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

}  // namespace

void write_qubo(std::ostream& os, const CompiledModel& model) {
  os << "p qubo " << model.num_vars() << ' ' << model.num_terms() << '\n';
  // Merge linear (i, i) and quadratic (i, j) entries into ascending (i, j).
  auto lin = model.linear().begin();
  auto quad = model.quadratic().begin();
  while (lin != model.linear().end() || quad != model.quadratic().end()) {
    const bool take_linear =
        quad == model.quadratic().end() ||
        (lin != model.linear().end() && lin->first <= quad->first.first);
    if (take_linear) {
      os << lin->first << ' ' << lin->first << ' ' << format_number(lin->second) << '\n';
      ++lin;
    } else {
      os << quad->first.first << ' ' << quad->first.second << ' ' << format_number(quad->second)
         << '\n';
      ++quad;
    }
  }
  os << "offset " << format_number(model.offset()) << '\n';
}

}  // namespace qsched
