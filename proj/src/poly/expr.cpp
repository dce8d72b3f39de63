#include <algorithm>
#include <ostream>
#include <sstream>

#include "qsched/errors.hpp"
#include "qsched/poly.hpp"

namespace qsched {

VarRef Registry::intern(std::string_view name) {
  if (name.empty()) throw InvalidArgument("variable name must be nonempty");
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return {it->second, key};
  const auto index = static_cast<VarIndex>(names_.size());
  names_.push_back(key);
  index_.emplace(key, index);
  return {index, std::move(key)};
}

std::optional<VarRef> Registry::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return VarRef{it->second, it->first};
}

const std::string& Registry::name(VarIndex index) const {
  if (index >= names_.size()) throw InvalidArgument("variable index out of range");
  return names_[index];
}

RegistryPtr make_registry() { return std::make_shared<Registry>(); }

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void accumulate(TermMap& terms, Monomial monomial, double coeff) {
  if (coeff == 0.0) return;
  auto [it, inserted] = terms.try_emplace(std::move(monomial), coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0.0) terms.erase(it);
}

}  // namespace

Expr::Expr(double constant) {
  if (constant != 0.0) terms_.emplace(Monomial{}, constant);
}

Expr Expr::variable(RegistryPtr registry, VarIndex index) {
  if (!registry) throw InvalidArgument("variable needs a registry");
  if (index >= registry->size()) throw InvalidArgument("variable index out of range");
  Expr e;
  e.registry_ = std::move(registry);
  e.terms_.emplace(Monomial{index}, 1.0);
  return e;
}

std::size_t Expr::degree() const {
  std::size_t d = 0;
  for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.size());
  return d;
}

double Expr::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? 0.0 : it->second;
}

double evaluate_terms(const TermMap& terms, std::span<const std::uint8_t> values) {
  double total = 0.0;
  for (const auto& [mono, coeff] : terms) {
    bool on = true;
    for (VarIndex v : mono) {
      if (v >= values.size()) throw InvalidArgument("assignment does not cover variable index");
      if (values[v] > 1) throw InvalidArgument("assignment entries must be 0 or 1");
      if (values[v] == 0) {
        on = false;
        break;
      }
    }
    if (on) total += coeff;
  }
  return total;
}

double Expr::evaluate(std::span<const std::uint8_t> values) const {
  return evaluate_terms(terms_, values);
}

void Expr::add_term(Monomial monomial, double coeff) {
  std::sort(monomial.begin(), monomial.end());
  monomial.erase(std::unique(monomial.begin(), monomial.end()), monomial.end());
  if (!monomial.empty() && (!registry_ || monomial.back() >= registry_->size()))
    throw InvalidArgument("monomial references an unregistered variable");
  accumulate(terms_, std::move(monomial), coeff);
}

void Expr::adopt_registry(const Expr& other) {
  if (!other.registry_) return;
  if (!registry_) {
    registry_ = other.registry_;
  } else if (registry_ != other.registry_) {
    throw InvalidArgument("expressions belong to different variable registries");
  }
}

// Identical (name, body) pairs are the same constraint reached twice, e.g. via
// e * e; anything else reusing a name is a clash.
void Expr::merge_labels(const Expr& other) {
  for (const auto& [name, body] : other.labels_) {
    auto [it, inserted] = labels_.try_emplace(name, body);
    if (!inserted && it->second != body)
      throw InvalidArgument("duplicate constraint label '" + name + "'");
  }
}

Expr& Expr::operator+=(const Expr& other) {
  adopt_registry(other);
  merge_labels(other);
  for (const auto& [mono, coeff] : other.terms_) accumulate(terms_, mono, coeff);
  return *this;
}

Expr& Expr::operator-=(const Expr& other) {
  adopt_registry(other);
  merge_labels(other);
  for (const auto& [mono, coeff] : other.terms_) accumulate(terms_, mono, -coeff);
  return *this;
}

Expr& Expr::operator*=(const Expr& other) {
  adopt_registry(other);
  merge_labels(other);
  TermMap product;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) accumulate(product, merge_monomials(ma, mb), ca * cb);
  terms_ = std::move(product);
  return *this;
}

Expr& Expr::operator*=(double factor) {
  if (factor == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= factor;
  return *this;
}

Expr binary(const RegistryPtr& registry, std::string_view name) {
  if (!registry) throw InvalidArgument("binary() needs a registry");
  return Expr::variable(registry, registry->intern(name).index);
}

Expr square(const Expr& e) { return e * e; }

Expr label(Expr e, std::string name) {
  if (name.empty()) throw InvalidArgument("label must be nonempty");
  if (e.labels_.contains(name)) throw InvalidArgument("duplicate constraint label '" + name + "'");
  e.labels_.emplace(std::move(name), e.terms_);
  return e;
}

std::string to_string(const Expr& e) {
  if (e.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : e.terms()) {
    double shown = coeff;
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      shown = coeff < 0 ? -coeff : coeff;
    }
    first = false;
    const bool unit = (shown == 1.0 || shown == -1.0) && !mono.empty();
    if (!unit) {
      os << shown;
    } else if (shown < 0) {
      os << '-';
    }
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (!unit || k > 0) os << '*';
      if (e.registry())
        os << e.registry()->name(mono[k]);
      else
        os << 'v' << mono[k];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

}  // namespace qsched
