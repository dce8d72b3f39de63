#include <algorithm>
#include <cmath>
#include <map>

#include "qsched/errors.hpp"
#include "qsched/poly.hpp"

namespace qsched {
namespace {

bool contains_pair(const Monomial& mono, const Pair& p) {
  return std::binary_search(mono.begin(), mono.end(), p.first) &&
         std::binary_search(mono.begin(), mono.end(), p.second);
}

std::string aux_name(const Registry& reg, const Pair& p) {
  return "aux[" + reg.name(p.first) + "*" + reg.name(p.second) + "]";
}

}  // namespace

Expr quadratize(const Expr& e, std::optional<double> strength) {
  if (strength && !(*strength > 0.0)) throw InvalidArgument("quadratization strength must be positive");
  if (e.degree() <= 2) return e;

  Expr out = e;
  const RegistryPtr& reg = out.registry();
  std::map<Pair, VarIndex> aux_of;

  // Each round lowers every high-degree monomial by one; a fresh auxiliary
  // always sorts last, so later rounds pick pairs among the remaining factors.
  while (out.degree() > 2) {
    std::map<Pair, std::vector<Monomial>> by_pair;
    for (const auto& [mono, coeff] : out.terms())
      if (mono.size() >= 3) by_pair[{mono[0], mono[1]}].push_back(mono);

    Expr next = out;
    for (const auto& [pair, monos] : by_pair) {
      double m = 0.0;
      if (strength) {
        m = *strength;
      } else {
        m = 1.0;
        for (const auto& [mono, coeff] : out.terms())
          if (mono.size() >= 2 && contains_pair(mono, pair)) m += std::abs(coeff);
      }

      auto it = aux_of.find(pair);
      if (it == aux_of.end()) {
        const VarRef z = reg->intern(aux_name(*reg, pair));
        it = aux_of.emplace(pair, z.index).first;
      }
      const VarIndex z = it->second;

      for (const Monomial& mono : monos) {
        const double coeff = out.terms().at(mono);
        next.add_term(mono, -coeff);
        Monomial reduced{z};
        reduced.insert(reduced.end(), mono.begin() + 2, mono.end());
        next.add_term(std::move(reduced), coeff);
      }
      const auto [u, v] = pair;
      next.add_term({u, v}, m);
      next.add_term({u, z}, -2.0 * m);
      next.add_term({v, z}, -2.0 * m);
      next.add_term({z}, 3.0 * m);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace qsched
