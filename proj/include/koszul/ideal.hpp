#pragma once

#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/groebner.hpp"
#include "koszul/multilinear.hpp"
#include "koszul/presented_module.hpp"

namespace koszul {

/// Ideal given by nonzero generators g_1..g_m.
template <CoefficientField F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
      if (!g.ring()->compatible(*ring_)) throw StructuralError("ideal generator from another ring");
      if (g.is_zero()) throw StructuralError("ideal generators must be nonzero");
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i) out += ", ";
      out += generators_[i].to_string();
    }
    return out + ")";
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
};

/// I as the module R^m / syz(g_1..g_m), with e_i mapping to g_i.
template <CoefficientField F>
PresentedModule<F> ideal_as_module(const Ideal<F>& ideal) {
  return PresentedModule<F>(ideal.ring(), ideal.size(),
                            syzygies(ideal.ring(), ideal.generators()));
}

/// (g_1^q, ..., g_m^q). Only q equal to the characteristic is supported:
/// there Frobenius is additive, so these powers generate the ideal of all
/// q-th powers of elements of I.
template <CoefficientField F>
Ideal<F> bracket_power(const Ideal<F>& ideal, std::uint64_t q) {
  const auto p = ideal.ring()->field().characteristic();
  if (p == 0 || q != p)
    throw UnsupportedError("bracket power I^[" + std::to_string(q) +
                           "] needs q equal to the characteristic (here " + std::to_string(p) +
                           ")");
  std::vector<Polynomial<F>> powers;
  for (const auto& g : ideal.generators()) powers.push_back(g.pow(static_cast<unsigned>(q)));
  return Ideal<F>(ideal.ring(), std::move(powers));
}

/// The map Lambda^2(I) -> I^2 / I^[2], e_i ^ e_j |-> g_i g_j. The target is
/// presented on the products {g_i g_j : i <= j} (symmetric-pair order) with
/// relations: syzygies of the products, then the unit vectors of g_i g_i.
template <CoefficientField F>
class CertificateMap {
 public:
  CertificateMap(Ideal<F> ideal, ModuleMap<F> map, std::vector<Polynomial<F>> products,
                 Ideal<F> bracket, GroebnerBasis<F> bracket_basis)
      : ideal_(std::move(ideal)),
        map_(std::move(map)),
        products_(std::move(products)),
        bracket_(std::move(bracket)),
        bracket_basis_(std::move(bracket_basis)) {}

  const ModuleMap<F>& map() const { return map_; }
  const Ideal<F>& bracket() const { return bracket_; }
  const GroebnerBasis<F>& bracket_basis() const { return bracket_basis_; }
  const std::vector<Polynomial<F>>& products() const { return products_; }

  /// f(w) as the normal form of its polynomial in I^2 modulo I^[2].
  Polynomial<F> value(const ModuleElement<F>& w) const {
    const auto image = map_(w).representative();
    Polynomial<F> sum(ideal_.ring());
    for (std::size_t k = 0; k < products_.size(); ++k) sum = sum + image[k] * products_[k];
    return normal_form(sum, bracket_basis_);
  }

  bool nonzero_on(const ModuleElement<F>& w) const { return !element_is_zero(map_(w)); }

 private:
  Ideal<F> ideal_;
  ModuleMap<F> map_;
  std::vector<Polynomial<F>> products_;
  Ideal<F> bracket_;
  GroebnerBasis<F> bracket_basis_;
};

/// Builds f on the given presentation of Lambda^2(I) (as produced by
/// ext_power_presentation(ideal_as_module(I), 2)). Characteristic 2 only.
template <CoefficientField F>
CertificateMap<F> certificate_map(const Ideal<F>& ideal, const PresentedModule<F>& exterior_square) {
  const auto& ring = ideal.ring();
  if (ring->field().characteristic() != 2)
    throw UnsupportedError("the certificate map needs characteristic 2; with 2 invertible "
                           "I^2 = I^[2] and the map is zero");
  const std::size_t m = ideal.size();
  const auto& g = ideal.generators();
  const auto pairs = sym_indices(m, 2);
  const TupleIndex pair_index(pairs);
  std::vector<Polynomial<F>> products;
  std::vector<std::string> names;
  for (const auto& t : pairs) {
    products.push_back(g[t[0]] * g[t[1]]);
    names.push_back(products.back().to_string());
  }
  auto relations = syzygies(ring, products);
  for (std::size_t i = 0; i < m; ++i)
    relations.push_back(FreeElement<F>::unit(ring, pairs.size(), pair_index.at({i, i})));
  PresentedModule<F> target(ring, pairs.size(), std::move(relations), std::move(names));

  const auto wedges = wedge_indices(m, 2);
  if (exterior_square.cover_rank() != wedges.size())
    throw StructuralError("certificate_map: source is not the exterior square of I");
  std::vector<FreeElement<F>> lift;
  for (const auto& w : wedges) lift.push_back(FreeElement<F>::unit(ring, pairs.size(), pair_index.at(w)));
  ModuleMap<F> f(exterior_square, target, std::move(lift));

  auto bracket = bracket_power(ideal, 2);
  auto basis = buchberger(ring, bracket.generators());
  return CertificateMap<F>(ideal, std::move(f), std::move(products), std::move(bracket),
                           std::move(basis));
}

template <CoefficientField F>
CertificateMap<F> certificate_map(const Ideal<F>& ideal) {
  return certificate_map(ideal, ext_power_presentation(ideal_as_module(ideal), 2));
}

}  // namespace koszul
