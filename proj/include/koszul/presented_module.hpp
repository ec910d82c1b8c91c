#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/free_module.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

template <CoefficientField F>
class ModuleElement;

/// coker(F_1 -> F_0): a cover of `cover_rank` generators modulo the
/// submodule spanned by the relation columns. The reduced Groebner basis of
/// the relations is computed once, at construction. Copies share state;
/// two handles are the same module iff they share state.
template <CoefficientField F>
class PresentedModule {
 public:
  PresentedModule(RingPtr<F> ring, std::size_t cover_rank, std::vector<FreeElement<F>> relations,
                  std::vector<std::string> generator_names = {}) {
    for (const auto& r : relations)
      if (r.rank() != cover_rank)
        throw StructuralError("relation of rank " + std::to_string(r.rank()) +
                              " in a module with cover rank " + std::to_string(cover_rank));
    if (generator_names.empty())
      for (std::size_t i = 0; i < cover_rank; ++i) generator_names.push_back("e" + std::to_string(i + 1));
    if (generator_names.size() != cover_rank)
      throw StructuralError("generator name count does not match cover rank");
    auto gb = buchberger(ring, cover_rank, relations);
    data_ = std::make_shared<const Data>(Data{std::move(ring), cover_rank, std::move(relations),
                                              std::move(gb), std::move(generator_names)});
  }

  static PresentedModule free(RingPtr<F> ring, std::size_t rank,
                              std::vector<std::string> generator_names = {}) {
    return PresentedModule(std::move(ring), rank, {}, std::move(generator_names));
  }
  static PresentedModule zero(RingPtr<F> ring) { return PresentedModule(std::move(ring), 0, {}); }

  const RingPtr<F>& ring() const { return data_->ring; }
  std::size_t cover_rank() const { return data_->cover_rank; }
  const std::vector<FreeElement<F>>& relations() const { return data_->relations; }
  const GroebnerBasis<F>& relation_basis() const { return data_->basis; }
  const std::vector<std::string>& generator_names() const { return data_->names; }

  bool same_as(const PresentedModule& other) const { return data_ == other.data_; }

  /// Normal form of a cover vector modulo the relations.
  FreeElement<F> reduce(const FreeElement<F>& v) const {
    check_cover(v);
    return normal_form(v, data_->basis);
  }

  bool represents_zero(const FreeElement<F>& v) const { return reduce(v).is_zero(); }

  ModuleElement<F> element(FreeElement<F> representative) const;
  ModuleElement<F> generator(std::size_t i) const;
  ModuleElement<F> zero_element() const;

  void check_cover(const FreeElement<F>& v) const {
    if (v.rank() != cover_rank())
      throw StructuralError("vector of rank " + std::to_string(v.rank()) +
                            " does not live in a cover of rank " + std::to_string(cover_rank()));
  }

 private:
  struct Data {
    RingPtr<F> ring;
    std::size_t cover_rank;
    std::vector<FreeElement<F>> relations;
    GroebnerBasis<F> basis;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

/// An element of a presented module, carried by a cover representative.
template <CoefficientField F>
class ModuleElement {
 public:
  ModuleElement(PresentedModule<F> parent, FreeElement<F> representative)
      : parent_(std::move(parent)), rep_(std::move(representative)) {
    parent_.check_cover(rep_);
  }

  const PresentedModule<F>& parent() const { return parent_; }
  const FreeElement<F>& representative() const { return rep_; }

  /// Canonical representative (normal form modulo the relations).
  FreeElement<F> reduced() const { return parent_.reduce(rep_); }

  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    a.check_parent(b);
    return ModuleElement(a.parent_, a.rep_ + b.rep_);
  }
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
    a.check_parent(b);
    return ModuleElement(a.parent_, a.rep_ - b.rep_);
  }
  friend ModuleElement operator*(const Polynomial<F>& s, const ModuleElement& a) {
    return ModuleElement(a.parent_, s * a.rep_);
  }

  void check_parent(const ModuleElement& other) const {
    if (!parent_.same_as(other.parent_))
      throw StructuralError("module elements have different parent modules");
  }

  std::string to_string() const { return rep_.to_string(parent_.generator_names()); }

 private:
  PresentedModule<F> parent_;
  FreeElement<F> rep_;
};

template <CoefficientField F>
ModuleElement<F> PresentedModule<F>::element(FreeElement<F> representative) const {
  return ModuleElement<F>(*this, std::move(representative));
}

template <CoefficientField F>
ModuleElement<F> PresentedModule<F>::generator(std::size_t i) const {
  return ModuleElement<F>(*this, FreeElement<F>::unit(ring(), cover_rank(), i));
}

template <CoefficientField F>
ModuleElement<F> PresentedModule<F>::zero_element() const {
  return ModuleElement<F>(*this, FreeElement<F>(ring(), cover_rank()));
}

template <CoefficientField F>
bool element_is_zero(const ModuleElement<F>& m) {
  return m.parent().represents_zero(m.representative());
}

template <CoefficientField F>
bool element_equal(const ModuleElement<F>& a, const ModuleElement<F>& b) {
  a.check_parent(b);
  return element_is_zero(a - b);
}

template <CoefficientField F>
bool is_zero_module(const PresentedModule<F>& m) {
  for (std::size_t i = 0; i < m.cover_rank(); ++i)
    if (!element_is_zero(m.generator(i))) return false;
  return true;
}

/// Map of presented modules given by the images of the source generators in
/// the target cover. Construction rejects lifts that do not send every source
/// relation into the target relations.
template <CoefficientField F>
class ModuleMap {
 public:
  ModuleMap(PresentedModule<F> source, PresentedModule<F> target, std::vector<FreeElement<F>> lift)
      : source_(std::move(source)), target_(std::move(target)), lift_(std::move(lift)) {
    if (lift_.size() != source_.cover_rank())
      throw StructuralError("map lift has " + std::to_string(lift_.size()) +
                            " columns, source cover rank is " +
                            std::to_string(source_.cover_rank()));
    for (const auto& col : lift_) target_.check_cover(col);
    const auto& rels = source_.relations();
    for (std::size_t r = 0; r < rels.size(); ++r)
      if (!target_.represents_zero(apply_to_cover(rels[r])))
        throw ContractError("ill-defined map: image of source relation " + std::to_string(r + 1) +
                            " is nonzero in the target");
  }

  static ModuleMap identity(const PresentedModule<F>& m) {
    std::vector<FreeElement<F>> lift;
    for (std::size_t i = 0; i < m.cover_rank(); ++i)
      lift.push_back(FreeElement<F>::unit(m.ring(), m.cover_rank(), i));
    return ModuleMap(m, m, std::move(lift));
  }
  static ModuleMap zero(const PresentedModule<F>& source, const PresentedModule<F>& target) {
    std::vector<FreeElement<F>> lift(source.cover_rank(),
                                     FreeElement<F>(source.ring(), target.cover_rank()));
    return ModuleMap(source, target, std::move(lift));
  }

  const PresentedModule<F>& source() const { return source_; }
  const PresentedModule<F>& target() const { return target_; }
  const std::vector<FreeElement<F>>& lift() const { return lift_; }

  /// Image of a source cover vector, as a target cover vector.
  FreeElement<F> apply_to_cover(const FreeElement<F>& v) const {
    source_.check_cover(v);
    FreeElement<F> out(source_.ring(), target_.cover_rank());
    for (std::size_t i = 0; i < v.rank(); ++i)
      if (!v[i].is_zero()) out = out + v[i] * lift_[i];
    return out;
  }

  ModuleElement<F> operator()(const ModuleElement<F>& m) const {
    if (!m.parent().same_as(source_))
      throw StructuralError("element is not in the source of the map");
    return target_.element(apply_to_cover(m.representative()));
  }

  bool is_zero_map() const {
    for (const auto& col : lift_)
      if (!target_.represents_zero(col)) return false;
    return true;
  }

 private:
  PresentedModule<F> source_;
  PresentedModule<F> target_;
  std::vector<FreeElement<F>> lift_;
};

/// g after f.
template <CoefficientField F>
ModuleMap<F> compose(const ModuleMap<F>& g, const ModuleMap<F>& f) {
  if (!f.target().same_as(g.source())) throw StructuralError("compose: target(f) != source(g)");
  std::vector<FreeElement<F>> lift;
  for (const auto& col : f.lift()) lift.push_back(g.apply_to_cover(col));
  return ModuleMap<F>(f.source(), g.target(), std::move(lift));
}

/// (span(gens) + span(modulo)) / span(modulo), for vectors in one cover
/// R^ambient_rank, presented on the given generators: relations are the
/// projections onto the first |gens| coordinates of the syzygies of
/// [gens | modulo].
template <CoefficientField F>
PresentedModule<F> subquotient(const RingPtr<F>& ring, std::size_t ambient_rank,
                               const std::vector<FreeElement<F>>& gens,
                               const std::vector<FreeElement<F>>& modulo,
                               std::vector<std::string> names = {}) {
  const std::size_t q = gens.size();
  std::vector<FreeElement<F>> columns = gens;
  columns.insert(columns.end(), modulo.begin(), modulo.end());
  std::vector<FreeElement<F>> relations;
  if (q > 0) {
    for (const auto& s : syzygies(ring, ambient_rank, columns)) {
      std::vector<Polynomial<F>> head(s.components().begin(), s.components().begin() + q);
      FreeElement<F> r(ring, std::move(head));
      if (!r.is_zero()) relations.push_back(std::move(r));
    }
  }
  return PresentedModule<F>(ring, q, std::move(relations), std::move(names));
}

namespace detail {

/// Source-cover vectors generating {m : phi(m) = 0}, reduced modulo the
/// source relations, with zeros and duplicates dropped.
template <CoefficientField F>
std::vector<FreeElement<F>> kernel_generators(const ModuleMap<F>& phi) {
  const auto& ring = phi.source().ring();
  const std::size_t s = phi.source().cover_rank();
  std::vector<FreeElement<F>> columns = phi.lift();
  const auto& target_rels = phi.target().relations();
  columns.insert(columns.end(), target_rels.begin(), target_rels.end());
  std::vector<FreeElement<F>> out;
  if (s == 0) return out;
  for (const auto& syz : syzygies(ring, phi.target().cover_rank(), columns)) {
    std::vector<Polynomial<F>> head(syz.components().begin(), syz.components().begin() + s);
    auto k = phi.source().reduce(FreeElement<F>(ring, std::move(head)));
    if (k.is_zero()) continue;
    if (std::find(out.begin(), out.end(), k) != out.end()) continue;
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace detail

template <CoefficientField F>
struct Kernel {
  PresentedModule<F> module;
  ModuleMap<F> inclusion;
};

/// Kernel of phi as a presented module K together with K -> source(phi).
template <CoefficientField F>
Kernel<F> kernel_of_map(const ModuleMap<F>& phi) {
  const auto& src = phi.source();
  auto gens = detail::kernel_generators(phi);
  auto k = subquotient(src.ring(), src.cover_rank(), gens, src.relations());
  return Kernel<F>{k, ModuleMap<F>(k, src, gens)};
}

/// ker(g) / im(f) at the middle module of A -f-> B -g-> C. The presentation
/// is on the kernel generators of g (vectors in the cover of B); the
/// relations are those of B together with the images of f.
template <CoefficientField F>
class HomologyModule {
 public:
  HomologyModule(PresentedModule<F> module, PresentedModule<F> ambient,
                 std::vector<FreeElement<F>> representatives)
      : module_(std::move(module)), ambient_(std::move(ambient)), reps_(std::move(representatives)) {}

  const PresentedModule<F>& module() const { return module_; }
  const PresentedModule<F>& ambient() const { return ambient_; }
  /// Cover vectors of B representing the homology generators.
  const std::vector<FreeElement<F>>& representatives() const { return reps_; }

  bool is_zero() const { return is_zero_module(module_); }

  /// The element of B carried by a homology class.
  ModuleElement<F> lift(const ModuleElement<F>& cls) const {
    if (!cls.parent().same_as(module_)) throw StructuralError("class is not in this homology module");
    FreeElement<F> out(ambient_.ring(), ambient_.cover_rank());
    const auto& c = cls.representative();
    for (std::size_t j = 0; j < reps_.size(); ++j)
      if (!c[j].is_zero()) out = out + c[j] * reps_[j];
    return ambient_.element(std::move(out));
  }

  bool class_is_zero(const ModuleElement<F>& cls) const { return element_is_zero(cls); }

 private:
  PresentedModule<F> module_;
  PresentedModule<F> ambient_;
  std::vector<FreeElement<F>> reps_;
};

template <CoefficientField F>
HomologyModule<F> homology_at(const ModuleMap<F>& f, const ModuleMap<F>& g) {
  const auto& middle = g.source();
  if (!f.target().same_as(middle)) throw StructuralError("homology_at: target(f) != source(g)");
  for (std::size_t i = 0; i < f.lift().size(); ++i)
    if (!g.target().represents_zero(g.apply_to_cover(f.lift()[i])))
      throw ContractError("homology_at: g o f is nonzero on generator " + std::to_string(i + 1));
  auto gens = detail::kernel_generators(g);
  std::vector<FreeElement<F>> modulo = middle.relations();
  modulo.insert(modulo.end(), f.lift().begin(), f.lift().end());
  auto h = subquotient(middle.ring(), middle.cover_rank(), gens, modulo);
  return HomologyModule<F>(std::move(h), middle, std::move(gens));
}

}  // namespace koszul
