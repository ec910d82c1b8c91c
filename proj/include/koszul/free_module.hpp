#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/polynomial.hpp"

namespace koszul {

/// Element of the free module R^rank, stored componentwise.
template <CoefficientField F>
class FreeElement {
 public:
  using value_type = typename F::value_type;

  FreeElement(RingPtr<F> ring, std::size_t rank)
      : ring_(std::move(ring)), components_(rank, Polynomial<F>(ring_)) {}

  FreeElement(RingPtr<F> ring, std::vector<Polynomial<F>> components)
      : ring_(std::move(ring)), components_(std::move(components)) {
    for (const auto& c : components_)
      if (!c.ring()->compatible(*ring_)) throw StructuralError("component from a different ring");
  }

  static FreeElement unit(RingPtr<F> ring, std::size_t rank, std::size_t index) {
    if (index >= rank) throw StructuralError("unit vector index out of range");
    FreeElement e(ring, rank);
    e.components_[index] = Polynomial<F>::one(ring);
    return e;
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rank() const { return components_.size(); }
  const Polynomial<F>& operator[](std::size_t i) const { return components_.at(i); }
  const Polynomial<F>& component(std::size_t i) const { return components_.at(i); }
  const std::vector<Polynomial<F>>& components() const { return components_; }

  bool is_zero() const {
    for (const auto& c : components_)
      if (!c.is_zero()) return false;
    return true;
  }

  FreeElement operator-() const {
    FreeElement r(ring_, rank());
    for (std::size_t i = 0; i < rank(); ++i) r.components_[i] = -components_[i];
    return r;
  }
  friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    a.check_shape(b);
    FreeElement r(a.ring_, a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.components_[i] = a.components_[i] + b.components_[i];
    return r;
  }
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b) {
    a.check_shape(b);
    FreeElement r(a.ring_, a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.components_[i] = a.components_[i] - b.components_[i];
    return r;
  }
  friend FreeElement operator*(const Polynomial<F>& s, const FreeElement& a) {
    FreeElement r(a.ring_, a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.components_[i] = s * a.components_[i];
    return r;
  }
  FreeElement scaled(const value_type& c) const {
    FreeElement r(ring_, rank());
    for (std::size_t i = 0; i < rank(); ++i) r.components_[i] = components_[i].scaled(c);
    return r;
  }

  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.rank() == b.rank() && a.components_ == b.components_;
  }

  void check_shape(const FreeElement& other) const {
    if (rank() != other.rank())
      throw StructuralError("free elements of different rank (" + std::to_string(rank()) + " vs " +
                            std::to_string(other.rank()) + ")");
    if (!ring_->compatible(*other.ring_)) throw StructuralError("free elements over different rings");
  }

  /// Linear combination of named basis symbols, e.g. `x*(e2^e3) + (y + z)*(e1^e2)`.
  std::string to_string(const std::vector<std::string>& basis_names) const {
    std::string out;
    for (std::size_t i = 0; i < rank(); ++i) {
      const auto& c = components_[i];
      if (c.is_zero()) continue;
      std::string symbol = "(" + (i < basis_names.size() ? basis_names[i] : "e" + std::to_string(i + 1)) + ")";
      std::string coeff = c.to_string();
      bool negative = false;
      if (c.term_count() == 1 && coeff.front() == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
      std::string piece;
      if (coeff == "1")
        piece = symbol;
      else if (c.term_count() == 1)
        piece = coeff + "*" + symbol;
      else
        piece = "(" + coeff + ")*" + symbol;
      if (out.empty())
        out = negative ? "-" + piece : piece;
      else
        out += (negative ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> components_;
};

/// Term-over-position order on module terms m*e_i: compare monomials first;
/// on ties the smaller component index is larger. A nonzero
/// `elimination_block` makes every term in components [0, block) larger than
/// every term outside it (used for syzygies).
struct ModuleOrder {
  MonomialOrder base = MonomialOrder::grevlex;
  std::size_t elimination_block = 0;

  std::strong_ordering compare(const Monomial& a, std::size_t pos_a, const Monomial& b,
                               std::size_t pos_b) const {
    if (elimination_block > 0) {
      bool in_a = pos_a < elimination_block, in_b = pos_b < elimination_block;
      if (in_a != in_b) return in_a ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (auto c = monomial_cmp(a, b, base); c != 0) return c;
    return pos_b <=> pos_a;
  }

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;
};

}  // namespace koszul
