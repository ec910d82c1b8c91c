#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/field.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

inline constexpr std::uint64_t kDefaultMaxSteps = 10'000'000;

/// k[x_1..x_n] with a fixed monomial order. Held through `RingPtr`; every
/// polynomial carries the handle of the ring it lives in.
template <CoefficientField F>
class PolynomialRing {
 public:
  PolynomialRing(F field, std::vector<std::string> variables,
                 MonomialOrder order = MonomialOrder::grevlex,
                 std::uint64_t max_steps = kDefaultMaxSteps)
      : field_(std::move(field)),
        variables_(std::move(variables)),
        order_(order),
        max_steps_(max_steps) {
    std::unordered_set<std::string> seen;
    for (const auto& v : variables_) {
      if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
        throw StructuralError("invalid variable name '" + v + "'");
      for (char c : v)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
          throw StructuralError("invalid variable name '" + v + "'");
      if (!seen.insert(v).second) throw StructuralError("duplicate variable '" + v + "'");
    }
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  MonomialOrder order() const { return order_; }
  std::uint64_t max_steps() const { return max_steps_; }

  /// Same field, variables and order.
  bool compatible(const PolynomialRing& other) const {
    return this == &other || (field_ == other.field_ && variables_ == other.variables_ &&
                              order_ == other.order_);
  }

 private:
  F field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
  std::uint64_t max_steps_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolynomialRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> variables,
                     MonomialOrder order = MonomialOrder::grevlex,
                     std::uint64_t max_steps = kDefaultMaxSteps) {
  return std::make_shared<const PolynomialRing<F>>(std::move(field), std::move(variables), order,
                                                   max_steps);
}

template <CoefficientField F>
struct Term {
  Monomial monomial;
  typename F::value_type coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Immutable polynomial: terms strictly descending in the ring order, no zero
/// coefficients.
template <CoefficientField F>
class Polynomial {
 public:
  using value_type = typename F::value_type;

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  Polynomial(RingPtr<F> ring, std::vector<Term<F>> terms) : ring_(std::move(ring)) {
    const auto n = ring_->variable_count();
    for (const auto& t : terms)
      if (t.monomial.size() != n)
        throw StructuralError("term has " + std::to_string(t.monomial.size()) +
                              " exponents, ring has " + std::to_string(n) + " variables");
    const auto order = ring_->order();
    std::stable_sort(terms.begin(), terms.end(), [order](const Term<F>& a, const Term<F>& b) {
      return monomial_cmp(a.monomial, b.monomial, order) > 0;
    });
    const F& k = ring_->field();
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().monomial == t.monomial) {
        terms_.back().coefficient = k.add(terms_.back().coefficient, t.coefficient);
        if (k.is_zero(terms_.back().coefficient)) terms_.pop_back();
      } else if (!k.is_zero(t.coefficient)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  static Polynomial constant(RingPtr<F> ring, const value_type& c) {
    Monomial one(ring->variable_count());
    return Polynomial(ring, {Term<F>{std::move(one), c}});
  }
  static Polynomial one(RingPtr<F> ring) {
    const auto c = ring->field().one();
    return constant(std::move(ring), c);
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->variable_count()) throw StructuralError("variable index out of range");
    auto m = Monomial::variable(ring->variable_count(), index);
    const auto c = ring->field().one();
    return Polynomial(std::move(ring), {Term<F>{std::move(m), c}});
  }
  static Polynomial monomial(RingPtr<F> ring, Monomial m, const value_type& c) {
    return Polynomial(std::move(ring), {Term<F>{std::move(m), c}});
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term<F>>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term<F>& leading_term() const {
    if (terms_.empty()) throw StructuralError("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const value_type& leading_coefficient() const { return leading_term().coefficient; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coefficient = field().neg(t.coefficient);
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return f.combine(g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f.combine(g, true); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
    const F& k = f.field();
    std::vector<Term<F>> products;
    products.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_)
        products.push_back({a.monomial * b.monomial, k.mul(a.coefficient, b.coefficient)});
    return Polynomial(f.ring_, std::move(products));
  }

  Polynomial scaled(const value_type& c) const {
    const F& k = field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, k.mul(t.coefficient, c)});
    return r;
  }

  /// c * m * this; order is preserved since the order is multiplicative.
  Polynomial times_term(const Monomial& m, const value_type& c) const {
    const F& k = field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, k.mul(t.coefficient, c)});
    return r;
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = one(ring_);
    Polynomial base = *this;
    while (exponent) {
      if (exponent & 1) result = result * base;
      exponent >>= 1;
      if (exponent) base = base * base;
    }
    return result;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coefficient()));
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.ring_->compatible(*g.ring_) && f.terms_ == g.terms_;
  }

  /// Text in the polynomial grammar: `x^2*y - 3*z + 1/2`, or `0`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    const F& k = field();
    const auto& names = ring_->variables();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = k.is_negative(t.coefficient);
      auto magnitude = negative ? k.neg(t.coefficient) : t.coefficient;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (t.monomial.is_one()) {
        out += k.to_string(magnitude);
      } else if (k.is_one(magnitude)) {
        out += t.monomial.to_string(names);
      } else {
        out += k.to_string(magnitude) + '*' + t.monomial.to_string(names);
      }
    }
    return out;
  }

  void check_ring(const Polynomial& other) const {
    if (!ring_->compatible(*other.ring_))
      throw StructuralError("polynomials belong to different rings");
  }

 private:
  Polynomial combine(const Polynomial& g, bool subtract) const {
    check_ring(g);
    const F& k = field();
    const auto order = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      auto rhs = g.terms_[j];
      if (subtract) rhs.coefficient = k.neg(rhs.coefficient);
      if (i == terms_.size()) {
        r.terms_.push_back(std::move(rhs));
        ++j;
        continue;
      }
      auto c = monomial_cmp(terms_[i].monomial, rhs.monomial, order);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(std::move(rhs));
        ++j;
      } else {
        auto sum = k.add(terms_[i].coefficient, rhs.coefficient);
        if (!k.is_zero(sum)) r.terms_.push_back({terms_[i].monomial, std::move(sum)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term<F>> terms_;
};

}  // namespace koszul
