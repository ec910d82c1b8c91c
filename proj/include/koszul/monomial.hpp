#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

/// Power product x_1^a_1 ... x_n^a_n; the length is fixed by the ring.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t variable_count) : exponents_(variable_count, 0) {}
  explicit Monomial(std::vector<exponent_type> exponents) : exponents_(std::move(exponents)) {
    for (auto e : exponents_) degree_ += e;
  }
  Monomial(std::initializer_list<exponent_type> exponents)
      : Monomial(std::vector<exponent_type>(exponents)) {}

  static Monomial variable(std::size_t variable_count, std::size_t index) {
    Monomial m(variable_count);
    m.exponents_.at(index) = 1;
    m.degree_ = 1;
    return m;
  }

  std::size_t size() const { return exponents_.size(); }
  exponent_type operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<exponent_type>& exponents() const { return exponents_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    check_same_size(other);
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] > other.exponents_[i]) return false;
    return true;
  }

  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const {
    check_same_size(divisor);
    Monomial q(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      if (divisor.exponents_[i] > exponents_[i])
        throw StructuralError("monomial quotient: divisor does not divide");
      q.exponents_[i] = exponents_[i] - divisor.exponents_[i];
    }
    q.degree_ = degree_ - divisor.degree_;
    return q;
  }

  Monomial lcm(const Monomial& other) const {
    check_same_size(other);
    Monomial l(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      l.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
      l.degree_ += l.exponents_[i];
    }
    return l;
  }

  bool coprime(const Monomial& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same_size(b);
    Monomial m(a.exponents_.size());
    for (std::size_t i = 0; i < a.exponents_.size(); ++i)
      m.exponents_[i] = a.exponents_[i] + b.exponents_[i];
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }

  /// `x^2*y` style, "1" for the unit monomial.
  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      if (exponents_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += names.at(i);
      if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  void check_same_size(const Monomial& other) const {
    if (exponents_.size() != other.exponents_.size())
      throw StructuralError("monomials over different variable counts (" +
                            std::to_string(exponents_.size()) + " vs " +
                            std::to_string(other.exponents_.size()) + ")");
  }

  std::vector<exponent_type> exponents_;
  std::uint64_t degree_ = 0;
};

enum class MonomialOrder { grevlex, lex };

inline std::string to_string(MonomialOrder order) {
  return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

/// Total multiplicative order with 1 minimal. grevlex: total degree, then the
/// monomial with the smaller exponent in the last differing variable wins.
inline std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                         MonomialOrder order) {
  if (a.size() != b.size())
    throw StructuralError("monomial_cmp: length mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  const std::size_t n = a.size();
  if (order == MonomialOrder::grevlex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t k = n; k-- > 0;)
      if (a[k] != b[k]) return b[k] <=> a[k];
    return std::strong_ordering::equal;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != b[k]) return a[k] <=> b[k];
  return std::strong_ordering::equal;
}

}  // namespace koszul
