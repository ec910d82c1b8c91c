#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

/// Exact coefficient field. Values are plain `value_type`s; all arithmetic
/// goes through the field object so that runtime parameters (the prime) stay
/// out of the values themselves.
template <class F>
concept CoefficientField =
    std::equality_comparable<F> &&
    requires(const F f, const typename F::value_type& a, const typename F::value_type& b,
             const mpz_class& z) {
      { f.zero() } -> std::same_as<typename F::value_type>;
      { f.one() } -> std::same_as<typename F::value_type>;
      { f.add(a, b) } -> std::same_as<typename F::value_type>;
      { f.sub(a, b) } -> std::same_as<typename F::value_type>;
      { f.mul(a, b) } -> std::same_as<typename F::value_type>;
      { f.neg(a) } -> std::same_as<typename F::value_type>;
      { f.inv(a) } -> std::same_as<typename F::value_type>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.is_one(a) } -> std::same_as<bool>;
      { f.from_integer(z) } -> std::same_as<typename F::value_type>;
      { f.from_fraction(z, z) } -> std::same_as<typename F::value_type>;
      { f.characteristic() } -> std::same_as<std::uint64_t>;
      { f.allows_fractions() } -> std::same_as<bool>;
      { f.name() } -> std::same_as<std::string>;
      { f.to_string(a) } -> std::same_as<std::string>;
      { f.is_negative(a) } -> std::same_as<bool>;
      { a == b } -> std::convertible_to<bool>;
    };

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// GF(p) for a prime p <= 2^31. Values are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p > kMaxPrime || !is_prime(p))
      throw StructuralError("prime field modulus " + std::to_string(p) +
                            " is not a prime <= 2^31");
  }

  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  bool allows_fractions() const { return false; }
  std::string name() const { return "gf" + std::to_string(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} + b) % p_);
  }
  value_type sub(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} + p_ - b) % p_);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : static_cast<value_type>(p_ - a); }
  value_type inv(value_type a) const {
    if (a == 0) throw StructuralError("inverse of zero in " + name());
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool is_negative(value_type) const { return false; }

  value_type from_integer(const mpz_class& z) const {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return static_cast<value_type>(r.get_ui());
  }
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const {
    value_type d = from_integer(den);
    if (d == 0) throw StructuralError("denominator vanishes in " + name());
    return mul(from_integer(num), inv(d));
  }
  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// The rationals, backed by GMP; values are always in lowest terms with a
/// positive denominator.
class Rationals {
 public:
  using value_type = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  bool allows_fractions() const { return true; }
  std::string name() const { return "qq"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw StructuralError("inverse of zero in qq");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }

  value_type from_integer(const mpz_class& z) const { return mpq_class(z); }
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw StructuralError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  std::string to_string(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<Rationals>);

}  // namespace koszul
