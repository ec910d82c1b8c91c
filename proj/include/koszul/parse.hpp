#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/polynomial.hpp"

namespace koszul {

namespace detail {

/// Recursive-descent reader for
///   poly     := sign? term (('+'|'-') term)*
///   term     := coeff ('*' powerprod)? | powerprod
///   powerprod:= var ('^' nat)? ('*' var ('^' nat)?)*
///   coeff    := int ('/' nat)?        (fractions over qq only)
template <CoefficientField F>
class PolyReader {
 public:
  PolyReader(std::string_view text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

  Polynomial<F> read() {
    std::vector<Term<F>> terms;
    skip_space();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    read_term(terms, negate);
    for (;;) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      read_term(terms, c == '-');
    }
    return Polynomial<F>(ring_, std::move(terms));
  }

 private:
  using value_type = typename F::value_type;

  void read_term(std::vector<Term<F>>& terms, bool negate) {
    skip_space();
    const F& k = ring_->field();
    value_type coeff = k.one();
    Monomial mono(ring_->variable_count());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_coeff();
      skip_space();
      if (peek() == '*') {
        ++pos_;
        mono = read_powerprod();
      }
    } else if (is_ident_start(peek())) {
      mono = read_powerprod();
    } else {
      fail(at_end() ? "unexpected end of input, expected a term" : "expected a term");
    }
    if (negate) coeff = k.neg(coeff);
    terms.push_back({std::move(mono), std::move(coeff)});
  }

  value_type read_coeff() {
    const F& k = ring_->field();
    mpz_class num(read_digits());
    skip_space();
    if (peek() == '/') {
      if (!k.allows_fractions()) fail("fractional coefficient is only valid over qq");
      ++pos_;
      skip_space();
      std::size_t den_pos = pos_;
      mpz_class den(read_digits());
      if (den == 0) throw ParseError("division by zero coefficient", den_pos);
      return k.from_fraction(num, den);
    }
    return k.from_integer(num);
  }

  Monomial read_powerprod() {
    std::vector<Monomial::exponent_type> exps(ring_->variable_count(), 0);
    for (;;) {
      skip_space();
      std::size_t var_pos = pos_;
      if (!is_ident_start(peek())) fail("expected a variable");
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += text_[pos_++];
      const auto& vars = ring_->variables();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw ParseError("unknown variable '" + name + "'", var_pos);
      std::uint64_t e = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        std::size_t exp_pos = pos_;
        std::string digits = read_digits();
        if (digits.size() > 9) throw ParseError("exponent too large", exp_pos);
        e = std::stoull(digits);
      }
      exps[static_cast<std::size_t>(it - vars.begin())] += static_cast<Monomial::exponent_type>(e);
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return Monomial(std::move(exps));
  }

  std::string read_digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number");
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    return out;
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField F>
Polynomial<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyReader<F>(text, ring).read();
}

/// Comma-separated polynomial list; empty or all-blank input gives no polynomials.
template <CoefficientField F>
std::vector<Polynomial<F>> parse_poly_list(std::string_view text, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> out;
  if (text.find_first_not_of(" \t\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      out.push_back(parse_poly(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError("in generator " + std::to_string(out.size() + 1) + ": " +
                           std::string(e.what()).substr(0, std::string(e.what()).rfind(" at ")),
                       start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace koszul
