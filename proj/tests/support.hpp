#pragma once

// Test-only helpers: rings, random generators and independent oracles that
// do not go through the library's Groebner machinery.

#include <random>
#include <string>
#include <vector>

#include "koszul/koszul.hpp"

namespace koszul::test {

inline const std::vector<std::string> kXYZ = {"x", "y", "z"};

inline RingPtr<PrimeField> gf(std::uint64_t p, std::vector<std::string> vars = kXYZ,
                              MonomialOrder order = MonomialOrder::grevlex) {
  return make_ring(PrimeField(p), std::move(vars), order);
}

inline RingPtr<Rationals> qq(std::vector<std::string> vars = kXYZ,
                             MonomialOrder order = MonomialOrder::grevlex) {
  return make_ring(Rationals{}, std::move(vars), order);
}

template <CoefficientField F>
Polynomial<F> P(const RingPtr<F>& ring, const std::string& text) {
  return parse_poly(text, ring);
}

template <CoefficientField F>
FreeElement<F> V(const RingPtr<F>& ring, const std::vector<std::string>& comps) {
  std::vector<Polynomial<F>> ps;
  for (const auto& c : comps) ps.push_back(parse_poly(c, ring));
  return FreeElement<F>(ring, std::move(ps));
}

template <CoefficientField F>
typename F::value_type random_coefficient(const F& k, std::mt19937& rng, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  int v = 0;
  while (v == 0) v = d(rng);
  return k.from_integer(mpz_class(v));
}

inline Monomial random_monomial(std::size_t nvars, unsigned max_degree, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::vector<Monomial::exponent_type> e(nvars, 0);
  unsigned d = deg(rng);
  for (unsigned i = 0; i < d; ++i) ++e[var(rng)];
  return Monomial(std::move(e));
}

template <CoefficientField F>
Polynomial<F> random_poly(const RingPtr<F>& ring, std::mt19937& rng, unsigned max_degree = 2,
                          std::size_t max_terms = 3) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::vector<Term<F>> terms;
  std::size_t n = nterms(rng);
  for (std::size_t i = 0; i < n; ++i)
    terms.push_back({random_monomial(ring->variable_count(), max_degree, rng),
                     random_coefficient(ring->field(), rng)});
  return Polynomial<F>(ring, std::move(terms));
}

template <CoefficientField F>
FreeElement<F> random_vector(const RingPtr<F>& ring, std::size_t rank, std::mt19937& rng,
                             unsigned max_degree = 2, std::size_t max_terms = 2) {
  std::vector<Polynomial<F>> c;
  std::bernoulli_distribution keep(0.6);
  for (std::size_t i = 0; i < rank; ++i)
    c.push_back(keep(rng) ? random_poly(ring, rng, max_degree, max_terms) : Polynomial<F>(ring));
  return FreeElement<F>(ring, std::move(c));
}

/// Cover rank 1..3, up to three relations with entries of degree <= 2.
template <CoefficientField F>
PresentedModule<F> random_module(const RingPtr<F>& ring, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> rank_d(1, 3), rel_d(0, 3);
  std::size_t rank = rank_d(rng), nrel = rel_d(rng);
  std::vector<FreeElement<F>> rels;
  for (std::size_t i = 0; i < nrel; ++i) rels.push_back(random_vector(ring, rank, rng, 2, 2));
  return PresentedModule<F>(ring, rank, std::move(rels));
}

/// Textbook grevlex: a > b iff deg a > deg b, or equal degree and the last
/// nonzero entry of a - b is negative.
inline int reference_grevlex(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int v : a) da += v;
  for (int v : b) db += v;
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

/// Textbook lex: a > b iff the first nonzero entry of a - b is positive.
inline int reference_lex(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff > 0 ? 1 : -1;
  }
  return 0;
}

/// Multivariate division algorithm on Polynomial values only; remainder of
/// f by the list g (any order, not necessarily a basis).
template <CoefficientField F>
Polynomial<F> oracle_remainder(Polynomial<F> f, const std::vector<Polynomial<F>>& g) {
  const F& k = f.field();
  Polynomial<F> rem(f.ring());
  while (!f.is_zero()) {
    const auto& lt = f.leading_term();
    bool divided = false;
    for (const auto& gi : g) {
      if (gi.is_zero() || !gi.leading_monomial().divides(lt.monomial)) continue;
      auto c = k.mul(lt.coefficient, k.inv(gi.leading_coefficient()));
      f = f - gi.times_term(lt.monomial.quotient(gi.leading_monomial()), c);
      divided = true;
      break;
    }
    if (!divided) {
      rem = rem + Polynomial<F>::monomial(f.ring(), lt.monomial, lt.coefficient);
      f = f - Polynomial<F>::monomial(f.ring(), lt.monomial, lt.coefficient);
    }
  }
  return rem;
}

template <CoefficientField F>
Polynomial<F> oracle_spoly(const Polynomial<F>& f, const Polynomial<F>& g) {
  const F& k = f.field();
  auto l = f.leading_monomial().lcm(g.leading_monomial());
  return f.times_term(l.quotient(f.leading_monomial()), k.inv(f.leading_coefficient())) -
         g.times_term(l.quotient(g.leading_monomial()), k.inv(g.leading_coefficient()));
}

/// Monomial-ideal membership by divisibility.
inline bool divisible_by_some(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

/// All monomials in `nvars` variables of total degree <= max_degree.
inline std::vector<Monomial> all_monomials(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  std::vector<Monomial::exponent_type> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == nvars) {
      out.emplace_back(e);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

/// sum_i c_i * v_i.
template <CoefficientField F>
FreeElement<F> combination(const RingPtr<F>& ring, std::size_t rank,
                           const std::vector<Polynomial<F>>& coeffs,
                           const std::vector<FreeElement<F>>& vs) {
  FreeElement<F> out(ring, rank);
  for (std::size_t i = 0; i < vs.size(); ++i) out = out + coeffs[i] * vs[i];
  return out;
}

}  // namespace koszul::test
