#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/free_module.hpp"
#include "koszul/polynomial.hpp"

namespace koszul {

namespace detail {

template <CoefficientField F>
struct VecTerm {
  Monomial monomial;
  std::size_t position;
  typename F::value_type coefficient;
};

/// Sparse module vector, terms strictly descending in a ModuleOrder.
template <CoefficientField F>
using Vec = std::vector<VecTerm<F>>;

template <CoefficientField F>
std::strong_ordering compare(const VecTerm<F>& a, const VecTerm<F>& b, const ModuleOrder& order) {
  return order.compare(a.monomial, a.position, b.monomial, b.position);
}

template <CoefficientField F>
Vec<F> to_vec(const FreeElement<F>& v, const ModuleOrder& order, std::size_t offset = 0) {
  Vec<F> out;
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (const auto& t : v[i].terms()) out.push_back({t.monomial, i + offset, t.coefficient});
  std::sort(out.begin(), out.end(),
            [&](const VecTerm<F>& a, const VecTerm<F>& b) { return compare(a, b, order) > 0; });
  return out;
}

/// Components [first, first + rank) of `v` as a FreeElement.
template <CoefficientField F>
FreeElement<F> to_free(const RingPtr<F>& ring, const Vec<F>& v, std::size_t rank,
                       std::size_t first = 0) {
  std::vector<std::vector<Term<F>>> parts(rank);
  for (const auto& t : v)
    if (t.position >= first && t.position < first + rank)
      parts[t.position - first].push_back({t.monomial, t.coefficient});
  std::vector<Polynomial<F>> comps;
  comps.reserve(rank);
  for (auto& p : parts) comps.emplace_back(ring, std::move(p));
  return FreeElement<F>(ring, std::move(comps));
}

/// p[from..] - c * m * g, merged in order.
template <CoefficientField F>
Vec<F> sub_scaled(const Vec<F>& p, std::size_t from, const typename F::value_type& c,
                  const Monomial& m, const Vec<F>& g, const ModuleOrder& order, const F& k) {
  Vec<F> out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    VecTerm<F> rhs{g[j].monomial * m, g[j].position, k.neg(k.mul(c, g[j].coefficient))};
    if (i == p.size()) {
      out.push_back(std::move(rhs));
      ++j;
      continue;
    }
    auto cmp = compare(p[i], rhs, order);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(rhs));
      ++j;
    } else {
      auto sum = k.add(p[i].coefficient, rhs.coefficient);
      if (!k.is_zero(sum)) out.push_back({p[i].monomial, p[i].position, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <CoefficientField F>
void make_monic(Vec<F>& v, const F& k) {
  if (v.empty() || k.is_one(v.front().coefficient)) return;
  auto inv = k.inv(v.front().coefficient);
  for (auto& t : v) t.coefficient = k.mul(t.coefficient, inv);
}

class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_)
      throw ResourceError("reduction step cap of " + std::to_string(limit_) + " exceeded");
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Reduces `p` by the monic `basis`. With `full`, every term is reduced,
/// otherwise only until the leading term is irreducible. `skip` excludes one
/// basis index (used for interreduction).
template <CoefficientField F>
Vec<F> reduce(Vec<F> p, const std::vector<Vec<F>>& basis, const ModuleOrder& order, const F& k,
              StepBudget& budget, bool full, std::size_t skip = static_cast<std::size_t>(-1)) {
  Vec<F> remainder;
  std::size_t start = 0;
  while (start < p.size()) {
    const auto& lead = p[start];
    const Vec<F>* divisor = nullptr;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (b == skip || basis[b].empty()) continue;
      const auto& bl = basis[b].front();
      if (bl.position == lead.position && bl.monomial.divides(lead.monomial)) {
        divisor = &basis[b];
        break;
      }
    }
    if (divisor) {
      budget.tick();
      auto c = k.mul(lead.coefficient, k.inv(divisor->front().coefficient));
      auto m = lead.monomial.quotient(divisor->front().monomial);
      p = sub_scaled(p, start, c, m, *divisor, order, k);
      start = 0;
    } else if (!full) {
      remainder.insert(remainder.end(), p.begin() + static_cast<std::ptrdiff_t>(start), p.end());
      return remainder;
    } else {
      remainder.push_back(lead);
      ++start;
    }
  }
  return remainder;
}

template <CoefficientField F>
Vec<F> s_vector(const Vec<F>& a, const Vec<F>& b, const ModuleOrder& order, const F& k) {
  const auto& la = a.front();
  const auto& lb = b.front();
  Monomial l = la.monomial.lcm(lb.monomial);
  // (l / la) * a / lc(a) - (l / lb) * b / lc(b)
  Vec<F> lhs = sub_scaled(Vec<F>{}, 0, k.neg(k.inv(la.coefficient)), l.quotient(la.monomial), a,
                          order, k);
  return sub_scaled(lhs, 0, k.inv(lb.coefficient), l.quotient(lb.monomial), b, order, k);
}

}  // namespace detail

/// Reduced, monic Groebner basis of a submodule of R^rank, sorted by leading
/// term descending.
template <CoefficientField F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, std::size_t rank, ModuleOrder order)
      : ring_(std::move(ring)), rank_(rank), order_(order) {}

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  std::size_t size() const { return vecs_.size(); }
  bool empty() const { return vecs_.empty(); }

  std::vector<FreeElement<F>> generators() const {
    std::vector<FreeElement<F>> out;
    out.reserve(vecs_.size());
    for (const auto& v : vecs_) out.push_back(detail::to_free(ring_, v, rank_));
    return out;
  }

  /// Leading component index and monomial of generator i.
  std::pair<std::size_t, Monomial> leading_term(std::size_t i) const {
    return {vecs_.at(i).front().position, vecs_.at(i).front().monomial};
  }

  const std::vector<detail::Vec<F>>& vectors() const { return vecs_; }

 private:
  template <CoefficientField G>
  friend GroebnerBasis<G> buchberger(const RingPtr<G>&, std::size_t,
                                     const std::vector<FreeElement<G>>&, const ModuleOrder&);

  RingPtr<F> ring_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<detail::Vec<F>> vecs_;
};

template <CoefficientField F>
ModuleOrder default_module_order(const RingPtr<F>& ring) {
  return ModuleOrder{ring->order(), 0};
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties by generator index) and the chain criterion. The product
/// criterion is only used for ideals (rank 1).
template <CoefficientField F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::size_t rank,
                            const std::vector<FreeElement<F>>& gens, const ModuleOrder& order) {
  using detail::Vec;
  const F& k = ring->field();
  detail::StepBudget budget(ring->max_steps());

  std::vector<Vec<F>> basis;
  for (const auto& g : gens) {
    if (g.rank() != rank)
      throw StructuralError("generator of rank " + std::to_string(g.rank()) +
                            " in a submodule of R^" + std::to_string(rank));
    if (!g.ring()->compatible(*ring)) throw StructuralError("generator from a different ring");
    auto v = detail::to_vec(g, order);
    if (v.empty()) continue;
    detail::make_monic(v, k);
    basis.push_back(std::move(v));
  }

  struct Pair {
    Monomial lcm;
    std::size_t position;
    std::size_t i, j;
  };
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    auto c = order.compare(a.lcm, a.position, b.lcm, b.position);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  const bool product_criterion = rank == 1 && order.elimination_block == 0;
  auto add_pairs_for = [&](std::size_t n) {
    const auto& ln = basis[n].front();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& li = basis[i].front();
      if (li.position != ln.position) continue;
      if (product_criterion && li.monomial.coprime(ln.monomial)) continue;
      queue.insert(Pair{li.monomial.lcm(ln.monomial), ln.position, i, n});
      pending.insert({i, n});
    }
  };
  for (std::size_t n = 0; n < basis.size(); ++n) add_pairs_for(n);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    bool redundant = false;
    for (std::size_t m = 0; m < basis.size() && !redundant; ++m) {
      if (m == p.i || m == p.j) continue;
      const auto& lm = basis[m].front();
      if (lm.position == p.position && lm.monomial.divides(p.lcm) && !is_pending(p.i, m) &&
          !is_pending(p.j, m))
        redundant = true;
    }
    if (redundant) continue;

    auto s = detail::s_vector(basis[p.i], basis[p.j], order, k);
    auto r = detail::reduce(std::move(s), basis, order, k, budget, false);
    if (r.empty()) continue;
    detail::make_monic(r, k);
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop generators whose leading term is divisible by another's.
  std::vector<Vec<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& li = basis[i].front();
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (j == i) continue;
      const auto& lj = basis[j].front();
      if (lj.position == li.position && lj.monomial.divides(li.monomial) &&
          (!(lj.monomial == li.monomial) || j < i))
        drop = true;
    }
    if (!drop) minimal.push_back(basis[i]);
  }
  // Tail-reduce; leading terms stay fixed.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Vec<F> head{minimal[i].front()};
    Vec<F> tail(minimal[i].begin() + 1, minimal[i].end());
    auto reduced_tail = detail::reduce(std::move(tail), minimal, order, k, budget, true, i);
    head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
    detail::make_monic(head, k);
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [&order](const Vec<F>& a, const Vec<F>& b) {
    return detail::compare(a.front(), b.front(), order) > 0;
  });

  GroebnerBasis<F> gb(ring, rank, order);
  gb.vecs_ = std::move(minimal);
  return gb;
}

template <CoefficientField F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::size_t rank,
                            const std::vector<FreeElement<F>>& gens) {
  return buchberger(ring, rank, gens, default_module_order(ring));
}

/// Ideal convenience: rank-1 basis from polynomials.
template <CoefficientField F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  std::vector<FreeElement<F>> vs;
  for (const auto& g : gens) vs.push_back(FreeElement<F>(ring, {g}));
  return buchberger(ring, 1, vs);
}

/// Fully reduced remainder of v modulo gb.
template <CoefficientField F>
FreeElement<F> normal_form(const FreeElement<F>& v, const GroebnerBasis<F>& gb) {
  if (v.rank() != gb.rank())
    throw StructuralError("normal_form: element rank " + std::to_string(v.rank()) +
                          " vs basis rank " + std::to_string(gb.rank()));
  if (!v.ring()->compatible(*gb.ring())) throw StructuralError("normal_form: ring mismatch");
  detail::StepBudget budget(gb.ring()->max_steps());
  auto r = detail::reduce(detail::to_vec(v, gb.order()), gb.vectors(), gb.order(),
                          gb.ring()->field(), budget, true);
  return detail::to_free(gb.ring(), r, gb.rank());
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(FreeElement<F>(f.ring(), {f}), gb)[0];
}

/// Every S-vector of same-position generators reduces to zero.
template <CoefficientField F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb) {
  const auto& vs = gb.vectors();
  const F& k = gb.ring()->field();
  detail::StepBudget budget(gb.ring()->max_steps());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i].front().position != vs[j].front().position) continue;
      auto s = detail::s_vector(vs[i], vs[j], gb.order(), k);
      if (!detail::reduce(std::move(s), vs, gb.order(), k, budget, true).empty()) return false;
    }
  return true;
}

/// No leading term divides another generator's term in the same position,
/// and every generator is monic.
template <CoefficientField F>
bool is_reduced(const GroebnerBasis<F>& gb) {
  const auto& vs = gb.vectors();
  const F& k = gb.ring()->field();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!k.is_one(vs[i].front().coefficient)) return false;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : vs[j])
        if (t.position == vs[i].front().position && vs[i].front().monomial.divides(t.monomial))
          return false;
    }
  }
  return true;
}

namespace detail {

/// Basis of {(g_i, e_i)} in R^(rank + m), eliminating the first `rank` components.
template <CoefficientField F>
GroebnerBasis<F> tagged_basis(const RingPtr<F>& ring, std::size_t rank,
                              const std::vector<FreeElement<F>>& gens) {
  const std::size_t m = gens.size();
  std::vector<FreeElement<F>> tagged;
  tagged.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (gens[i].rank() != rank) throw StructuralError("generators of unequal rank");
    std::vector<Polynomial<F>> comps = gens[i].components();
    comps.resize(rank + m, Polynomial<F>(ring));
    comps[rank + i] = Polynomial<F>::one(ring);
    tagged.emplace_back(ring, std::move(comps));
  }
  return buchberger(ring, rank + m, tagged, ModuleOrder{ring->order(), rank});
}

}  // namespace detail

/// Generators of the module of relations s with sum s_i * gens_i = 0.
template <CoefficientField F>
std::vector<FreeElement<F>> syzygies(const RingPtr<F>& ring, std::size_t rank,
                                     const std::vector<FreeElement<F>>& gens) {
  if (gens.empty()) return {};
  auto gb = detail::tagged_basis(ring, rank, gens);
  std::vector<FreeElement<F>> out;
  for (const auto& v : gb.vectors())
    if (v.front().position >= rank) out.push_back(detail::to_free(ring, v, gens.size(), rank));
  return out;
}

template <CoefficientField F>
std::vector<FreeElement<F>> syzygies(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  std::vector<FreeElement<F>> vs;
  for (const auto& g : gens) vs.push_back(FreeElement<F>(ring, {g}));
  return syzygies(ring, 1, vs);
}

/// Cofactors c with sum c_i * gens_i = v, or nullopt when v is not in the
/// submodule.
template <CoefficientField F>
std::optional<std::vector<Polynomial<F>>> express_in(const FreeElement<F>& v,
                                                     const std::vector<FreeElement<F>>& gens) {
  const auto& ring = v.ring();
  const std::size_t rank = v.rank();
  if (gens.empty()) {
    if (v.is_zero()) return std::vector<Polynomial<F>>{};
    return std::nullopt;
  }
  auto gb = detail::tagged_basis(ring, rank, gens);
  detail::StepBudget budget(ring->max_steps());
  auto r = detail::reduce(detail::to_vec(v, gb.order()), gb.vectors(), gb.order(), ring->field(),
                          budget, true);
  if (!r.empty() && r.front().position < rank) return std::nullopt;
  auto tag = detail::to_free(ring, r, gens.size(), rank);
  return (-tag).components();
}

template <CoefficientField F>
std::optional<std::vector<Polynomial<F>>> express_in(const Polynomial<F>& f,
                                                     const std::vector<Polynomial<F>>& gens) {
  std::vector<FreeElement<F>> vs;
  for (const auto& g : gens) vs.push_back(FreeElement<F>(f.ring(), {g}));
  return express_in(FreeElement<F>(f.ring(), {f}), vs);
}

template <CoefficientField F>
bool submodule_membership(const FreeElement<F>& v, const std::vector<FreeElement<F>>& gens) {
  return normal_form(v, buchberger(v.ring(), v.rank(), gens)).is_zero();
}

template <CoefficientField F>
bool ideal_membership(const Polynomial<F>& f, const std::vector<Polynomial<F>>& gens) {
  return normal_form(f, buchberger(f.ring(), gens)).is_zero();
}

}  // namespace koszul
