#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/presented_module.hpp"

namespace koszul {

/// Exterior and symmetric powers are supported up to this degree.
inline constexpr std::size_t kMaxPowerDegree = 3;

using IndexTuple = std::vector<std::size_t>;

/// Strictly increasing n-tuples from {0..rank-1}, lexicographic.
inline std::vector<IndexTuple> wedge_indices(std::size_t rank, std::size_t n) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < rank; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Non-decreasing n-tuples from {0..rank-1}, lexicographic.
inline std::vector<IndexTuple> sym_indices(std::size_t rank, std::size_t n) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < rank; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Row-major position of e_i (x) e_j.
inline std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t second_rank) {
  return i * second_rank + j;
}

/// Tuple -> position lookup for an enumerated basis.
class TupleIndex {
 public:
  explicit TupleIndex(const std::vector<IndexTuple>& tuples) {
    for (std::size_t k = 0; k < tuples.size(); ++k) index_.emplace(tuples[k], k);
  }
  std::size_t at(const IndexTuple& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw StructuralError("index tuple is not a basis element");
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::map<IndexTuple, std::size_t> index_;
};

/// Sorts `t` in place; returns the sign of the permutation, or 0 when an
/// index repeats.
inline int sort_with_sign(IndexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

namespace detail {

inline std::string join_names(const std::vector<std::string>& names, const IndexTuple& t,
                              const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += sep;
    out += names.at(t[k]);
  }
  return out;
}

inline void check_degree(std::size_t n) {
  if (n > kMaxPowerDegree)
    throw UnsupportedError("powers of degree " + std::to_string(n) + " are not supported (max " +
                           std::to_string(kMaxPowerDegree) + ")");
}

template <CoefficientField F>
FreeElement<F> signed_unit(const RingPtr<F>& ring, std::size_t rank, std::size_t index, int sign) {
  auto e = FreeElement<F>::unit(ring, rank, index);
  return sign < 0 ? -e : e;
}

}  // namespace detail

/// M (x) N on the cover basis e_i (x) e_j (row-major). Relations:
/// r (x) e_j for every relation r of M, then e_i (x) s for every relation s of N.
template <CoefficientField F>
PresentedModule<F> tensor_presentation(const PresentedModule<F>& m, const PresentedModule<F>& n) {
  if (!m.ring()->compatible(*n.ring())) throw StructuralError("tensor of modules over different rings");
  const auto& ring = m.ring();
  const std::size_t rm = m.cover_rank(), rn = n.cover_rank(), rank = rm * rn;
  std::vector<FreeElement<F>> rels;
  for (const auto& r : m.relations())
    for (std::size_t j = 0; j < rn; ++j) {
      std::vector<Polynomial<F>> c(rank, Polynomial<F>(ring));
      for (std::size_t i = 0; i < rm; ++i) c[tensor_index(i, j, rn)] = r[i];
      rels.emplace_back(ring, std::move(c));
    }
  for (std::size_t i = 0; i < rm; ++i)
    for (const auto& s : n.relations()) {
      std::vector<Polynomial<F>> c(rank, Polynomial<F>(ring));
      for (std::size_t j = 0; j < rn; ++j) c[tensor_index(i, j, rn)] = s[j];
      rels.emplace_back(ring, std::move(c));
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rm; ++i)
    for (std::size_t j = 0; j < rn; ++j)
      names.push_back(m.generator_names()[i] + "|" + n.generator_names()[j]);
  return PresentedModule<F>(ring, rank, std::move(rels), std::move(names));
}

/// Lambda^n M on the wedge basis. Relations r ^ e_w for every relation r and
/// every (n-1)-wedge w, with indices sorted (signed) and repeated-index terms
/// dropped. Lambda^0 M is the free module of rank 1.
template <CoefficientField F>
PresentedModule<F> ext_power_presentation(const PresentedModule<F>& m, std::size_t n) {
  detail::check_degree(n);
  const auto& ring = m.ring();
  if (n == 1) return m;
  if (n == 0) return PresentedModule<F>::free(ring, 1, {"1"});
  const std::size_t r = m.cover_rank();
  auto basis = wedge_indices(r, n);
  TupleIndex index(basis);
  std::vector<FreeElement<F>> rels;
  for (const auto& rel : m.relations())
    for (const auto& w : wedge_indices(r, n - 1)) {
      std::vector<Polynomial<F>> c(basis.size(), Polynomial<F>(ring));
      for (std::size_t i = 0; i < r; ++i) {
        if (rel[i].is_zero()) continue;
        IndexTuple t{i};
        t.insert(t.end(), w.begin(), w.end());
        int sign = sort_with_sign(t);
        if (sign == 0) continue;
        auto& slot = c[index.at(t)];
        slot = sign > 0 ? slot + rel[i] : slot - rel[i];
      }
      rels.emplace_back(ring, std::move(c));
    }
  std::vector<std::string> names;
  for (const auto& t : basis) names.push_back(detail::join_names(m.generator_names(), t, "^"));
  return PresentedModule<F>(ring, basis.size(), std::move(rels), std::move(names));
}

/// S^n M on the symmetric-monomial basis. Relations r * e_w for every relation
/// r and every (n-1)-fold symmetric monomial w. S^0 M is free of rank 1.
template <CoefficientField F>
PresentedModule<F> sym_power_presentation(const PresentedModule<F>& m, std::size_t n) {
  detail::check_degree(n);
  const auto& ring = m.ring();
  if (n == 1) return m;
  if (n == 0) return PresentedModule<F>::free(ring, 1, {"1"});
  const std::size_t r = m.cover_rank();
  auto basis = sym_indices(r, n);
  TupleIndex index(basis);
  std::vector<FreeElement<F>> rels;
  for (const auto& rel : m.relations())
    for (const auto& w : sym_indices(r, n - 1)) {
      std::vector<Polynomial<F>> c(basis.size(), Polynomial<F>(ring));
      for (std::size_t i = 0; i < r; ++i) {
        if (rel[i].is_zero()) continue;
        IndexTuple t{i};
        t.insert(t.end(), w.begin(), w.end());
        std::sort(t.begin(), t.end());
        auto& slot = c[index.at(t)];
        slot = slot + rel[i];
      }
      rels.emplace_back(ring, std::move(c));
    }
  std::vector<std::string> names;
  for (const auto& t : basis) names.push_back(detail::join_names(m.generator_names(), t, "."));
  return PresentedModule<F>(ring, basis.size(), std::move(rels), std::move(names));
}

/// a_1 ^ ... ^ a_n in Lambda^n M, for cover vectors a_k of M (rank
/// `base_rank`), expanded multilinearly on the wedge basis.
template <CoefficientField F>
ModuleElement<F> wedge_of(const PresentedModule<F>& ext, std::size_t base_rank,
                          std::span<const FreeElement<F>> factors) {
  const std::size_t n = factors.size();
  detail::check_degree(n);
  auto basis = wedge_indices(base_rank, n);
  if (basis.size() != ext.cover_rank())
    throw StructuralError("wedge_of: module is not an exterior power of the given rank");
  TupleIndex index(basis);
  const auto& ring = ext.ring();
  std::vector<Polynomial<F>> c(basis.size(), Polynomial<F>(ring));
  IndexTuple t(n);
  auto rec = [&](auto&& self, std::size_t k, const Polynomial<F>& coeff) -> void {
    if (k == n) {
      IndexTuple s = t;
      int sign = sort_with_sign(s);
      if (sign == 0) return;
      auto& slot = c[index.at(s)];
      slot = sign > 0 ? slot + coeff : slot - coeff;
      return;
    }
    if (factors[k].rank() != base_rank) throw StructuralError("wedge_of: factor rank mismatch");
    for (std::size_t i = 0; i < base_rank; ++i) {
      if (factors[k][i].is_zero()) continue;
      t[k] = i;
      self(self, k + 1, coeff * factors[k][i]);
    }
  };
  rec(rec, 0, Polynomial<F>::one(ring));
  return ext.element(FreeElement<F>(ring, std::move(c)));
}

/// a_1 . ... . a_n in S^n M.
template <CoefficientField F>
ModuleElement<F> sym_of(const PresentedModule<F>& sym, std::size_t base_rank,
                        std::span<const FreeElement<F>> factors) {
  const std::size_t n = factors.size();
  detail::check_degree(n);
  auto basis = sym_indices(base_rank, n);
  if (basis.size() != sym.cover_rank())
    throw StructuralError("sym_of: module is not a symmetric power of the given rank");
  TupleIndex index(basis);
  const auto& ring = sym.ring();
  std::vector<Polynomial<F>> c(basis.size(), Polynomial<F>(ring));
  IndexTuple t(n);
  auto rec = [&](auto&& self, std::size_t k, const Polynomial<F>& coeff) -> void {
    if (k == n) {
      IndexTuple s = t;
      std::sort(s.begin(), s.end());
      auto& slot = c[index.at(s)];
      slot = slot + coeff;
      return;
    }
    if (factors[k].rank() != base_rank) throw StructuralError("sym_of: factor rank mismatch");
    for (std::size_t i = 0; i < base_rank; ++i) {
      if (factors[k][i].is_zero()) continue;
      t[k] = i;
      self(self, k + 1, coeff * factors[k][i]);
    }
  };
  rec(rec, 0, Polynomial<F>::one(ring));
  return sym.element(FreeElement<F>(ring, std::move(c)));
}

/// a (x) b in the presentation returned by tensor_presentation(M, N).
template <CoefficientField F>
ModuleElement<F> tensor_of(const PresentedModule<F>& tensor, const FreeElement<F>& a,
                           const FreeElement<F>& b) {
  const std::size_t rm = a.rank(), rn = b.rank();
  if (rm * rn != tensor.cover_rank()) throw StructuralError("tensor_of: rank mismatch");
  const auto& ring = tensor.ring();
  std::vector<Polynomial<F>> c(rm * rn, Polynomial<F>(ring));
  for (std::size_t i = 0; i < rm; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < rn; ++j)
      if (!b[j].is_zero()) c[tensor_index(i, j, rn)] = a[i] * b[j];
  }
  return tensor.element(FreeElement<F>(ring, std::move(c)));
}

}  // namespace koszul
