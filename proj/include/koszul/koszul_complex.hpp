#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/multilinear.hpp"
#include "koszul/presented_module.hpp"

namespace koszul {

/// Degree-n piece of Lambda(M) (x) S(M):
///
///   0 -> Lambda^n M -> Lambda^{n-1} M (x) M -> ... -> S^n M -> 0
///
/// Spot p is Lambda^p M (x) S^{n-p} M; its cover basis is the pair
/// (wedge tuple W, symmetric tuple S) at position index(W) * |S-basis| + index(S).
/// The differential on basis elements is
///
///   d(e_W (x) e_S) = sum_k (-1)^(k+1) e_{W \ i_k} (x) e_{i_k} e_S,
///
/// so d(u ^ v) = v (x) u - u (x) v and d(u (x) v) = uv.
template <CoefficientField F>
class KoszulComponent {
 public:
  std::size_t degree() const { return degree_; }
  const PresentedModule<F>& base() const { return base_; }

  /// Lambda^p M (x) S^{degree - p} M, for 0 <= p <= degree.
  const PresentedModule<F>& spot(std::size_t p) const { return spots_.at(p); }

  /// d_p : spot(p) -> spot(p - 1), for 1 <= p <= degree.
  const ModuleMap<F>& differential(std::size_t p) const {
    if (p == 0 || p > degree_) throw StructuralError("no differential out of spot " + std::to_string(p));
    return differentials_.at(p - 1);
  }

  /// Cover position of e_W (x) e_S in spot |W|.
  std::size_t basis_position(const IndexTuple& wedge, const IndexTuple& sym) const {
    const std::size_t p = wedge.size();
    if (p + sym.size() != degree_) throw StructuralError("basis tuple of the wrong total degree");
    const std::size_t r = base_.cover_rank();
    TupleIndex w(wedge_indices(r, p)), s(sym_indices(r, degree_ - p));
    return w.at(wedge) * s.size() + s.at(sym);
  }

 private:
  template <CoefficientField G>
  friend KoszulComponent<G> build_koszul_component(const PresentedModule<G>&, std::size_t);

  KoszulComponent(std::size_t degree, PresentedModule<F> base)
      : degree_(degree), base_(std::move(base)) {}

  std::size_t degree_;
  PresentedModule<F> base_;
  std::vector<PresentedModule<F>> spots_;
  std::vector<ModuleMap<F>> differentials_;
};

template <CoefficientField F>
KoszulComponent<F> build_koszul_component(const PresentedModule<F>& m, std::size_t n) {
  if (n == 0 || n > kMaxPowerDegree)
    throw UnsupportedError("Koszul component degree must be 1.." + std::to_string(kMaxPowerDegree));
  const auto& ring = m.ring();
  const std::size_t r = m.cover_rank();
  KoszulComponent<F> k(n, m);

  for (std::size_t p = 0; p <= n; ++p) {
    if (p == n)
      k.spots_.push_back(ext_power_presentation(m, n));
    else if (p == 0)
      k.spots_.push_back(sym_power_presentation(m, n));
    else
      k.spots_.push_back(
          tensor_presentation(ext_power_presentation(m, p), sym_power_presentation(m, n - p)));
  }

  for (std::size_t p = 1; p <= n; ++p) {
    const auto wedges = wedge_indices(r, p);
    const auto syms = sym_indices(r, n - p);
    const TupleIndex lower_wedge(wedge_indices(r, p - 1));
    const TupleIndex lower_sym(sym_indices(r, n - p + 1));
    const std::size_t target_rank = k.spots_[p - 1].cover_rank();
    std::vector<FreeElement<F>> lift;
    lift.reserve(wedges.size() * syms.size());
    for (const auto& w : wedges)
      for (const auto& s : syms) {
        std::vector<Polynomial<F>> c(target_rank, Polynomial<F>(ring));
        for (std::size_t pos = 0; pos < p; ++pos) {
          IndexTuple rest = w;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
          IndexTuple moved = s;
          moved.push_back(w[pos]);
          std::sort(moved.begin(), moved.end());
          auto& slot = c[lower_wedge.at(rest) * lower_sym.size() + lower_sym.at(moved)];
          slot = pos % 2 == 0 ? slot + Polynomial<F>::one(ring) : slot - Polynomial<F>::one(ring);
        }
        lift.emplace_back(ring, std::move(c));
      }
    try {
      k.differentials_.emplace_back(k.spots_[p], k.spots_[p - 1], std::move(lift));
    } catch (const ContractError& e) {
      throw ConsistencyError("Koszul differential d_" + std::to_string(p) +
                             " is not well defined: " + e.what());
    }
  }

  for (std::size_t p = 2; p <= n; ++p)
    if (!compose(k.differential(p - 1), k.differential(p)).is_zero_map())
      throw ConsistencyError("d_" + std::to_string(p - 1) + " o d_" + std::to_string(p) +
                             " is nonzero");
  return k;
}

template <CoefficientField F>
struct SpotHomology {
  std::size_t p;
  HomologyModule<F> homology;
  bool zero;
  /// A nonzero class, as a reduced element of spot p.
  std::optional<ModuleElement<F>> witness;
};

template <CoefficientField F>
struct HomologyReport {
  std::size_t degree;
  /// Ordered p = degree, ..., 0.
  std::vector<SpotHomology<F>> spots;
  /// False iff some spot has zero homology while a higher spot does not.
  bool rigid;

  const SpotHomology<F>& at(std::size_t p) const {
    for (const auto& s : spots)
      if (s.p == p) return s;
    throw StructuralError("no spot " + std::to_string(p) + " in the report");
  }

  /// Homology vanishes at every spot p >= 1.
  bool exact_above_zero() const {
    for (const auto& s : spots)
      if (s.p >= 1 && !s.zero) return false;
    return true;
  }
};

/// `zero_by_spot[p]` is whether H_p vanishes.
inline bool rigidity_flag(const std::vector<bool>& zero_by_spot) {
  for (std::size_t p = 0; p < zero_by_spot.size(); ++p)
    for (std::size_t q = p + 1; q < zero_by_spot.size(); ++q)
      if (zero_by_spot[p] && !zero_by_spot[q]) return false;
  return true;
}

/// Homology at every spot: the kernel of d_n on top, the cokernel of d_1 at
/// spot 0, ker/im in between.
template <CoefficientField F>
HomologyReport<F> homology_report(const KoszulComponent<F>& k) {
  const std::size_t n = k.degree();
  const auto zero_module = PresentedModule<F>::zero(k.base().ring());
  HomologyReport<F> report{n, {}, true};
  std::vector<bool> zero_by_spot(n + 1, true);
  for (std::size_t p = n + 1; p-- > 0;) {
    const auto& here = k.spot(p);
    auto incoming = p == n ? ModuleMap<F>::zero(zero_module, here) : k.differential(p + 1);
    auto outgoing = p == 0 ? ModuleMap<F>::zero(here, zero_module) : k.differential(p);
    auto h = homology_at(incoming, outgoing);
    const bool zero = h.is_zero();
    std::optional<ModuleElement<F>> witness;
    if (!zero) {
      for (std::size_t j = 0; j < h.module().cover_rank(); ++j) {
        auto cls = h.module().generator(j);
        if (h.class_is_zero(cls)) continue;
        witness = here.element(h.lift(cls).reduced());
        break;
      }
    }
    zero_by_spot[p] = zero;
    report.spots.push_back(SpotHomology<F>{p, std::move(h), zero, std::move(witness)});
  }
  report.rigid = rigidity_flag(zero_by_spot);
  return report;
}

}  // namespace koszul
