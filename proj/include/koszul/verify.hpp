#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/ideal.hpp"
#include "koszul/koszul_complex.hpp"
#include "koszul/parse.hpp"

namespace koszul {

/// Textual ring description: `gf2`, `gf<p>` or `qq`, variable names, order.
struct RingSpec {
  std::string field = "gf2";
  std::vector<std::string> variables = {"x", "y", "z"};
  MonomialOrder order = MonomialOrder::grevlex;
  std::uint64_t max_steps = kDefaultMaxSteps;
};

/// Generators in the polynomial grammar.
struct IdealSpec {
  std::vector<std::string> generators = {"x", "y", "z"};
};

/// Calls `fn` with the coefficient field named by `spec`.
template <class Fn>
decltype(auto) with_field(const std::string& spec, Fn&& fn) {
  if (spec == "qq") return fn(Rationals{});
  if (spec.size() > 2 && spec.compare(0, 2, "gf") == 0 &&
      spec.find_first_not_of("0123456789", 2) == std::string::npos && spec.size() <= 12)
    return fn(PrimeField(std::stoull(spec.substr(2))));
  throw StructuralError("unknown field '" + spec + "' (expected gf2, gf<p> or qq)");
}

template <CoefficientField F>
RingPtr<F> ring_from_spec(F field, const RingSpec& spec) {
  return make_ring(std::move(field), spec.variables, spec.order, spec.max_steps);
}

template <CoefficientField F>
Ideal<F> ideal_from_spec(const RingPtr<F>& ring, const IdealSpec& spec) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : spec.generators) gens.push_back(parse_poly(g, ring));
  return Ideal<F>(ring, std::move(gens));
}

struct SpotSummary {
  std::size_t p = 0;
  bool zero = true;
  std::size_t cover_rank = 0;
  std::size_t relations = 0;
  std::optional<std::string> witness;
};

struct ChainStep {
  std::string expression;
  std::string representative;
};

/// Field-independent digest of one Koszul computation.
struct BranchSummary {
  std::string label;
  std::string field;
  std::string module;
  std::size_t degree = 0;
  std::vector<SpotSummary> spots;
  bool rigid = true;
  bool exact = true;

  // Populated when the module is an ideal with at least three generators
  // and the degree is 2; u = g1 * (e2 ^ e3).
  std::optional<std::string> u;
  std::optional<bool> u_zero;
  std::optional<bool> boundary_of_u_zero;
  std::optional<bool> chain_ok;
  std::vector<ChainStep> chain;
  std::optional<bool> witness_matches_u;
  // Characteristic 2 only.
  std::optional<std::string> certificate;
  std::optional<bool> certificate_nonzero;

  const SpotSummary* spot(std::size_t p) const {
    for (const auto& s : spots)
      if (s.p == p) return &s;
    return nullptr;
  }
};

namespace detail {

template <CoefficientField F>
void summarize_homology(const HomologyReport<F>& report, BranchSummary& out) {
  for (const auto& s : report.spots) {
    SpotSummary sum;
    sum.p = s.p;
    sum.zero = s.zero;
    sum.cover_rank = s.homology.module().cover_rank();
    sum.relations = s.homology.module().relations().size();
    if (s.witness) sum.witness = s.witness->to_string();
    out.spots.push_back(std::move(sum));
  }
  out.rigid = report.rigid;
  out.exact = report.exact_above_zero();
}

template <CoefficientField F>
std::string wrap_factor(const Polynomial<F>& p) {
  auto s = p.to_string();
  return p.term_count() == 1 && s.find('*') == std::string::npos && s.front() != '-' ? s
                                                                                     : "(" + s + ")";
}

/// The seven expressions x(y|z) = (xy)|z = y(x|z) = x|(yz) = z(x|y) = (xz)|y = x(z|y)
/// for the first three generators, as elements of I (x) I.
template <CoefficientField F>
std::vector<std::pair<std::string, ModuleElement<F>>> identity_chain(
    const Ideal<F>& ideal, const PresentedModule<F>& ideal_tensor_ideal) {
  const auto& ring = ideal.ring();
  const auto& g = ideal.generators();
  const auto one = Polynomial<F>::one(ring);
  std::vector<FreeElement<F>> columns;
  for (const auto& gi : g) columns.emplace_back(ring, std::vector<Polynomial<F>>{gi});
  auto cover_of = [&](const Polynomial<F>& a) {
    auto c = express_in(FreeElement<F>(ring, {a}), columns);
    if (!c) throw ConsistencyError("identity chain: " + a.to_string() + " is not in the ideal");
    return FreeElement<F>(ring, std::move(*c));
  };
  struct Expr {
    Polynomial<F> scalar, left, right;
  };
  const Polynomial<F>& x = g[0];
  const Polynomial<F>& y = g[1];
  const Polynomial<F>& z = g[2];
  const std::vector<Expr> exprs = {{x, y, z},     {one, x * y, z}, {y, x, z},    {one, x, y * z},
                                   {z, x, y},     {one, x * z, y}, {x, z, y}};
  std::vector<std::pair<std::string, ModuleElement<F>>> out;
  for (const auto& e : exprs) {
    std::string label = wrap_factor(e.left) + "|" + wrap_factor(e.right);
    if (!(e.scalar == one)) label = wrap_factor(e.scalar) + "*(" + label + ")";
    out.emplace_back(label, e.scalar * tensor_of(ideal_tensor_ideal, cover_of(e.left),
                                                 cover_of(e.right)));
  }
  return out;
}

}  // namespace detail

/// Kos^n of the ideal, with the counterexample checks when they apply.
template <CoefficientField F>
BranchSummary analyze_ideal(const Ideal<F>& ideal, std::size_t degree, const std::string& label,
                            bool counterexample_checks = true) {
  const auto& ring = ideal.ring();
  BranchSummary out;
  out.label = label;
  out.field = ring->field().name();
  out.module = "I=" + ideal.to_string();
  out.degree = degree;

  auto m = ideal_as_module(ideal);
  auto k = build_koszul_component(m, degree);
  auto report = homology_report(k);
  detail::summarize_homology(report, out);

  if (!counterexample_checks || ideal.size() < 3 || degree != 2) return out;

  const auto& lambda2 = k.spot(2);
  const auto pos = k.basis_position({1, 2}, {});
  std::vector<Polynomial<F>> comps(lambda2.cover_rank(), Polynomial<F>(ring));
  comps[pos] = ideal.generators()[0];
  auto u = lambda2.element(FreeElement<F>(ring, std::move(comps)));
  out.u = u.to_string();
  out.u_zero = element_is_zero(u);
  out.boundary_of_u_zero = element_is_zero(k.differential(2)(u));

  auto chain = detail::identity_chain(ideal, k.spot(1));
  bool ok = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    out.chain.push_back({chain[i].first, chain[i].second.reduced().to_string(
                                             chain[i].second.parent().generator_names())});
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      ok = ok && element_equal(chain[i].second, chain[j].second);
  }
  out.chain_ok = ok;

  const auto& top = report.at(2);
  if (top.witness) {
    auto with_rels = [&](const FreeElement<F>& v) {
      std::vector<FreeElement<F>> gens{v};
      gens.insert(gens.end(), lambda2.relations().begin(), lambda2.relations().end());
      return gens;
    };
    const auto& w = top.witness->representative();
    out.witness_matches_u = submodule_membership(u.representative(), with_rels(w)) &&
                            submodule_membership(w, with_rels(u.representative()));
  }

  if (ring->field().characteristic() == 2) {
    auto f = certificate_map(ideal, lambda2);
    auto value = f.value(u);
    out.certificate = value.to_string();
    out.certificate_nonzero = !value.is_zero();
  }
  return out;
}

/// Kos^n of the free module R^rank.
template <CoefficientField F>
BranchSummary analyze_free(const RingPtr<F>& ring, std::size_t rank, std::size_t degree,
                           const std::string& label) {
  BranchSummary out;
  out.label = label;
  out.field = ring->field().name();
  out.module = "R^" + std::to_string(rank);
  out.degree = degree;
  auto k = build_koszul_component(PresentedModule<F>::free(ring, rank), degree);
  detail::summarize_homology(homology_report(k), out);
  return out;
}

struct Claim {
  std::string name;
  bool holds = false;
};

struct Verdict {
  RingSpec ring;
  IdealSpec ideal;
  std::size_t degree = 2;
  std::uint64_t characteristic = 0;
  BranchSummary primary;
  std::vector<BranchSummary> controls;
  /// Each expected to hold; checked in order.
  std::vector<Claim> claims;
  bool verified = true;
  std::optional<std::string> failed_step;

  std::optional<bool> h2_nonzero() const {
    if (auto s = primary.spot(2)) return !s->zero;
    return std::nullopt;
  }
  std::optional<bool> h1_zero() const {
    if (primary.degree < 2) return std::nullopt;
    if (auto s = primary.spot(1)) return s->zero;
    return std::nullopt;
  }
  /// u and H_2 both vanish; only meaningful when u is defined.
  std::optional<bool> counterexample_absent() const {
    if (!primary.u_zero) return std::nullopt;
    return *primary.u_zero && primary.spot(2) && primary.spot(2)->zero;
  }
};

/// Runs the characteristic-2 counterexample argument on the given ring and
/// ideal, plus controls over qq and on the free module of the same rank.
///
/// The claims checked depend on the characteristic: in characteristic 2 the
/// full argument (u != 0 two ways, d(u) = 0 through the identity chain,
/// H_2 != 0 witnessed by u, H_1 = 0, not rigid, exact controls); in
/// characteristic 0 the absence of the counterexample (u = 0, H_2 = 0,
/// exactness); in odd characteristic only u = 0, which follows from 2u = 0.
/// With fewer than three generators or degree != 2 only exactness of the
/// controls is claimed.
inline Verdict verify_counterexample(const RingSpec& ring_spec, const IdealSpec& ideal_spec,
                                     std::size_t degree = 2) {
  Verdict v;
  v.ring = ring_spec;
  v.ideal = ideal_spec;
  v.degree = degree;
  const std::size_t m = ideal_spec.generators.size();

  with_field(ring_spec.field, [&](auto field) {
    using F = decltype(field);
    auto ring = ring_from_spec(field, ring_spec);
    v.characteristic = ring->field().characteristic();
    v.primary = analyze_ideal(ideal_from_spec(ring, ideal_spec), degree, "primary");
    if (v.characteristic != 0) {
      auto qq = ring_from_spec(Rationals{}, ring_spec);
      v.controls.push_back(analyze_ideal(ideal_from_spec(qq, ideal_spec), degree, "qq-ideal"));
    }
    v.controls.push_back(analyze_free<F>(ring, m, degree, "free"));
    return 0;
  });

  auto claim = [&](const std::string& name, std::optional<bool> holds) {
    v.claims.push_back({name, holds.value_or(false)});
  };
  const auto& p = v.primary;
  const bool has_u = p.u.has_value();
  const BranchSummary* qq_control = v.characteristic != 0 ? &v.controls.front() : nullptr;
  const BranchSummary& free_control = v.controls.back();

  if (has_u && v.characteristic == 2) {
    claim("u_nonzero_certificate", p.certificate_nonzero);
    claim("u_nonzero_direct", p.u_zero ? std::optional<bool>(!*p.u_zero) : std::nullopt);
    claim("identity_chain", p.chain_ok);
    claim("boundary_of_u_zero", p.boundary_of_u_zero);
    claim("h2_nonzero", v.h2_nonzero());
    claim("witness_matches_u", p.witness_matches_u);
    claim("h1_zero", v.h1_zero());
    claim("not_rigid", !p.rigid);
  } else if (has_u && v.characteristic == 0) {
    claim("identity_chain", p.chain_ok);
    claim("boundary_of_u_zero", p.boundary_of_u_zero);
    claim("u_zero", p.u_zero);
    claim("h2_zero", v.h2_nonzero() ? std::optional<bool>(!*v.h2_nonzero()) : std::nullopt);
    claim("h1_zero", v.h1_zero());
  } else if (has_u) {
    claim("identity_chain", p.chain_ok);
    claim("boundary_of_u_zero", p.boundary_of_u_zero);
    claim("u_zero", p.u_zero);
  } else if (v.characteristic == 0) {
    claim("exact", p.exact);
  }
  if (qq_control) claim("qq_control_exact", qq_control->exact);
  claim("free_control_exact", free_control.exact);

  for (const auto& c : v.claims)
    if (!c.holds) {
      v.verified = false;
      v.failed_step = c.name;
      break;
    }
  return v;
}

/// Throws VerificationError naming the first failed claim.
inline void require_verified(const Verdict& v) {
  if (!v.verified) throw VerificationError(*v.failed_step, "claim does not hold for " + v.ring.field);
}

}  // namespace koszul
