#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace koszul;
using koszul::test::P;
using koszul::test::V;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

int inversion_sign(const IndexTuple& t) {
  int inv = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) ++inv;
    }
  return inv % 2 ? -1 : 1;
}

template <CoefficientField F>
ModuleElement<F> wedge2(const PresentedModule<F>& ext, std::size_t rank, const FreeElement<F>& a,
                        const FreeElement<F>& b) {
  std::vector<FreeElement<F>> f{a, b};
  return wedge_of(ext, rank, std::span<const FreeElement<F>>(f));
}

}  // namespace

TEST_CASE("index tuples are enumerated in lexicographic order", "[multilinear]") {
  CHECK(wedge_indices(3, 2) == std::vector<IndexTuple>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(wedge_indices(3, 3) == std::vector<IndexTuple>{{0, 1, 2}});
  CHECK(wedge_indices(2, 3).empty());
  CHECK(wedge_indices(4, 0) == std::vector<IndexTuple>{{}});
  CHECK(sym_indices(2, 2) == std::vector<IndexTuple>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(sym_indices(3, 1) == std::vector<IndexTuple>{{0}, {1}, {2}});
  CHECK(tensor_index(1, 2, 3) == 5);
  for (std::size_t r = 0; r <= 5; ++r)
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK(wedge_indices(r, n).size() == binomial(r, n));
      CHECK(sym_indices(r, n).size() == binomial(r + n - 1 + (r == 0 && n == 0), n));
    }
}

TEST_CASE("sort_with_sign matches the inversion count", "[multilinear][property]") {
  for (std::size_t len = 0; len <= 3; ++len) {
    IndexTuple t(len, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == len) {
        IndexTuple s = t;
        int sign = sort_with_sign(s);
        CHECK(sign == inversion_sign(t));
        if (sign != 0) CHECK(std::is_sorted(s.begin(), s.end()));
        return;
      }
      for (std::size_t v = 0; v < 4; ++v) {
        t[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
}

TEST_CASE("tensor square of (x,y,z)", "[multilinear]") {
  auto q = test::qq();
  Ideal<Rationals> ideal(q, {P(q, "x"), P(q, "y"), P(q, "z")});
  auto m = ideal_as_module(ideal);
  auto t = tensor_presentation(m, m);
  CHECK(t.cover_rank() == 9);
  CHECK(t.relations().size() == 18);
  CHECK(t.generator_names()[5] == "e2|e3");
  // Every relation dies under e_i (x) e_j |-> g_i g_j.
  const auto& g = ideal.generators();
  for (const auto& r : t.relations()) {
    Polynomial<Rationals> s(q);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) s = s + r[tensor_index(i, j, 3)] * g[i] * g[j];
    CHECK(s.is_zero());
  }
  // x|y and y|x differ in I (x) I.
  auto e = [&](std::size_t i) { return FreeElement<Rationals>::unit(q, 3, i); };
  CHECK_FALSE(element_equal(tensor_of(t, e(0), e(1)), tensor_of(t, e(1), e(0))));
  // y * (x|z) = x * (y|z) via the syzygy y e1 - x e2.
  CHECK(element_equal(P(q, "y") * tensor_of(t, e(0), e(2)), P(q, "x") * tensor_of(t, e(1), e(2))));
}

TEST_CASE("exterior and symmetric powers of free modules", "[multilinear]") {
  auto r2 = test::gf(2);
  for (std::size_t rank = 1; rank <= 4; ++rank)
    for (std::size_t n = 0; n <= 3; ++n) {
      auto f = PresentedModule<PrimeField>::free(r2, rank);
      auto ext = ext_power_presentation(f, n);
      auto sym = sym_power_presentation(f, n);
      CHECK(ext.cover_rank() == binomial(rank, n));
      CHECK(sym.cover_rank() == binomial(rank + n - 1, n));
      CHECK(ext.relations().empty());
      CHECK(sym.relations().empty());
    }
  auto f3 = PresentedModule<PrimeField>::free(r2, 3);
  CHECK(ext_power_presentation(f3, 2).generator_names() ==
        std::vector<std::string>{"e1^e2", "e1^e3", "e2^e3"});
  CHECK(sym_power_presentation(f3, 2).generator_names()[1] == "e1.e2");
  CHECK(ext_power_presentation(f3, 0).generator_names() == std::vector<std::string>{"1"});
  CHECK_THROWS_AS(ext_power_presentation(f3, 4), UnsupportedError);
  CHECK_THROWS_AS(sym_power_presentation(f3, 4), UnsupportedError);
}

TEST_CASE("exterior square of (x,y,z) by hand", "[multilinear]") {
  auto q = test::qq();
  Ideal<Rationals> ideal(q, {P(q, "x"), P(q, "y"), P(q, "z")});
  auto lambda2 = ext_power_presentation(ideal_as_module(ideal), 2);
  CHECK(lambda2.cover_rank() == 3);
  // s1 = y e1 - x e2; s1 ^ e1 = x e1^e2, s1 ^ e2 = y e1^e2, s1 ^ e3 = y e1^e3 - x e2^e3.
  for (const auto& v : {V(q, {"x", "0", "0"}), V(q, {"y", "0", "0"}), V(q, {"0", "y", "-x"})})
    CHECK(lambda2.represents_zero(v));
  CHECK_FALSE(lambda2.represents_zero(V(q, {"1", "0", "0"})));
  // s3 ^ e2 = y e2^e3, so y e2^e3 is a relation but e2^e3 is not.
  CHECK(lambda2.represents_zero(V(q, {"0", "0", "y"})));
  CHECK_FALSE(lambda2.represents_zero(V(q, {"0", "0", "1"})));
}

TEST_CASE("symmetric square of (x,y,z) by hand", "[multilinear]") {
  auto q = test::qq();
  Ideal<Rationals> ideal(q, {P(q, "x"), P(q, "y"), P(q, "z")});
  auto s2 = sym_power_presentation(ideal_as_module(ideal), 2);
  CHECK(s2.cover_rank() == 6);
  // Basis e1e1, e1e2, e1e3, e2e2, e2e3, e3e3. s1 * e1 = y e1e1 - x e1e2.
  CHECK(s2.represents_zero(V(q, {"y", "-x", "0", "0", "0", "0"})));
  // s1 * e2 = y e1e2 - x e2e2.
  CHECK(s2.represents_zero(V(q, {"0", "y", "0", "-x", "0", "0"})));
  CHECK_FALSE(s2.represents_zero(V(q, {"x", "0", "0", "0", "0", "0"})));
}

TEST_CASE("powers of R/(x)", "[multilinear]") {
  auto q = test::qq();
  PresentedModule<Rationals> rx(q, 1, {V(q, {"x"})});
  auto ext2 = ext_power_presentation(rx, 2);
  CHECK(ext2.cover_rank() == 0);
  CHECK(is_zero_module(ext2));
  auto sym2 = sym_power_presentation(rx, 2);
  CHECK(sym2.cover_rank() == 1);
  CHECK(sym2.represents_zero(V(q, {"x"})));
  CHECK_FALSE(sym2.represents_zero(V(q, {"1"})));
  CHECK_FALSE(sym2.represents_zero(V(q, {"y"})));
}

TEST_CASE("wedge_of is alternating and respects relations", "[multilinear][property]") {
  std::mt19937 rng(53);
  auto q = test::qq();
  auto r2 = test::gf(2);
  auto run = [&](const auto& ring) {
    for (int trial = 0; trial < 10; ++trial) {
      auto m = test::random_module(ring, rng);
      const auto r = m.cover_rank();
      auto ext = ext_power_presentation(m, 2);
      auto a = test::random_vector(ring, r, rng);
      auto b = test::random_vector(ring, r, rng);
      CHECK(element_is_zero(wedge2(ext, r, a, b) + wedge2(ext, r, b, a)));
      for (const auto& rel : m.relations()) {
        auto shifted = a + test::random_poly(ring, rng, 1, 2) * rel;
        CHECK(element_equal(wedge2(ext, r, shifted, b), wedge2(ext, r, a, b)));
      }
      auto c = test::random_poly(ring, rng);
      CHECK(element_equal(wedge2(ext, r, c * a, b), c * wedge2(ext, r, a, b)));
    }
  };
  run(q);
  run(r2);
}

TEST_CASE("a ^ a = 0 for random a", "[multilinear][property]") {
  std::mt19937 rng(59);
  auto r2 = test::gf(2);
  auto q = test::qq();
  for (int trial = 0; trial < 20; ++trial) {
    auto check = [&](const auto& ring) {
      auto m = test::random_module(ring, rng);
      const auto r = m.cover_rank();
      auto a = test::random_vector(ring, r, rng, 2, 3);
      auto ext = ext_power_presentation(m, 2);
      CHECK(element_is_zero(wedge2(ext, r, a, a)));
      CHECK(wedge2(ext, r, a, a).representative().is_zero());
    };
    if (trial % 2)
      check(r2);
    else
      check(q);
  }
}

TEST_CASE("tensor_of is bilinear over random modules", "[multilinear][property]") {
  std::mt19937 rng(61);
  auto q = test::qq();
  for (int trial = 0; trial < 10; ++trial) {
    auto m = test::random_module(q, rng);
    auto n = test::random_module(q, rng);
    auto t = tensor_presentation(m, n);
    auto a = test::random_vector(q, m.cover_rank(), rng);
    auto a2 = test::random_vector(q, m.cover_rank(), rng);
    auto b = test::random_vector(q, n.cover_rank(), rng);
    CHECK(element_equal(tensor_of(t, a + a2, b), tensor_of(t, a, b) + tensor_of(t, a2, b)));
    for (const auto& rel : m.relations()) CHECK(element_is_zero(tensor_of(t, rel, b)));
    for (const auto& rel : n.relations()) CHECK(element_is_zero(tensor_of(t, a, rel)));
  }
}

TEST_CASE("structural errors in multilinear constructors", "[multilinear]") {
  auto q = test::qq();
  auto f3 = PresentedModule<Rationals>::free(q, 3);
  auto ext = ext_power_presentation(f3, 2);
  std::vector<FreeElement<Rationals>> wrong{V(q, {"1", "0"}), V(q, {"0", "1"})};
  CHECK_THROWS_AS(wedge_of(ext, 3, std::span<const FreeElement<Rationals>>(wrong)), StructuralError);
  CHECK_THROWS_AS(wedge_of(ext, 2, std::span<const FreeElement<Rationals>>(wrong)), StructuralError);
  auto other = test::qq({"a", "b"});
  CHECK_THROWS_AS(tensor_presentation(f3, PresentedModule<Rationals>::free(other, 1)),
                  StructuralError);
}
