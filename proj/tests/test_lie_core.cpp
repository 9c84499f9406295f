#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liered/structure.hpp"
#include "test_support.hpp"

using namespace liered;
using namespace liered::testing;

namespace {

Vec random_vec(const LieAlgebra& g, std::mt19937_64& rng) {
  Vec v(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    v[i] = Rat(static_cast<long>(rng() % 9) - 4);
  return v;
}

/// Independent brute-force Jacobi defect used as the validator oracle.
Vec jacobi_defect(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = g.dim();
  Vec d = g.bracket(unit_vec(n, i), g.bracket(unit_vec(n, j), unit_vec(n, k)));
  d = add(d, g.bracket(unit_vec(n, j), g.bracket(unit_vec(n, k), unit_vec(n, i))));
  d = add(d, g.bracket(unit_vec(n, k), g.bracket(unit_vec(n, i), unit_vec(n, j))));
  return d;
}

}  // namespace

TEST_CASE("heisenberg bracket relations") {
  LieAlgebra h3 = catalog::heisenberg(1);
  CHECK(h3.bracket(basis_vec(h3, "X1"), basis_vec(h3, "Y1")) == basis_vec(h3, "Z"));
  CHECK(h3.bracket(basis_vec(h3, "Y1"), basis_vec(h3, "X1")) ==
        scale(Rat(-1), basis_vec(h3, "Z")));
}

TEST_CASE("cartan bracket relations") {
  LieAlgebra g = catalog::cartan_f23();
  CHECK(g.bracket(basis_vec(g, "X1"), basis_vec(g, "X2")) == basis_vec(g, "Y"));
  CHECK(g.bracket(basis_vec(g, "X1"), basis_vec(g, "Y")) == basis_vec(g, "Z1"));
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  std::mt19937_64 rng(5);
  for (const auto& [name, g] : property_catalog()) {
    CAPTURE(name);
    for (int t = 0; t < 3; ++t) {
      Vec v = random_vec(g, rng), w = random_vec(g, rng);
      CHECK(is_zero(g.bracket(v, v)));
      CHECK(g.bracket(v, w) == scale(Rat(-1), g.bracket(w, v)));
      Vec u = random_vec(g, rng);
      CHECK(g.bracket(add(v, scale(Rat(3), u)), w) ==
            add(g.bracket(v, w), scale(Rat(3), g.bracket(u, w))));
    }
  }
}

TEST_CASE("ad_star pairing") {
  LieAlgebra h3 = catalog::heisenberg(1);
  Vec mu = named(h3, {{"Z", 1}});

  SUBCASE("central elements act trivially") {
    for (const auto& [name, g] : property_catalog()) {
      CAPTURE(name);
      Vec any = named(g, {{g.names()[0], 2}});
      for (const Vec& z : center(g).basis_rows())
        CHECK(is_zero(g.ad_star(z, any)));
    }
  }
  SUBCASE("h3 pairing values") {
    Vec a = h3.ad_star(basis_vec(h3, "X1"), mu);
    CHECK(dot(a, basis_vec(h3, "Y1")) == 1);  // <mu,[X,Y]> = <Z*,Z>
    CHECK(dot(a, basis_vec(h3, "X1")) == 0);
    CHECK(dot(a, basis_vec(h3, "Z")) == 0);
  }
  SUBCASE("zero covector") {
    CHECK(is_zero(h3.ad_star(basis_vec(h3, "X1"), zero_vec(3))));
  }
  SUBCASE("defining identity on random data") {
    std::mt19937_64 rng(17);
    for (const auto& [name, g] : property_catalog()) {
      CAPTURE(name);
      Vec w = random_vec(g, rng), v = random_vec(g, rng), mu2 = random_vec(g, rng);
      CHECK(dot(g.ad_star(w, mu2), v) == dot(mu2, g.bracket(w, v)));
    }
  }
}

TEST_CASE("validation accepts catalog algebras and rejects bad tables") {
  for (const auto& [name, g] : property_catalog()) {
    CAPTURE(name);
    CHECK_FALSE(g.validate().has_value());
  }
  // [e1,e2]=e1, [e2,e3]=e2, [e1,e3]=0 violates Jacobi on (e1,e2,e3).
  std::map<std::pair<std::size_t, std::size_t>, Vec> lower;
  lower[{0, 1}] = unit_vec(3, 0);
  lower[{1, 2}] = unit_vec(3, 1);
  CHECK_THROWS_AS(LieAlgebra::from_brackets({"e1", "e2", "e3"}, lower),
                  InvalidAlgebra);
}

TEST_CASE("validator verdict agrees with a brute-force Jacobi oracle") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    // Random sparse antisymmetric table on 4 elements, usually non-Jacobi.
    std::map<std::pair<std::size_t, std::size_t>, Vec> lower;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (rng() % 3 == 0) {
          Vec v = zero_vec(4);
          v[rng() % 4] = Rat(static_cast<long>(rng() % 5) - 2);
          lower[{i, j}] = v;
        }
    try {
      LieAlgebra g = LieAlgebra::from_brackets({"a", "b", "c", "d"}, lower);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          for (std::size_t k = j + 1; k < 4; ++k)
            CHECK(is_zero(jacobi_defect(g, i, j, k)));
    } catch (const InvalidAlgebra& e) {
      CHECK(e.kind == InvalidAlgebra::Kind::Jacobi);
    }
  }
}

TEST_CASE("quotient by the zero ideal is an isomorphic copy") {
  LieAlgebra h3 = catalog::heisenberg(1);
  QuotientResult q = quotient(h3, Subspace::zero(3));
  CHECK(q.algebra.dim() == 3);
  CHECK(q.projection == RatMatrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(q.algebra.basis_bracket(i, j) == h3.basis_bracket(i, j));
}

TEST_CASE("h3 quotient by the center is abelian") {
  LieAlgebra h3 = catalog::heisenberg(1);
  QuotientResult q = quotient(h3, center(h3));
  CHECK(q.algebra.dim() == 2);
  CHECK(derived_subalgebra(q.algebra).dim() == 0);
}

TEST_CASE("F23 quotient by <Z1,Z2> is a 3-dim Heisenberg") {
  LieAlgebra g = catalog::cartan_f23();
  Subspace z = Subspace::span_of({basis_vec(g, "Z1"), basis_vec(g, "Z2")}, 5);
  QuotientResult q = quotient(g, z);
  REQUIRE(q.algebra.dim() == 3);
  // Expected table: [X1,X2] = Y and nothing else.
  CHECK(q.algebra.basis_bracket(0, 1) == unit_vec(3, 2));
  CHECK(is_zero(q.algebra.basis_bracket(0, 2)));
  CHECK(is_zero(q.algebra.basis_bracket(1, 2)));
  CHECK(nilpotency_step(q.algebra) == 2);
}

TEST_CASE("quotient rejects non-ideals") {
  LieAlgebra h3 = catalog::heisenberg(1);
  Subspace x = Subspace::span_of({basis_vec(h3, "X1")}, 3);
  CHECK_THROWS_AS(quotient(h3, x), NotAnIdeal);
}

TEST_CASE("quotient projection is a homomorphism on random vectors") {
  std::mt19937_64 rng(31);
  LieAlgebra g = catalog::free_f24();
  QuotientResult q = quotient(g, center(g));
  for (int t = 0; t < 10; ++t) {
    Vec v = random_vec(g, rng), w = random_vec(g, rng);
    CHECK(q.projection.apply(g.bracket(v, w)) ==
          q.algebra.bracket(q.projection.apply(v), q.projection.apply(w)));
  }
  // The section is a right inverse of the projection.
  CHECK(q.projection * q.section == RatMatrix::identity(q.algebra.dim()));
}

TEST_CASE("dimension mismatches are rejected") {
  LieAlgebra h3 = catalog::heisenberg(1);
  CHECK_THROWS_AS(h3.bracket(zero_vec(2), zero_vec(3)), DimensionError);
  CHECK_THROWS_AS(h3.ad_star(zero_vec(3), zero_vec(4)), DimensionError);
}
