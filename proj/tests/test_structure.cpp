#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liered/io.hpp"
#include "liered/structure.hpp"
#include "test_support.hpp"

using namespace liered;
using namespace liered::testing;

namespace {

LieAlgebra so3_like() {
  // [X,Y]=Z, [Y,Z]=X, [Z,X]=Y: valid Jacobi, not nilpotent, not metabelian.
  return io::read_algebra(
      "dim 3\nbasis X Y Z\n"
      "bracket X Y = 1 Z\nbracket Y Z = 1 X\nbracket X Z = -1 Y\n");
}

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebra::from_brackets(std::move(names), {});
}

std::vector<std::size_t> series_dims(const LieAlgebra& g) {
  std::vector<std::size_t> dims;
  for (const Subspace& s : descending_series(g)) dims.push_back(s.dim());
  return dims;
}

}  // namespace

TEST_CASE("descending series") {
  CHECK(series_dims(abelian(3)) == std::vector<std::size_t>{3, 0});
  CHECK(series_dims(catalog::heisenberg(1)) == std::vector<std::size_t>{3, 1, 0});
  CHECK(nilpotency_step(catalog::heisenberg(1)) == 2);
  CHECK(series_dims(catalog::cartan_f23()) == std::vector<std::size_t>{5, 3, 2, 0});
  CHECK(nilpotency_step(catalog::cartan_f23()) == 3);
  CHECK(nilpotency_step(catalog::free_f24()) == 4);
  CHECK_FALSE(nilpotency_step(so3_like()).has_value());
  CHECK_FALSE(nilpotency_step(catalog::se2()).has_value());
}

TEST_CASE("centers and centralizers") {
  LieAlgebra h3 = catalog::heisenberg(1);
  CHECK(center(h3) == Subspace::span_of({basis_vec(h3, "Z")}, 3));
  CHECK(second_center(h3) == Subspace::full(3));

  LieAlgebra f24 = catalog::free_f24();
  CHECK(center(f24) == Subspace::span_of({basis_vec(f24, "Z1"), basis_vec(f24, "Z2"),
                                          basis_vec(f24, "Z3")},
                                         8));
  for (const auto& [name, g] : property_catalog()) {
    CAPTURE(name);
    CHECK(centralizer(g, Subspace::full(g.dim())) == center(g));
    CHECK(centralizer(g, Subspace::zero(g.dim())) == Subspace::full(g.dim()));
    CHECK(second_center(g).contains(center(g)));
  }
}

TEST_CASE("metabelian detection") {
  CHECK(is_metabelian(catalog::heisenberg(2)));  // step 2: [g,g] central
  CHECK(is_metabelian(catalog::free_f24()));
  CHECK(is_metabelian(catalog::cartan_f23()));
  CHECK(is_metabelian(catalog::se2()));
  CHECK_FALSE(is_metabelian(so3_like()));
}

TEST_CASE("grading and stratification checks") {
  LieAlgebra h3 = catalog::heisenberg(1);
  CHECK(verify_grading(h3));
  CHECK(verify_stratification(h3));
  CHECK(carnot_rank(h3) == 2);

  CHECK(carnot_rank(catalog::cartan_f23()) == 2);
  LieAlgebra j11 = catalog::jet(1, 1, 1);
  CHECK(j11.dim() == 3);
  CHECK(carnot_rank(j11) == 2);
  CHECK(verify_stratification(catalog::free_f24()));
  CHECK(verify_stratification(catalog::jet(2, 2, 2)));
  CHECK_THROWS_AS(verify_grading(catalog::se2()), PreconditionFailure);

  // Valid grading that is not a stratification: [V1,V1] = 0 != V2.
  LieAlgebra skew = io::read_algebra(
      "dim 3\nbasis X Y Z\nbracket X Y = 1 Z\n"
      "grading 1: X\ngrading 2: Y\ngrading 3: Z\n");
  CHECK(verify_grading(skew));
  CHECK_FALSE(verify_stratification(skew));
}

TEST_CASE("stratified derived algebra is the sum of higher layers") {
  for (const auto& [name, g] : property_catalog()) {
    if (!g.has_grading() || !verify_stratification(g)) continue;
    CAPTURE(name);
    Subspace expected = Subspace::zero(g.dim());
    for (const GradingLayer& layer : g.grading())
      if (layer.weight >= 2) expected = expected.sum(layer.space);
    CHECK(derived_subalgebra(g) == expected);
  }
}

TEST_CASE("maximal abelian ideal on the catalog") {
  LieAlgebra h3 = catalog::heisenberg(1);
  CHECK(maximal_abelian_ideal(h3) ==
        Subspace::span_of({basis_vec(h3, "Z"), basis_vec(h3, "Y1")}, 3));
  for (std::size_t n = 2; n <= 4; ++n) {
    LieAlgebra h = catalog::heisenberg(n);
    std::vector<Vec> rows{basis_vec(h, "Z")};
    for (std::size_t i = 1; i <= n; ++i)
      rows.push_back(basis_vec(h, "Y" + std::to_string(i)));
    CHECK(maximal_abelian_ideal(h) == Subspace::span_of(rows, h.dim()));
  }

  LieAlgebra a4 = abelian(4);
  CHECK(maximal_abelian_ideal(a4) == Subspace::full(4));

  LieAlgebra f24 = catalog::free_f24();
  std::vector<Vec> rows;
  for (const char* name : {"Z1", "Z2", "Z3", "Y1", "Y2", "Y3"})
    rows.push_back(basis_vec(f24, name));
  CHECK(maximal_abelian_ideal(f24) == Subspace::span_of(rows, 8));

  CHECK_THROWS_AS(maximal_abelian_ideal(so3_like()),
                  MaximalAbelianIdealNotSupported);
}

TEST_CASE("maximal abelian ideal certificate conditions") {
  for (const auto& [name, g] : property_catalog()) {
    CAPTURE(name);
    Subspace a = maximal_abelian_ideal(g);
    CHECK(is_abelian_subspace(g, a));
    CHECK(is_ideal(g, a));
    CHECK(centralizer(g, a) == a);
    CHECK(a.contains(center(g)));
    CHECK(a.contains(derived_subalgebra(g)));
  }
}

TEST_CASE("structure report bundles the invariants") {
  StructureReport r = analyze_structure(catalog::cartan_f23());
  CHECK(r.step == 3);
  CHECK(r.center.dim() == 2);
  CHECK(r.derived.dim() == 3);
  CHECK(r.is_metabelian);
  CHECK(r.grading == GradingCheck::ValidStratification);
  CHECK(r.carnot_rank == 2);
  for (std::size_t i = 0; i + 1 < r.series.size(); ++i)
    CHECK(r.series[i].contains(r.series[i + 1]));

  StructureReport s = analyze_structure(so3_like());
  CHECK_FALSE(s.step.has_value());
  CHECK_FALSE(s.carnot_rank.has_value());
  CHECK(s.grading == GradingCheck::NotDeclared);
}
