#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "liered/coadjoint.hpp"
#include "liered/io.hpp"
#include "test_support.hpp"

using namespace liered;
using namespace liered::testing;

namespace {

Subspace ideal_for(const LieAlgebra& g) {
  return is_metabelian(g) ? maximal_abelian_ideal(g) : center(g);
}

Subspace default_complement(const LieAlgebra& g, const Subspace& a) {
  return Subspace::span_of(extend_to_basis(a.basis_rows(), g.dim()), g.dim());
}

}  // namespace

TEST_CASE("omega matrix") {
  LieAlgebra h3 = catalog::heisenberg(1);
  CHECK(omega_matrix(h3, zero_vec(3)) == RatMatrix(3, 3));

  Vec mu = named(h3, {{"Z", 5}});
  RatMatrix om = omega_matrix(h3, mu);
  CHECK(om.at(0, 1) == 5);  // Omega(X, Y) = c
  CHECK(om.at(1, 0) == -5);
  CHECK(rank(om) == 2);
  CHECK(orbit_dim(h3, named(h3, {{"Z", 0}})) == 0);

  LieAlgebra f23 = catalog::cartan_f23();
  Vec m = named(f23, {{"Y", 3}, {"Z1", 7}, {"Z2", 11}, {"X1", 1}});
  RatMatrix o = omega_matrix(f23, m);
  CHECK(o.at(0, 1) == 3);   // <mu,[X1,X2]> = mu_Y
  CHECK(o.at(0, 2) == 7);   // <mu,[X1,Y]> = mu_Z1
  CHECK(o.at(1, 2) == 11);  // <mu,[X2,Y]> = mu_Z2
  CHECK(rank(o) == 2);
}

TEST_CASE("isotropy subalgebra") {
  LieAlgebra h3 = catalog::heisenberg(1);
  CHECK(isotropy(h3, zero_vec(3)) == Subspace::full(3));
  CHECK(isotropy(h3, named(h3, {{"Z", 2}})) ==
        Subspace::span_of({basis_vec(h3, "Z")}, 3));

  LieAlgebra f23 = catalog::cartan_f23();
  Vec mu = named(f23, {{"Y", 3}, {"Z1", 7}, {"Z2", 11}});
  Subspace iso = isotropy(f23, mu);
  CHECK(iso.dim() == 3);
  // v = (z2/y) X1 - (z1/y) X2 + Y lies in the kernel and leaves a.
  Vec v = add(add(scale(Rat(11, 3), basis_vec(f23, "X1")),
                  scale(Rat(-7, 3), basis_vec(f23, "X2"))),
              basis_vec(f23, "Y"));
  CHECK(iso.contains(v));
  CHECK(iso.contains(basis_vec(f23, "Z1")));
  CHECK(iso.contains(basis_vec(f23, "Z2")));
  CHECK_FALSE(ideal_for(f23).contains(iso));
}

TEST_CASE("dimension condition") {
  LieAlgebra h3 = catalog::heisenberg(1);
  Subspace a = maximal_abelian_ideal(h3);
  CHECK(dimension_condition(h3, a, named(h3, {{"Z", 1}})));
  CHECK_FALSE(dimension_condition(h3, a, zero_vec(3)));  // 3 + 3 != 4

  // At mu = 0 the condition forces dim g = dim a.
  LieAlgebra ab = io::read_algebra("dim 2\nbasis e1 e2\n");
  CHECK(dimension_condition(ab, Subspace::full(2), zero_vec(2)));

  LieAlgebra f23 = catalog::cartan_f23();
  CHECK_FALSE(dimension_condition(f23, maximal_abelian_ideal(f23),
                                  named(f23, {{"Y", 3}, {"Z1", 7}, {"Z2", 11}})));
  CHECK_THROWS_AS(
      dimension_condition(h3, Subspace::span_of({basis_vec(h3, "X1")}, 3),
                          zero_vec(3)),
      PreconditionFailure);
}

TEST_CASE("maximal isotropic check") {
  LieAlgebra h3 = catalog::heisenberg(1);
  CHECK(maximal_isotropic_check(h3, maximal_abelian_ideal(h3), named(h3, {{"Z", 1}})));

  LieAlgebra se2 = catalog::se2();
  CHECK(maximal_isotropic_check(se2, maximal_abelian_ideal(se2),
                                named(se2, {{"E1", 1}, {"E2", 2}, {"R", 3}})));

  LieAlgebra f24 = catalog::free_f24();
  Subspace a24 = maximal_abelian_ideal(f24);
  std::mt19937_64 rng(41);
  int confirmed = 0;
  for (int t = 0; t < 10; ++t) {
    Vec mu = random_covector(f24.dim(), 50, rng);
    if (dimension_condition(f24, a24, mu)) {
      CHECK(maximal_isotropic_check(f24, a24, mu));
      ++confirmed;
    }
  }
  CHECK(confirmed > 0);  // generic mu satisfies the condition
}

TEST_CASE("T_mu matrix") {
  LieAlgebra h3 = catalog::heisenberg(1);
  Subspace a = maximal_abelian_ideal(h3);
  Subspace x = default_complement(h3, a);

  TMuResult t0 = t_mu_matrix(h3, a, x, zero_vec(3));
  CHECK(t0.matrix == RatMatrix(1, 1));
  CHECK_FALSE(t0.injective);

  Vec mu = named(h3, {{"Z", 4}});
  TMuResult t = t_mu_matrix(h3, a, x, mu);
  REQUIRE(t.matrix.rows() == 1);
  REQUIRE(t.matrix.cols() == 1);
  CHECK(t.matrix.at(0, 0) == -4);  // <mu, [Y, X]> = -c
  CHECK(t.injective);

  CHECK_THROWS_AS(t_mu_matrix(h3, a, a, mu), NotAComplement);
  Subspace bad_a = Subspace::span_of({basis_vec(h3, "Y1")}, 3);
  Subspace bad_x =
      Subspace::span_of({basis_vec(h3, "X1"), basis_vec(h3, "Z")}, 3);
  CHECK_THROWS_AS(t_mu_matrix(h3, bad_a, bad_x, mu), CenterNotInsideA);
}

TEST_CASE("T_mu adjoint identity on random covectors") {
  std::mt19937_64 rng(43);
  for (const auto& [name, g] : property_catalog()) {
    CAPTURE(name);
    Subspace a = ideal_for(g);
    Subspace x = default_complement(g, a);
    for (int t = 0; t < 3; ++t) {
      Vec mu = random_covector(g.dim(), 100, rng);
      TMuResult tm = t_mu_matrix(g, a, x, mu);
      for (std::size_t i = 0; i < tm.x_basis.size(); ++i)
        for (std::size_t b = 0; b < tm.y_basis.size(); ++b)
          CHECK(tm.matrix.at(i, b) == dot(g.ad_star(tm.y_basis[b], mu), tm.x_basis[i]));
    }
  }
}

TEST_CASE("psi on the Heisenberg algebra") {
  LieAlgebra h3 = catalog::heisenberg(1);
  std::vector<Vec> xs{basis_vec(h3, "X1")};
  std::vector<Vec> ys{basis_vec(h3, "Y1")};
  CHECK(psi(h3, xs, ys, named(h3, {{"Z", 3}})) == -3);  // psi = -c
  CHECK(psi(h3, xs, ys, zero_vec(3)) == 0);
}

TEST_CASE("coadjoint shift") {
  LieAlgebra h3 = catalog::heisenberg(1);
  Subspace a = maximal_abelian_ideal(h3);

  SUBCASE("identity shift") {
    Vec mu = named(h3, {{"Z", 2}, {"Y1", 3}, {"X1", 5}});
    ShiftResult r = coadjoint_shift(h3, a, mu, mu);
    REQUIRE(r.status == ShiftResult::Status::Found);
    CHECK(is_zero(r.y));
  }
  SUBCASE("h3 closed form") {
    // mu = c Z* + b Y* + al X*, mu~ same with al'; Y = ((al'-al)/c) Y1 under
    // the pinned ad* convention (exponential identity checked exactly).
    Rat c = 2, al = 5, alp = 1;
    Vec mu = named(h3, {{"Z", c}, {"Y1", 3}, {"X1", al}});
    Vec mu_tilde = named(h3, {{"Z", c}, {"Y1", 3}, {"X1", alp}});
    ShiftResult r = coadjoint_shift(h3, a, mu, mu_tilde);
    REQUIRE(r.status == ShiftResult::Status::Found);
    CHECK(r.y == scale((alp - al) / c, basis_vec(h3, "Y1")));
    CHECK(sub(mu, h3.ad_star(r.y, mu)) == mu_tilde);
  }
  SUBCASE("restriction mismatch") {
    Vec mu = named(h3, {{"Z", 2}});
    Vec mu_tilde = named(h3, {{"Z", 3}});
    CHECK(coadjoint_shift(h3, a, mu, mu_tilde).status ==
          ShiftResult::Status::RestrictionMismatch);
  }
  SUBCASE("no shift at rank-deficient T*") {
    LieAlgebra f23 = catalog::cartan_f23();
    Subspace a23 = maximal_abelian_ideal(f23);
    Vec mu = named(f23, {{"Y", 3}, {"Z1", 0}, {"Z2", 7}});
    Vec mu_tilde = add(mu, named(f23, {{"X1", 1}}));
    // range(T*_mu) = span{-z1 X1* - z2 X2*}; with z1 = 0 the difference X1*
    // is outside it.
    CHECK(coadjoint_shift(f23, a23, mu, mu_tilde).status ==
          ShiftResult::Status::NoShift);
  }
}

TEST_CASE("equivalence verdicts") {
  LieAlgebra h3 = catalog::heisenberg(1);
  EquivalenceVerdict v = equivalence_verdict(h3, maximal_abelian_ideal(h3),
                                             named(h3, {{"Z", 1}}));
  CHECK(v.equivalent);
  CHECK(v.caveats.empty());  // nilpotent: unconditional

  LieAlgebra f23 = catalog::cartan_f23();
  EquivalenceVerdict w = equivalence_verdict(
      f23, maximal_abelian_ideal(f23), named(f23, {{"Y", 3}, {"Z1", 7}, {"Z2", 11}}));
  CHECK_FALSE(w.equivalent);
  CHECK(std::count(w.reasons.begin(), w.reasons.end(), "isotropy not inside a") == 1);

  LieAlgebra se2 = catalog::se2();
  Subspace a2 = maximal_abelian_ideal(se2);
  EquivalenceVerdict zdim = equivalence_verdict(se2, a2, named(se2, {{"R", 5}}));
  CHECK_FALSE(zdim.equivalent);
  CHECK(zdim.analysis.orbit_dim == 0);  // O_mu = {mu} in the 2-body picture
  REQUIRE_FALSE(zdim.caveats.empty());
  EquivalenceVerdict gen =
      equivalence_verdict(se2, a2, named(se2, {{"R", 5}, {"E1", 1}}));
  CHECK(gen.equivalent);
  REQUIRE_FALSE(gen.caveats.empty());
}

TEST_CASE("verdict agrees with the dimension condition") {
  std::mt19937_64 rng(47);
  for (const auto& [name, g] : property_catalog()) {
    CAPTURE(name);
    Subspace a = ideal_for(g);
    for (int t = 0; t < 4; ++t) {
      Vec mu = random_covector(g.dim(), 30, rng);
      EquivalenceVerdict v = equivalence_verdict(g, a, mu);
      CHECK(v.equivalent == dimension_condition(g, a, mu));
    }
  }
}

TEST_CASE("generic scan") {
  for (std::size_t n = 1; n <= 3; ++n) {
    LieAlgebra h = catalog::heisenberg(n);
    GenericReport r = generic_scan(h, maximal_abelian_ideal(h), 5, 10000, 11);
    CHECK(r.max_orbit_dim == 2 * n);
    CHECK(r.equivalent_count == 5);  // c = 0 not hit at this seed
    CHECK(r.samples.size() == 5);
    REQUIRE(r.representative.has_value());
    CHECK(orbit_dim(h, *r.representative) == 2 * n);
  }

  LieAlgebra ab = io::read_algebra("dim 3\nbasis e1 e2 e3\n");
  GenericReport r0 = generic_scan(ab, Subspace::full(3), 5, 100, 3);
  CHECK(r0.max_orbit_dim == 0);
  CHECK(r0.equivalent_count == 5);  // a = g: always equivalent

  LieAlgebra f24 = catalog::free_f24();
  GenericReport r24 = generic_scan(f24, maximal_abelian_ideal(f24), 5, 10000, 7);
  CHECK(r24.max_orbit_dim == 4);  // 2(8 - 6), eq. for the orbit dimension
  CHECK(r24.equivalent_count == 5);

  // Determinism: same seed, same report.
  GenericReport again = generic_scan(f24, maximal_abelian_ideal(f24), 5, 10000, 7);
  CHECK(again.samples.size() == r24.samples.size());
  for (std::size_t i = 0; i < again.samples.size(); ++i)
    CHECK(again.samples[i].mu == r24.samples[i].mu);
}

TEST_CASE("momentum property suite on the catalog") {
  std::mt19937_64 rng(53);
  for (const auto& [name, g] : property_catalog()) {
    CAPTURE(name);
    Subspace a = ideal_for(g);
    Subspace z = center(g);
    for (int t = 0; t < 3; ++t) {
      Vec mu = random_covector(g.dim(), 50, rng);
      CHECK(orbit_dim(g, mu) % 2 == 0);
      CHECK(isotropy(g, mu).contains(z));
      CHECK(maximal_isotropic_check(g, a, mu) == dimension_condition(g, a, mu));
      for (const Vec& u : a.basis_rows()) {
        // a is Omega_mu-isotropic and the shift is 2-step nilpotent on a.
        for (const Vec& v : a.basis_rows()) CHECK(dot(mu, g.bracket(u, v)) == 0);
        CHECK(is_zero(g.ad_star(u, g.ad_star(u, mu))));
      }
    }
  }
}
