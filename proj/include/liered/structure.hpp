#ifndef LIERED_STRUCTURE_HPP
#define LIERED_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "liered/lie_algebra.hpp"

namespace liered {

enum class GradingCheck { NotDeclared, Invalid, ValidGrading, ValidStratification };

struct StructureReport {
  std::vector<Subspace> series;  // g^1 = g, g^{i+1} = [g, g^i], down to stabilization
  std::optional<int> step;       // nullopt when not nilpotent
  Subspace center;
  Subspace second_center;
  Subspace derived;
  bool is_metabelian = false;
  GradingCheck grading = GradingCheck::NotDeclared;
  std::optional<int> carnot_rank;  // dim g - dim [g,g]; nilpotent algebras only
};

std::vector<Subspace> descending_series(const LieAlgebra& g);
std::optional<int> nilpotency_step(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
Subspace second_center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Subspace& h);
Subspace derived_subalgebra(const LieAlgebra& g);

bool is_metabelian(const LieAlgebra& g);
bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

/// Checks [V_a, V_b] within V_{a+b} for the declared grading.
bool verify_grading(const LieAlgebra& g);  // throws PreconditionFailure if none declared
/// Additionally requires consecutive weights 1..s and [V_1, V_a] = V_{1+a}.
bool verify_stratification(const LieAlgebra& g);
int carnot_rank(const LieAlgebra& g);

/// Greedy maximal abelian ideal containing [g,g] and Z(g). Deterministic:
/// standard basis vectors from C(a,g)\a are adjoined highest index first
/// (paper presentations put the complement generators first). Requires g
/// metabelian; the result satisfies [a,a]=0, [g,a] within a, C(a,g)=a.
Subspace maximal_abelian_ideal(const LieAlgebra& g);

StructureReport analyze_structure(const LieAlgebra& g);

}  // namespace liered

#endif
