#ifndef LIERED_CATALOG_HPP
#define LIERED_CATALOG_HPP

#include <cstddef>
#include <vector>

#include "liered/lie_algebra.hpp"

namespace liered {
namespace catalog {

/// Desk-scale cap on generated dimensions.
inline constexpr std::size_t kDimensionCap = 60;

/// Heisenberg algebra h^{2n+1}: [X_i, Y_i] = Z. Basis X_1..X_n, Y_1..Y_n, Z.
LieAlgebra heisenberg(std::size_t n);

/// Cartan algebra F_{2,3} (free rank 2, step 3):
/// [X1,X2] = Y, [X1,Y] = Z1, [X2,Y] = Z2.
LieAlgebra cartan_f23();

/// Free rank-2 step-4 algebra F_{2,4}, dimension 8.
LieAlgebra free_f24();

/// Filiform algebra of dimension n (step n-1); same structure constants as
/// jet(n-2, 1, 1).
LieAlgebra filiform(std::size_t n);

/// Multi-indices I in N^n with |I| <= k, ordered by |I| descending then
/// lexicographically ascending. This is the Y-block column order of jet().
std::vector<std::vector<std::size_t>> jet_multi_indices(std::size_t k, std::size_t n);

/// Jet algebra j^k(R^n, R^m): basis X_1..X_n then Y^l_I per l = 1..m;
/// brackets [Y^l_{I+e_i}, X_i] = Y^l_I. Dimension n + m*C(n+k, k).
LieAlgebra jet(std::size_t k, std::size_t n, std::size_t m);

/// Index of Y^l_I in the jet basis (l is 1-based).
std::size_t jet_y_index(std::size_t k, std::size_t n, std::size_t m, std::size_t l,
                        const std::vector<std::size_t>& idx);

/// Euclidean algebra se(2) = so(2) x| R^2: [R,E1] = E2, [R,E2] = -E1.
LieAlgebra se2();

/// Semidirect-product data: h acting on an abelian A by the matrices rho(xi_b),
/// one per h basis vector.
struct SemidirectSpec {
  LieAlgebra h;
  std::vector<RatMatrix> action;  // each dimA x dimA
};

/// Validates that rho is a homomorphism into endomorphisms (HomomorphismFailure)
/// and returns the algebra on h + A with [(x1,a1),(x2,a2)] =
/// ([x1,x2], rho(x1)a2 - rho(x2)a1). A is the last dimA coordinates.
LieAlgebra semidirect(const SemidirectSpec& spec);

/// Infinitesimal stabilizer h_nu = {xi : rho(xi)^T nu = 0} as a subspace of h.
/// Discrete stabilizer components are invisible at this level.
Subspace h_nu_stabilizer(const SemidirectSpec& spec, const Vec& nu);

SemidirectSpec se2_spec();

}  // namespace catalog
}  // namespace liered

#endif
