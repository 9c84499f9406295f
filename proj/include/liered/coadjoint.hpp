#ifndef LIERED_COADJOINT_HPP
#define LIERED_COADJOINT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liered/structure.hpp"

namespace liered {

/// Antisymmetric form Omega_mu(W1, W2) = <mu, [W1, W2]> on the basis.
RatMatrix omega_matrix(const LieAlgebra& g, const Vec& mu);

/// g_mu = ker Omega_mu; always contains the center.
Subspace isotropy(const LieAlgebra& g, const Vec& mu);

std::size_t orbit_dim(const LieAlgebra& g, const Vec& mu);

/// dim g + dim g_mu = 2 dim a. Requires a to be an abelian ideal.
bool dimension_condition(const LieAlgebra& g, const Subspace& a, const Vec& mu);

/// Checks Omega_mu vanishes on a x a and dim a = (dim g + dim g_mu)/2.
bool maximal_isotropic_check(const LieAlgebra& g, const Subspace& a, const Vec& mu);

/// Matrix of T_mu: X -> (a/Z(g))*, rows indexed by X's basis, columns by the
/// complement of Z(g) inside a; entry(i, b) = <mu, [Y_b, X_i]>.
struct TMuResult {
  RatMatrix matrix;
  std::vector<Vec> x_basis;
  std::vector<Vec> y_basis;  // complement of Z(g) inside a
  bool injective = false;
};
TMuResult t_mu_matrix(const LieAlgebra& g, const Subspace& a, const Subspace& x,
                      const Vec& mu);

/// M(mu)_{ij} = <ad*_{-X_i} mu, Y_j> = <mu, [Y_j, X_i]> for given vector lists.
RatMatrix m_matrix(const LieAlgebra& g, const std::vector<Vec>& x_basis,
                   const std::vector<Vec>& y_basis, const Vec& mu);
Rat psi(const LieAlgebra& g, const std::vector<Vec>& x_basis,
        const std::vector<Vec>& y_basis, const Vec& mu);

struct ShiftResult {
  enum class Status { Found, NoShift, RestrictionMismatch };
  Status status;
  Vec y;  // element of a with mu - ad*_Y mu = mu_tilde (valid when Found)
};
/// Solves the coadjoint shift mu = Ad*_{exp(Y)^{-1}} mu_tilde inside a. The
/// finite exponential sum identity is verified exactly before returning.
ShiftResult coadjoint_shift(const LieAlgebra& g, const Subspace& a, const Vec& mu,
                            const Vec& mu_tilde);

struct MomentumAnalysis {
  Vec mu;
  RatMatrix omega;
  Subspace isotropy;
  std::size_t orbit_dim = 0;
  bool dim_condition_holds = false;
  bool isotropy_in_a = false;
  RatMatrix t_matrix;
  bool t_injective = false;
  std::optional<Rat> psi;  // filled only when a canonical basis is supplied
};
MomentumAnalysis analyze_momentum(const LieAlgebra& g, const Subspace& a, const Vec& mu);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::vector<std::string> reasons;  // failed hypotheses when not equivalent
  std::vector<std::string> caveats;
  MomentumAnalysis analysis;
};
/// EQUIVALENT iff g_mu within a and T_mu injective. Requires a to be an
/// abelian ideal containing Z(g). Non-nilpotent algebras get a caveat.
EquivalenceVerdict equivalence_verdict(const LieAlgebra& g, const Subspace& a,
                                       const Vec& mu);

struct GenericTrial {
  Vec mu;
  std::size_t orbit_dim;
  bool equivalent;
};
struct GenericReport {
  std::size_t trials = 0;
  long bound = 0;
  std::uint64_t seed = 0;
  std::size_t max_orbit_dim = 0;
  std::size_t equivalent_count = 0;
  std::optional<Vec> representative;  // first mu attaining max_orbit_dim
  std::vector<GenericTrial> samples;
  std::string label = "generic (probabilistic)";
};
/// Samples mu with i.i.d. integer coordinates in [-bound, bound] from a
/// deterministic seeded generator.
GenericReport generic_scan(const LieAlgebra& g, const Subspace& a, std::size_t trials,
                           long bound, std::uint64_t seed);

/// Deterministic integer covector sampler shared by scans and tests.
Vec random_covector(std::size_t dim, long bound, std::mt19937_64& rng);

}  // namespace liered

#endif
