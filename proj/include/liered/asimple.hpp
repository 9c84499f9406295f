#ifndef LIERED_ASIMPLE_HPP
#define LIERED_ASIMPLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liered/coadjoint.hpp"

namespace liered {

/// Witness data for A-simplicity: a complement basis X_i of a and independent
/// Y_i in a (independent modulo the center) with 0 != [X_i, Y_i] in Z(g).
struct ASimpleCertificate {
  Subspace a;
  std::vector<Vec> x_basis;
  std::vector<Vec> y_witnesses;
  std::vector<Vec> brackets;  // [X_i, Y_i]
};

struct CertificateCheck {
  bool ok = true;
  std::size_t index = 0;  // offending witness when !ok (when applicable)
  std::string reason;
};

/// Checks every certificate invariant exactly. The Y independence is taken
/// modulo Z(g): the literal reading would certify algebras the theory
/// excludes (the dim X <= dim a/Z(g) count needs classes, not vectors).
CertificateCheck verify_certificate(const LieAlgebra& g, const ASimpleCertificate& cert);

/// dim g + dim Z(g) <= 2 dim a. False refutes A-simplicity for this a.
bool necessary_condition(const LieAlgebra& g, const Subspace& a);

struct KirillovPair {
  std::vector<Vec> x_basis;  // dual basis of W with [X_i, Y_j] = delta_ij Z
  RatMatrix pairing;         // B(X_i, Y_j) after dualization (identity)
};
/// Generalized Kirillov pairing: requires dim Z(g) = 1 spanned by z,
/// Z_2(g) = D + Z(g) and g = W + C(Z_2(g), g); inverts the nondegenerate
/// pairing [X, Y] = B(X, Y) z.
KirillovPair kirillov_pair(const LieAlgebra& g, const Vec& z, const Subspace& d,
                           const Subspace& w);

struct ASimpleVerdict {
  enum class Status { ProvenYes, ProvenNo, Unknown };
  Status status = Status::Unknown;
  std::optional<ASimpleCertificate> certificate;  // always set for ProvenYes
  std::string reason;
};

/// Constructive certification for stratified metabelian algebras with a
/// one-dimensional center. Throws PreconditionFailure naming any violated
/// hypothesis; under the stated hypotheses it always returns ProvenYes.
ASimpleVerdict certify_onedim_center(const LieAlgebra& g, const Subspace& a);

/// Bounded search: deterministic complement first, then seeded integer
/// perturbations. PROVEN_NO only from the necessary condition; otherwise
/// ProvenYes with a verified certificate or Unknown.
ASimpleVerdict heuristic_search(const LieAlgebra& g, const Subspace& a,
                                std::uint64_t seed, std::size_t budget = 64);

/// Basis {Z0, Z_I, Y_j, Y_a, X_i} with
/// [X_i, Y_j] = delta_ij Z0 + sum_I C^I_ij Z_I + sum_a C^a_ij Y_a.
struct CanonicalBasis {
  Vec z0;
  std::vector<Vec> z_i;
  std::vector<Vec> y_j;
  std::vector<Vec> y_a;
  std::vector<Vec> x_i;
  // corrections[i][j] = coefficients over (Z_I..., Y_a...) of [X_i,Y_j] - delta_ij Z0
  std::vector<std::vector<Vec>> corrections;

  std::size_t n() const { return x_i.size(); }
  /// Rows in the order Z0, Z_I, Y_j, Y_a, X_i.
  RatMatrix full_matrix(std::size_t ambient) const;
  /// Ambient coordinates of the dual covector of the k-th canonical vector.
  static std::vector<Vec> dual_basis(const RatMatrix& full);
};

/// Inductive central-quotient construction of the canonical basis from a
/// verified certificate. Every postcondition is checked exactly; violations
/// raise ConstructionFailure.
CanonicalBasis canonical_basis(const LieAlgebra& g, const ASimpleCertificate& cert);

/// psi(mu) = det M(mu) in the canonical basis.
Rat psi(const LieAlgebra& g, const CanonicalBasis& basis, const Vec& mu);

/// Explicit certificate for the jet algebra j^k(R^n, R^m):
/// witnesses Y_j = Y^1_{e_j} with brackets +-Y^1_0.
ASimpleCertificate jet_certificate(std::size_t k, std::size_t n, std::size_t m);

}  // namespace liered

#endif
