#ifndef LIERED_LIE_ALGEBRA_HPP
#define LIERED_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liered/subspace.hpp"

namespace liered {

/// Declared grading layer: weight w carries the subspace V_w.
struct GradingLayer {
  int weight;
  Subspace space;
};

struct ValidationIssue {
  enum class Kind { Antisymmetry, Jacobi, Grading };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string message;
};

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// named basis: [e_i, e_j] = sum_k c[i][j][k] e_k. Immutable after
/// construction; construction validates antisymmetry, the Jacobi identity and
/// any declared grading.
class LieAlgebra {
 public:
  /// Brackets are given for pairs i < j only; antisymmetry fills the rest.
  static LieAlgebra from_brackets(std::vector<std::string> names,
                                  const std::map<std::pair<std::size_t, std::size_t>, Vec>& lower,
                                  std::vector<GradingLayer> grading = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> name_index(const std::string& name) const;

  /// Structure-constant vector of [e_i, e_j].
  const Vec& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }

  Vec bracket(const Vec& v, const Vec& w) const;
  /// Matrix of ad(v): w -> [v, w].
  RatMatrix ad(const Vec& v) const;
  /// Coadjoint pairing convention: <ad_star(w, mu), v> = <mu, [w, v]>.
  Vec ad_star(const Vec& w, const Vec& mu) const;

  bool has_grading() const { return !grading_.empty(); }
  const std::vector<GradingLayer>& grading() const { return grading_; }

  /// Re-runs the construction-time checks on the stored table.
  std::optional<ValidationIssue> validate() const;

 private:
  LieAlgebra() = default;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Vec> table_;  // dense dim x dim of coordinate vectors
  std::vector<GradingLayer> grading_;
};

struct QuotientResult {
  LieAlgebra algebra;
  RatMatrix projection;               // dim(quotient) x dim(g)
  RatMatrix section;                  // dim(g) x dim(quotient), right inverse
  std::vector<std::size_t> complement;  // standard-vector indices kept
};

/// Quotient by an ideal, with the complement basis chosen by extend_to_basis.
/// Validates closure (NotAnIdeal) and that the projection is a homomorphism.
QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal);

}  // namespace liered

#endif
