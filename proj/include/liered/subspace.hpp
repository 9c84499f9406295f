#ifndef LIERED_SUBSPACE_HPP
#define LIERED_SUBSPACE_HPP

#include <vector>

#include "liered/matrix.hpp"

namespace liered {

/// Linear subspace of a fixed ambient coordinate space. The basis is kept in
/// reduced row-echelon form, so subspaces are equal iff their matrices are.
class Subspace {
 public:
  static Subspace span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  std::vector<Vec> basis_rows() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const = default;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;  // Zassenhaus

  /// Matrix R with ker R = this subspace (rows span the annihilator).
  RatMatrix annihilator_matrix() const;

 private:
  Subspace(RatMatrix basis, std::vector<std::size_t> pivots, std::size_t ambient)
      : basis_(std::move(basis)), pivots_(std::move(pivots)), ambient_(ambient) {}
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

/// Rows of `outer`'s canonical basis, adjoined greedily in order, that
/// complete a basis of `inner` to one of `outer`. Requires inner within outer.
std::vector<Vec> extend_within(const Subspace& inner, const Subspace& outer);

}  // namespace liered

#endif
