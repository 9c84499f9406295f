#include "liered/subspace.hpp"

namespace liered {

Subspace Subspace::span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  Rref r = rref(RatMatrix::from_rows(vectors, ambient_dim));
  std::size_t k = r.pivot_cols.size();
  RatMatrix basis(k, ambient_dim);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) basis.at(i, j) = r.mat.at(i, j);
  return Subspace(std::move(basis), std::move(r.pivot_cols), ambient_dim);
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return span_of({}, ambient_dim);
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span_of(RatMatrix::identity(ambient_dim).row_list(), ambient_dim);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace membership: size mismatch");
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rat& c = w[pivots_[i]];
    if (c == 0) continue;
    Rat f = c;  // pivot entries are 1
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) w[j] -= f * basis_.at(i, j);
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("subspace sum: ambient mismatch");
  std::vector<Vec> rows = basis_rows();
  for (const Vec& v : other.basis_rows()) rows.push_back(v);
  return span_of(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw DimensionError("subspace intersect: ambient mismatch");
  const std::size_t n = ambient_;
  const std::size_t ku = dim(), kw = other.dim();
  RatMatrix block(ku + kw, 2 * n);
  for (std::size_t i = 0; i < ku; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block.at(i, j) = basis_.at(i, j);
      block.at(i, n + j) = basis_.at(i, j);
    }
  for (std::size_t i = 0; i < kw; ++i)
    for (std::size_t j = 0; j < n; ++j) block.at(ku + i, j) = other.basis_.at(i, j);
  Rref r = rref(block);
  std::vector<Vec> meet;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (r.mat.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    Vec right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = r.mat.at(i, n + j);
    if (!is_zero(right)) meet.push_back(std::move(right));
  }
  return span_of(meet, n);
}

RatMatrix Subspace::annihilator_matrix() const {
  std::vector<Vec> rows = kernel_basis(basis_);
  return RatMatrix::from_rows(rows, ambient_);
}

std::vector<Vec> extend_within(const Subspace& inner, const Subspace& outer) {
  if (!outer.contains(inner))
    throw PreconditionFailure("extend_within: inner subspace not inside outer");
  std::vector<Vec> chosen = inner.basis_rows();
  std::size_t have = chosen.size();
  std::vector<Vec> added;
  for (const Vec& row : outer.basis_rows()) {
    chosen.push_back(row);
    if (rank(RatMatrix::from_rows(chosen, outer.ambient_dim())) == have + 1) {
      ++have;
      added.push_back(row);
    } else {
      chosen.pop_back();
    }
    if (have == outer.dim()) break;
  }
  return added;
}

}  // namespace liered
