#ifndef LIERED_MATRIX_HPP
#define LIERED_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liered/errors.hpp"

namespace liered {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (canonical form is maintained by the backend).
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Coordinate vector (or covector) in a fixed basis.
using Vec = std::vector<Rat>;

std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q" with optional leading sign. Throws Error on garbage.
Rat parse_rational(const std::string& text);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
Rat dot(const Vec& a, const Vec& b);

/// Dense exact rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  std::vector<Vec> row_list() const;
  RatMatrix transpose() const;

  /// Matrix-vector product (v as a column).
  Vec apply(const Vec& v) const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row-echelon form together with its pivot columns.
/// Pivoting is deterministic: first nonzero column, first nonzero row.
struct Rref {
  RatMatrix mat;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of the right null space {v : M v = 0}. One vector per free column,
/// free columns in increasing index, free variable set to 1.
std::vector<Vec> kernel_basis(const RatMatrix& m);

/// Some exact solution of M x = b (free variables set to 0), or nothing when
/// b is outside the column space.
std::optional<Vec> solve(const RatMatrix& m, const Vec& b);

Rat determinant(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);  // throws SingularMatrix

/// Standard basis vectors e_k, in increasing k, completing the independent
/// set S to a basis of the ambient space. Throws DependentInput.
std::vector<Vec> extend_to_basis(const std::vector<Vec>& s, std::size_t ambient_dim);

/// Indices k of the standard vectors chosen by extend_to_basis.
std::vector<std::size_t> complement_indices(const std::vector<Vec>& s,
                                            std::size_t ambient_dim);

}  // namespace liered

#endif
