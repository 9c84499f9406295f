#include "liered/matrix.hpp"

#include <algorithm>

namespace liered {

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw Error("bad rational '" + text + "'");
  }
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch in add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch in sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch in dot");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec RatMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Vec> RatMatrix::row_list() const {
  std::vector<Vec> rows;
  rows.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
  return rows;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec RatMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product size mismatch");
  RatMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs.at(k, j) != 0) p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

Rref rref(const RatMatrix& m) {
  Rref out{m, {}};
  RatMatrix& a = out.mat;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    Rat inv = Rat(1) / a.at(r, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<Vec> kernel_basis(const RatMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
      v[r.pivot_cols[p]] = -r.mat.at(p, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const RatMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("rhs size mismatch in solve");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  for (std::size_t c : r.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
    x[r.pivot_cols[p]] = r.mat.at(p, m.cols());
  return x;
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a.at(piv, k) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != k) {
      a.swap_rows(k, piv);
      det = -det;
    }
    det *= a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) / a.at(k, k);
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.pivot_cols.size() < n || r.pivot_cols[n - 1] != n - 1)
    throw SingularMatrix("matrix not invertible");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

std::vector<std::size_t> complement_indices(const std::vector<Vec>& s,
                                            std::size_t ambient_dim) {
  Rref r = rref(RatMatrix::from_rows(s, ambient_dim));
  if (r.pivot_cols.size() != s.size())
    throw DependentInput("extend_to_basis: input vectors are dependent");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ambient_dim; ++k)
    if (!is_pivot[k]) out.push_back(k);
  return out;
}

std::vector<Vec> extend_to_basis(const std::vector<Vec>& s, std::size_t ambient_dim) {
  std::vector<Vec> out;
  for (std::size_t k : complement_indices(s, ambient_dim))
    out.push_back(unit_vec(ambient_dim, k));
  return out;
}

}  // namespace liered
