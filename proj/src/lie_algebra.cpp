#include "liered/lie_algebra.hpp"

#include <algorithm>

namespace liered {

namespace {

std::optional<ValidationIssue> check_grading(const LieAlgebra& g,
                                             const std::vector<GradingLayer>& layers) {
  const std::size_t n = g.dim();
  std::vector<Vec> all;
  std::size_t total = 0;
  for (const auto& layer : layers) {
    if (layer.weight <= 0)
      return ValidationIssue{ValidationIssue::Kind::Grading, 0, 0, 0,
                             "grading weights must be positive"};
    if (layer.space.dim() == 0)
      return ValidationIssue{ValidationIssue::Kind::Grading, 0, 0, 0,
                             "empty grading layer"};
    total += layer.space.dim();
    for (const Vec& r : layer.space.basis_rows()) all.push_back(r);
  }
  if (total != n || rank(RatMatrix::from_rows(all, n)) != n)
    return ValidationIssue{ValidationIssue::Kind::Grading, 0, 0, 0,
                           "layers do not form a direct-sum decomposition"};
  auto layer_at = [&](int w) -> const Subspace* {
    for (const auto& layer : layers)
      if (layer.weight == w) return &layer.space;
    return nullptr;
  };
  for (const auto& la : layers)
    for (const auto& lb : layers) {
      const Subspace* target = layer_at(la.weight + lb.weight);
      for (const Vec& u : la.space.basis_rows())
        for (const Vec& v : lb.space.basis_rows()) {
          Vec b = g.bracket(u, v);
          bool ok = target ? target->contains(b) : is_zero(b);
          if (!ok)
            return ValidationIssue{ValidationIssue::Kind::Grading, 0, 0, 0,
                                   "[V_" + std::to_string(la.weight) + ",V_" +
                                       std::to_string(lb.weight) +
                                       "] escapes V_" +
                                       std::to_string(la.weight + lb.weight)};
        }
    }
  return std::nullopt;
}

}  // namespace

LieAlgebra LieAlgebra::from_brackets(
    std::vector<std::string> names,
    const std::map<std::pair<std::size_t, std::size_t>, Vec>& lower,
    std::vector<GradingLayer> grading) {
  LieAlgebra g;
  g.dim_ = names.size();
  g.names_ = std::move(names);
  g.table_.assign(g.dim_ * g.dim_, zero_vec(g.dim_));
  for (const auto& [key, value] : lower) {
    auto [i, j] = key;
    if (i >= j || j >= g.dim_)
      throw DimensionError("bracket table requires indices i < j < dim");
    if (value.size() != g.dim_) throw DimensionError("bracket value has wrong size");
    g.table_[i * g.dim_ + j] = value;
    Vec neg = scale(Rat(-1), value);
    g.table_[j * g.dim_ + i] = std::move(neg);
  }
  g.grading_ = std::move(grading);
  if (auto issue = g.validate()) {
    InvalidAlgebra::Kind kind =
        issue->kind == ValidationIssue::Kind::Jacobi ? InvalidAlgebra::Kind::Jacobi
        : issue->kind == ValidationIssue::Kind::Grading
            ? InvalidAlgebra::Kind::Grading
            : InvalidAlgebra::Kind::Antisymmetry;
    throw InvalidAlgebra(kind, issue->message, issue->i, issue->j, issue->k);
  }
  return g;
}

std::optional<std::size_t> LieAlgebra::name_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Vec LieAlgebra::bracket(const Vec& v, const Vec& w) const {
  if (v.size() != dim_ || w.size() != dim_)
    throw DimensionError("bracket: vector size mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (w[j] == 0 || i == j) continue;
      const Vec& c = basis_bracket(i, j);
      Rat f = v[i] * w[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (c[k] != 0) out[k] += f * c[k];
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad(const Vec& v) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(v, unit_vec(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Vec LieAlgebra::ad_star(const Vec& w, const Vec& mu) const {
  if (mu.size() != dim_) throw DimensionError("ad_star: covector size mismatch");
  Vec out(dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    out[j] = dot(mu, bracket(w, unit_vec(dim_, j)));
  return out;
}

std::optional<ValidationIssue> LieAlgebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!is_zero(basis_bracket(i, i)))
      return ValidationIssue{ValidationIssue::Kind::Antisymmetry, i, i, 0,
                             "[e_i, e_i] != 0"};
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (basis_bracket(i, j) != scale(Rat(-1), basis_bracket(j, i)))
        return ValidationIssue{ValidationIssue::Kind::Antisymmetry, i, j, 0,
                               "antisymmetry fails"};
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vec defect = bracket(unit_vec(dim_, i), basis_bracket(j, k));
        defect = add(defect, bracket(unit_vec(dim_, j), basis_bracket(k, i)));
        defect = add(defect, bracket(unit_vec(dim_, k), basis_bracket(i, j)));
        if (!is_zero(defect))
          return ValidationIssue{ValidationIssue::Kind::Jacobi, i, j, k,
                                 "Jacobi identity fails on (" + names_[i] + "," +
                                     names_[j] + "," + names_[k] + ")"};
      }
  if (!grading_.empty())
    if (auto issue = check_grading(*this, grading_)) return issue;
  return std::nullopt;
}

QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
  const std::size_t n = g.dim();
  if (ideal.ambient_dim() != n) throw DimensionError("quotient: ambient mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (const Vec& row : ideal.basis_rows())
      if (!ideal.contains(g.bracket(unit_vec(n, i), row)))
        throw NotAnIdeal("subspace is not an ideal: [" + g.names()[i] +
                         ", ideal] escapes");

  std::vector<Vec> ideal_rows = ideal.basis_rows();
  std::vector<std::size_t> comp = complement_indices(ideal_rows, n);
  const std::size_t m = comp.size();

  std::vector<Vec> full_rows = ideal_rows;
  for (std::size_t k : comp) full_rows.push_back(unit_vec(n, k));
  RatMatrix coords = inverse(RatMatrix::from_rows(full_rows, n).transpose());
  RatMatrix projection(m, n);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t j = 0; j < n; ++j)
      projection.at(p, j) = coords.at(ideal.dim() + p, j);
  RatMatrix section(n, m);
  for (std::size_t p = 0; p < m; ++p) section.at(comp[p], p) = 1;

  std::vector<std::string> names;
  for (std::size_t k : comp) names.push_back(g.names()[k]);
  std::map<std::pair<std::size_t, std::size_t>, Vec> lower;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      Vec b = projection.apply(g.basis_bracket(comp[p], comp[q]));
      if (!is_zero(b)) lower[{p, q}] = b;
    }
  LieAlgebra q = LieAlgebra::from_brackets(std::move(names), lower);

  // Projection must be a homomorphism on every basis pair.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = projection.apply(g.basis_bracket(i, j));
      Vec rhs = q.bracket(projection.apply(unit_vec(n, i)),
                          projection.apply(unit_vec(n, j)));
      if (lhs != rhs)
        throw ConstructionFailure("quotient projection is not a homomorphism");
    }
  return QuotientResult{std::move(q), std::move(projection), std::move(section),
                        std::move(comp)};
}

}  // namespace liered
