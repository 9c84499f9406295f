#include "liered/structure.hpp"

#include <algorithm>

namespace liered {

namespace {

Subspace bracket_span(const LieAlgebra& g, const Subspace& h) {
  const std::size_t n = g.dim();
  std::vector<Vec> gen;
  for (std::size_t i = 0; i < n; ++i)
    for (const Vec& row : h.basis_rows()) {
      Vec b = g.bracket(unit_vec(n, i), row);
      if (!is_zero(b)) gen.push_back(std::move(b));
    }
  return Subspace::span_of(gen, n);
}

}  // namespace

std::vector<Subspace> descending_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  for (;;) {
    Subspace next = bracket_span(g, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

std::optional<int> nilpotency_step(const LieAlgebra& g) {
  std::vector<Subspace> series = descending_series(g);
  if (series.back().dim() != 0) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& h) {
  const std::size_t n = g.dim();
  if (h.dim() == 0) return Subspace::full(n);
  std::vector<Vec> stacked;
  for (const Vec& u : h.basis_rows())
    for (const Vec& row : g.ad(u).row_list()) stacked.push_back(row);
  RatMatrix m = RatMatrix::from_rows(stacked, n);
  return Subspace::span_of(kernel_basis(m), n);
}

Subspace center(const LieAlgebra& g) {
  return centralizer(g, Subspace::full(g.dim()));
}

Subspace second_center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Subspace z = center(g);
  if (z.dim() == n) return z;
  RatMatrix ann = z.annihilator_matrix();  // kernel = Z(g)
  std::vector<Vec> stacked;
  for (std::size_t i = 0; i < n; ++i) {
    RatMatrix cond = ann * g.ad(unit_vec(n, i));
    for (const Vec& row : cond.row_list()) stacked.push_back(row);
  }
  return Subspace::span_of(kernel_basis(RatMatrix::from_rows(stacked, n)), n);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  return bracket_span(g, Subspace::full(g.dim()));
}

bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s) {
  std::vector<Vec> rows = s.basis_rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (!is_zero(g.bracket(rows[i], rows[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (const Vec& row : s.basis_rows())
      if (!s.contains(g.bracket(unit_vec(n, i), row))) return false;
  return true;
}

bool is_metabelian(const LieAlgebra& g) {
  return is_abelian_subspace(g, derived_subalgebra(g));
}

bool verify_grading(const LieAlgebra& g) {
  if (!g.has_grading())
    throw PreconditionFailure("no grading declared");
  // Declared gradings are validated at construction; re-check via validate().
  return !g.validate().has_value();
}

bool verify_stratification(const LieAlgebra& g) {
  if (!verify_grading(g)) return false;
  std::vector<GradingLayer> layers = g.grading();
  std::sort(layers.begin(), layers.end(),
            [](const GradingLayer& a, const GradingLayer& b) { return a.weight < b.weight; });
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (layers[i].weight != static_cast<int>(i) + 1) return false;
  for (std::size_t a = 0; a + 1 < layers.size(); ++a) {
    std::vector<Vec> gen;
    for (const Vec& u : layers[0].space.basis_rows())
      for (const Vec& v : layers[a].space.basis_rows()) {
        Vec b = g.bracket(u, v);
        if (!is_zero(b)) gen.push_back(std::move(b));
      }
    if (Subspace::span_of(gen, g.dim()) != layers[a + 1].space) return false;
  }
  // Top layer must bracket to zero against V_1 (weight s+1 is empty).
  const Subspace& top = layers.back().space;
  for (const Vec& u : layers[0].space.basis_rows())
    for (const Vec& v : top.basis_rows())
      if (!is_zero(g.bracket(u, v))) return false;
  return true;
}

int carnot_rank(const LieAlgebra& g) {
  return static_cast<int>(g.dim()) - static_cast<int>(derived_subalgebra(g).dim());
}

Subspace maximal_abelian_ideal(const LieAlgebra& g) {
  if (!is_metabelian(g))
    throw MaximalAbelianIdealNotSupported(
        "maximal abelian ideal construction requires a metabelian algebra");
  const std::size_t n = g.dim();
  Subspace a = derived_subalgebra(g).sum(center(g));
  for (;;) {
    Subspace c = centralizer(g, a);
    if (c == a) break;
    bool grew = false;
    for (std::size_t k = n; k-- > 0;) {
      Vec e = unit_vec(n, k);
      if (c.contains(e) && !a.contains(e)) {
        a = a.sum(Subspace::span_of({e}, n));
        grew = true;
        break;
      }
    }
    if (!grew) {
      // No standard vector available; fall back to the first canonical row.
      for (const Vec& row : c.basis_rows())
        if (!a.contains(row)) {
          a = a.sum(Subspace::span_of({row}, n));
          grew = true;
          break;
        }
    }
    if (!grew) break;
  }
  return a;
}

StructureReport analyze_structure(const LieAlgebra& g) {
  StructureReport r{descending_series(g), std::nullopt,       center(g),
                    second_center(g),     Subspace::zero(g.dim()), false,
                    GradingCheck::NotDeclared, std::nullopt};
  if (r.series.back().dim() == 0) r.step = static_cast<int>(r.series.size()) - 1;
  r.derived = r.series.size() > 1 ? r.series[1] : bracket_span(g, r.series[0]);
  r.is_metabelian = is_abelian_subspace(g, r.derived);
  if (g.has_grading())
    r.grading = verify_stratification(g) ? GradingCheck::ValidStratification
                : verify_grading(g)      ? GradingCheck::ValidGrading
                                         : GradingCheck::Invalid;
  if (r.step) r.carnot_rank = carnot_rank(g);
  return r;
}

}  // namespace liered
