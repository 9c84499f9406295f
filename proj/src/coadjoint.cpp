#include "liered/coadjoint.hpp"

namespace liered {

namespace {

void require_abelian_ideal(const LieAlgebra& g, const Subspace& a,
                           const char* where) {
  if (a.ambient_dim() != g.dim())
    throw DimensionError(std::string(where) + ": ambient mismatch");
  if (!is_abelian_subspace(g, a))
    throw PreconditionFailure(std::string(where) + ": a is not abelian");
  if (!is_ideal(g, a))
    throw PreconditionFailure(std::string(where) + ": a is not an ideal");
}

}  // namespace

RatMatrix omega_matrix(const LieAlgebra& g, const Vec& mu) {
  const std::size_t n = g.dim();
  if (mu.size() != n) throw DimensionError("omega_matrix: covector size mismatch");
  RatMatrix omega(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = dot(mu, g.basis_bracket(i, j));
      omega.at(i, j) = v;
      omega.at(j, i) = -v;
    }
  return omega;
}

Subspace isotropy(const LieAlgebra& g, const Vec& mu) {
  return Subspace::span_of(kernel_basis(omega_matrix(g, mu)), g.dim());
}

std::size_t orbit_dim(const LieAlgebra& g, const Vec& mu) {
  return rank(omega_matrix(g, mu));
}

bool dimension_condition(const LieAlgebra& g, const Subspace& a, const Vec& mu) {
  require_abelian_ideal(g, a, "dimension_condition");
  return g.dim() + isotropy(g, mu).dim() == 2 * a.dim();
}

bool maximal_isotropic_check(const LieAlgebra& g, const Subspace& a, const Vec& mu) {
  for (const Vec& u : a.basis_rows())
    for (const Vec& v : a.basis_rows())
      if (dot(mu, g.bracket(u, v)) != 0) return false;
  return g.dim() + isotropy(g, mu).dim() == 2 * a.dim();
}

TMuResult t_mu_matrix(const LieAlgebra& g, const Subspace& a, const Subspace& x,
                      const Vec& mu) {
  const std::size_t n = g.dim();
  Subspace z = center(g);
  if (!a.contains(z))
    throw CenterNotInsideA("T_mu requires Z(g) inside a");
  if (x.intersect(a).dim() != 0 || x.dim() + a.dim() != n)
    throw NotAComplement("T_mu requires X to be a direct complement of a");
  std::vector<Vec> x_rows = x.basis_rows();
  std::vector<Vec> y_rows = extend_within(z, a);
  RatMatrix t(x_rows.size(), y_rows.size());
  for (std::size_t i = 0; i < x_rows.size(); ++i) {
    // Well-definedness: i*(ad*_{-X} mu) vanishes on the center.
    for (const Vec& zr : z.basis_rows())
      if (dot(mu, g.bracket(zr, x_rows[i])) != 0)
        throw ConstructionFailure("T_mu not well-defined on a/Z(g)");
    for (std::size_t b = 0; b < y_rows.size(); ++b)
      t.at(i, b) = dot(mu, g.bracket(y_rows[b], x_rows[i]));
  }
  bool injective = rank(t) == x_rows.size();
  return TMuResult{std::move(t), std::move(x_rows), std::move(y_rows), injective};
}

RatMatrix m_matrix(const LieAlgebra& g, const std::vector<Vec>& x_basis,
                   const std::vector<Vec>& y_basis, const Vec& mu) {
  RatMatrix m(x_basis.size(), y_basis.size());
  for (std::size_t i = 0; i < x_basis.size(); ++i)
    for (std::size_t j = 0; j < y_basis.size(); ++j)
      m.at(i, j) = dot(mu, g.bracket(y_basis[j], x_basis[i]));
  return m;
}

Rat psi(const LieAlgebra& g, const std::vector<Vec>& x_basis,
        const std::vector<Vec>& y_basis, const Vec& mu) {
  return determinant(m_matrix(g, x_basis, y_basis, mu));
}

ShiftResult coadjoint_shift(const LieAlgebra& g, const Subspace& a, const Vec& mu,
                            const Vec& mu_tilde) {
  require_abelian_ideal(g, a, "coadjoint_shift");
  const std::size_t n = g.dim();
  if (mu.size() != n || mu_tilde.size() != n)
    throw DimensionError("coadjoint_shift: covector size mismatch");
  Vec diff = sub(mu, mu_tilde);
  for (const Vec& row : a.basis_rows())
    if (dot(diff, row) != 0)
      return ShiftResult{ShiftResult::Status::RestrictionMismatch, {}};

  // Solve sum_b y_b ad*_{Y_b}(mu) = mu - mu_tilde over the complement of the
  // central part of a (central directions act trivially).
  std::vector<Vec> cols = extend_within(center(g).intersect(a), a);
  RatMatrix k(n, cols.size());
  for (std::size_t b = 0; b < cols.size(); ++b) {
    Vec col = g.ad_star(cols[b], mu);
    for (std::size_t i = 0; i < n; ++i) k.at(i, b) = col[i];
  }
  auto sol = solve(k, diff);
  if (!sol) return ShiftResult{ShiftResult::Status::NoShift, {}};
  Vec y = zero_vec(n);
  for (std::size_t b = 0; b < cols.size(); ++b)
    if ((*sol)[b] != 0) y = add(y, scale((*sol)[b], cols[b]));

  // (ad*_Y)^2 mu = 0 for Y in an abelian ideal, so the exponential series is
  // mu - ad*_Y mu; both facts are checked exactly.
  Vec first = g.ad_star(y, mu);
  if (!is_zero(g.ad_star(y, first)))
    throw ConstructionFailure("coadjoint_shift: (ad*_Y)^2 mu != 0");
  if (sub(mu, first) != mu_tilde)
    throw ConstructionFailure("coadjoint_shift: exponential identity failed");
  return ShiftResult{ShiftResult::Status::Found, std::move(y)};
}

MomentumAnalysis analyze_momentum(const LieAlgebra& g, const Subspace& a,
                                  const Vec& mu) {
  require_abelian_ideal(g, a, "analyze_momentum");
  Subspace z = center(g);
  if (!a.contains(z)) throw CenterNotInsideA("analysis requires Z(g) inside a");
  RatMatrix omega = omega_matrix(g, mu);
  Subspace iso = Subspace::span_of(kernel_basis(omega), g.dim());
  std::size_t odim = rank(omega);
  bool dim_cond = g.dim() + iso.dim() == 2 * a.dim();
  bool in_a = a.contains(iso);
  Subspace x = Subspace::span_of(extend_to_basis(a.basis_rows(), g.dim()), g.dim());
  TMuResult t = t_mu_matrix(g, a, x, mu);
  return MomentumAnalysis{mu,      std::move(omega), std::move(iso), odim,
                          dim_cond, in_a,            std::move(t.matrix),
                          t.injective,               std::nullopt};
}

EquivalenceVerdict equivalence_verdict(const LieAlgebra& g, const Subspace& a,
                                       const Vec& mu) {
  EquivalenceVerdict v{false, {}, {}, analyze_momentum(g, a, mu)};
  v.equivalent = v.analysis.isotropy_in_a && v.analysis.t_injective;
  if (!v.analysis.isotropy_in_a) v.reasons.push_back("isotropy not inside a");
  if (!v.analysis.t_injective) v.reasons.push_back("T_mu not injective");
  if (!nilpotency_step(g))
    v.caveats.push_back(
        "Lie-algebra level; assumes G_mu connected / G simply connected");
  return v;
}

Vec random_covector(std::size_t dim, long bound, std::mt19937_64& rng) {
  Vec mu(dim);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  for (std::size_t i = 0; i < dim; ++i) {
    long v = static_cast<long>(rng() % span) - bound;
    mu[i] = Rat(v);
  }
  return mu;
}

GenericReport generic_scan(const LieAlgebra& g, const Subspace& a, std::size_t trials,
                           long bound, std::uint64_t seed) {
  if (trials < 1) throw PreconditionFailure("generic_scan requires trials >= 1");
  GenericReport report;
  report.trials = trials;
  report.bound = bound;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Vec mu = random_covector(g.dim(), bound, rng);
    EquivalenceVerdict v = equivalence_verdict(g, a, mu);
    if (v.equivalent) ++report.equivalent_count;
    report.max_orbit_dim = std::max(report.max_orbit_dim, v.analysis.orbit_dim);
    report.samples.push_back(GenericTrial{std::move(mu), v.analysis.orbit_dim,
                                          v.equivalent});
  }
  for (const GenericTrial& s : report.samples)
    if (s.orbit_dim == report.max_orbit_dim) {
      report.representative = s.mu;
      break;
    }
  return report;
}

}  // namespace liered
