#include "liered/asimple.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "liered/catalog.hpp"

namespace liered {

namespace {

bool independent_mod(const Subspace& z, const std::vector<Vec>& ys, std::size_t n) {
  std::vector<Vec> rows = z.basis_rows();
  for (const Vec& y : ys) rows.push_back(y);
  return rank(RatMatrix::from_rows(rows, n)) == z.dim() + ys.size();
}

/// Coefficient lambda with v = lambda * z, if any.
std::optional<Rat> multiple_of(const Vec& v, const Vec& z) {
  std::size_t k = 0;
  while (k < z.size() && z[k] == 0) ++k;
  if (k == z.size()) return is_zero(v) ? std::optional<Rat>(Rat(0)) : std::nullopt;
  Rat lambda = v[k] / z[k];
  if (sub(v, scale(lambda, z)) != zero_vec(v.size())) return std::nullopt;
  return lambda;
}

}  // namespace

CertificateCheck verify_certificate(const LieAlgebra& g,
                                    const ASimpleCertificate& cert) {
  const std::size_t n = g.dim();
  auto fail = [](std::size_t idx, std::string why) {
    return CertificateCheck{false, idx, std::move(why)};
  };
  if (cert.a.ambient_dim() != n) return fail(0, "a has wrong ambient dimension");
  if (!is_abelian_subspace(g, cert.a)) return fail(0, "a is not abelian");
  if (!is_ideal(g, cert.a)) return fail(0, "a is not an ideal");
  const std::size_t m = n - cert.a.dim();
  if (cert.x_basis.size() != m)
    return fail(0, "X basis size != dim g - dim a");
  if (cert.y_witnesses.size() != m) return fail(0, "need one Y witness per X");
  std::vector<Vec> rows = cert.a.basis_rows();
  for (const Vec& x : cert.x_basis) rows.push_back(x);
  if (rank(RatMatrix::from_rows(rows, n)) != n)
    return fail(0, "X is not a direct complement of a");
  Subspace z = center(g);
  if (!independent_mod(z, cert.y_witnesses, n))
    return fail(0, "Y witnesses not independent modulo the center");
  for (std::size_t i = 0; i < m; ++i) {
    if (!cert.a.contains(cert.y_witnesses[i]))
      return fail(i, "Y witness outside a");
    Vec b = g.bracket(cert.x_basis[i], cert.y_witnesses[i]);
    if (is_zero(b)) return fail(i, "[X_i, Y_i] = 0");
    if (!z.contains(b)) return fail(i, "[X_i, Y_i] not central");
    if (i < cert.brackets.size() && cert.brackets[i] != b)
      return fail(i, "stored bracket does not match [X_i, Y_i]");
  }
  return CertificateCheck{};
}

bool necessary_condition(const LieAlgebra& g, const Subspace& a) {
  return g.dim() + center(g).dim() <= 2 * a.dim();
}

KirillovPair kirillov_pair(const LieAlgebra& g, const Vec& z, const Subspace& d,
                           const Subspace& w) {
  const std::size_t n = g.dim();
  Subspace zg = center(g);
  if (zg.dim() != 1 || !zg.contains(z) || is_zero(z))
    throw PreconditionFailure("kirillov_pair: center must be the line of z");
  auto step = nilpotency_step(g);
  if (!step || *step <= 2)
    throw PreconditionFailure("kirillov_pair: step must exceed two");
  Subspace z2 = second_center(g);
  if (d.intersect(zg).dim() != 0 || d.sum(zg) != z2)
    throw PreconditionFailure("kirillov_pair: Z_2(g) != D + Z(g)");
  Subspace cz2 = centralizer(g, z2);
  if (w.intersect(cz2).dim() != 0 || w.dim() + cz2.dim() != n)
    throw PreconditionFailure("kirillov_pair: g != W + C(Z_2(g), g)");
  if (w.dim() != d.dim())
    throw DegeneratePairing("kirillov_pair: dim W != dim D");

  std::vector<Vec> w_rows = w.basis_rows();
  std::vector<Vec> d_rows = d.basis_rows();
  const std::size_t m = w_rows.size();
  RatMatrix b(m, m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      auto lambda = multiple_of(g.bracket(w_rows[p], d_rows[q]), z);
      if (!lambda)
        throw PreconditionFailure("kirillov_pair: [W, D] escapes <z>");
      b.at(p, q) = *lambda;
    }
  RatMatrix binv;
  try {
    binv = inverse(b);
  } catch (const SingularMatrix&) {
    throw DegeneratePairing("kirillov_pair: pairing matrix is singular");
  }
  std::vector<Vec> x_basis;
  for (std::size_t i = 0; i < m; ++i) {
    Vec xi = zero_vec(n);
    for (std::size_t p = 0; p < m; ++p)
      if (binv.at(i, p) != 0) xi = add(xi, scale(binv.at(i, p), w_rows[p]));
    x_basis.push_back(std::move(xi));
  }
  RatMatrix pairing(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto lambda = multiple_of(g.bracket(x_basis[i], d_rows[j]), z);
      if (!lambda) throw ConstructionFailure("kirillov_pair: dualization failed");
      pairing.at(i, j) = *lambda;
    }
  if (pairing != RatMatrix::identity(m))
    throw ConstructionFailure("kirillov_pair: dual basis check failed");
  return KirillovPair{std::move(x_basis), std::move(pairing)};
}

ASimpleVerdict certify_onedim_center(const LieAlgebra& g, const Subspace& a) {
  const std::size_t n = g.dim();
  if (!is_metabelian(g))
    throw PreconditionFailure("certify_onedim_center: g is not metabelian");
  if (!g.has_grading() || !verify_stratification(g))
    throw PreconditionFailure("certify_onedim_center: no valid stratification declared");
  Subspace z = center(g);
  if (z.dim() != 1)
    throw PreconditionFailure("certify_onedim_center: dim Z(g) != 1");
  Subspace derived = derived_subalgebra(g);
  if (!a.contains(derived))
    throw PreconditionFailure("certify_onedim_center: a does not contain [g,g]");
  if (!is_abelian_subspace(g, a) || !is_ideal(g, a))
    throw PreconditionFailure("certify_onedim_center: a is not an abelian ideal");
  if (centralizer(g, a) != a)
    throw PreconditionFailure("certify_onedim_center: C(a, g) != a (a not maximal)");

  const Vec z0 = z.basis_rows().front();
  auto step = nilpotency_step(g);
  ASimpleCertificate cert{a, {}, {}, {}};

  if (step && *step <= 2) {
    // Step 2: all brackets are central; pair the complement against a/Z(g).
    std::vector<Vec> x_rows = extend_to_basis(a.basis_rows(), n);
    std::vector<Vec> d_rows = extend_within(z, a);
    const std::size_t m = x_rows.size();
    RatMatrix b(m, d_rows.size());
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < d_rows.size(); ++q) {
        auto lambda = multiple_of(g.bracket(x_rows[p], d_rows[q]), z0);
        if (!lambda)
          throw ConstructionFailure("step-2 bracket escapes the center");
        b.at(p, q) = *lambda;
      }
    Rref r = rref(b);
    if (r.pivot_cols.size() != m)
      throw ConstructionFailure("step-2 pairing is degenerate");
    RatMatrix bp(m, m);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) bp.at(p, q) = b.at(p, r.pivot_cols[q]);
    RatMatrix binv = inverse(bp);
    for (std::size_t i = 0; i < m; ++i) {
      Vec xi = zero_vec(n);
      for (std::size_t p = 0; p < m; ++p)
        if (binv.at(i, p) != 0) xi = add(xi, scale(binv.at(i, p), x_rows[p]));
      cert.x_basis.push_back(std::move(xi));
      cert.y_witnesses.push_back(d_rows[r.pivot_cols[i]]);
    }
  } else {
    Subspace z2 = second_center(g);
    if (!a.contains(z2))
      throw PreconditionFailure("certify_onedim_center: Z_2(g) not inside a");
    if (centralizer(g, z2) != a)
      throw PreconditionFailure("certify_onedim_center: a != C(Z_2(g), g)");
    Subspace d = Subspace::span_of(extend_within(z, z2), n);
    Subspace w = Subspace::span_of(extend_to_basis(a.basis_rows(), n), n);
    KirillovPair kp = kirillov_pair(g, z0, d, w);
    cert.x_basis = kp.x_basis;
    cert.y_witnesses = d.basis_rows();
  }

  for (std::size_t i = 0; i < cert.x_basis.size(); ++i)
    cert.brackets.push_back(g.bracket(cert.x_basis[i], cert.y_witnesses[i]));
  CertificateCheck check = verify_certificate(g, cert);
  if (!check.ok)
    throw ConstructionFailure("certify_onedim_center produced a bad certificate: " +
                              check.reason);
  return ASimpleVerdict{ASimpleVerdict::Status::ProvenYes, std::move(cert), ""};
}

ASimpleVerdict heuristic_search(const LieAlgebra& g, const Subspace& a,
                                std::uint64_t seed, std::size_t budget) {
  const std::size_t n = g.dim();
  if (!necessary_condition(g, a)) {
    std::string why = "dim g + dim Z(g) = " + std::to_string(g.dim()) + " + " +
                      std::to_string(center(g).dim()) + " > 2 dim a = " +
                      std::to_string(2 * a.dim());
    return ASimpleVerdict{ASimpleVerdict::Status::ProvenNo, std::nullopt, why};
  }
  const std::size_t m = n - a.dim();
  Subspace z = center(g);
  RatMatrix ann = z.dim() < n ? z.annihilator_matrix() : RatMatrix(0, n);
  std::vector<Vec> base = extend_to_basis(a.basis_rows(), n);
  std::mt19937_64 rng(seed);

  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<Vec> x_rows;
    if (attempt == 0) {
      x_rows = base;
    } else {
      // Random unimodular-ish integer recombination of the default complement.
      RatMatrix u(m, m);
      do {
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            u.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
      } while (determinant(u) == 0);
      for (std::size_t i = 0; i < m; ++i) {
        Vec xi = zero_vec(n);
        for (std::size_t j = 0; j < m; ++j)
          if (u.at(i, j) != 0) xi = add(xi, scale(u.at(i, j), base[j]));
        x_rows.push_back(std::move(xi));
      }
    }

    std::vector<Vec> chosen;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      // S_i = {Y in a : [X_i, Y] in Z(g)} in a-coordinates.
      std::vector<Vec> a_rows = a.basis_rows();
      RatMatrix cond(ann.rows(), a_rows.size());
      for (std::size_t r = 0; r < a_rows.size(); ++r) {
        Vec img = ann.apply(g.bracket(x_rows[i], a_rows[r]));
        for (std::size_t q = 0; q < ann.rows(); ++q) cond.at(q, r) = img[q];
      }
      bool found = false;
      for (const Vec& coeff : kernel_basis(cond)) {
        Vec y = zero_vec(n);
        for (std::size_t r = 0; r < a_rows.size(); ++r)
          if (coeff[r] != 0) y = add(y, scale(coeff[r], a_rows[r]));
        if (is_zero(g.bracket(x_rows[i], y))) continue;
        std::vector<Vec> trial = chosen;
        trial.push_back(y);
        if (!independent_mod(z, trial, n)) continue;
        chosen = std::move(trial);
        found = true;
        break;
      }
      ok = found;
    }
    if (!ok) continue;
    ASimpleCertificate cert{a, x_rows, chosen, {}};
    for (std::size_t i = 0; i < m; ++i)
      cert.brackets.push_back(g.bracket(cert.x_basis[i], cert.y_witnesses[i]));
    if (verify_certificate(g, cert).ok)
      return ASimpleVerdict{ASimpleVerdict::Status::ProvenYes, std::move(cert),
                            "found at candidate " + std::to_string(attempt)};
  }
  return ASimpleVerdict{ASimpleVerdict::Status::Unknown, std::nullopt,
                        "necessary condition holds; no certificate within budget " +
                            std::to_string(budget)};
}

RatMatrix CanonicalBasis::full_matrix(std::size_t ambient) const {
  std::vector<Vec> rows{z0};
  for (const Vec& v : z_i) rows.push_back(v);
  for (const Vec& v : y_j) rows.push_back(v);
  for (const Vec& v : y_a) rows.push_back(v);
  for (const Vec& v : x_i) rows.push_back(v);
  return RatMatrix::from_rows(rows, ambient);
}

std::vector<Vec> CanonicalBasis::dual_basis(const RatMatrix& full) {
  RatMatrix inv = inverse(full);
  std::vector<Vec> duals;
  for (std::size_t k = 0; k < full.rows(); ++k) {
    Vec d(full.cols());
    for (std::size_t j = 0; j < full.cols(); ++j) d[j] = inv.at(j, k);
    duals.push_back(std::move(d));
  }
  return duals;
}

CanonicalBasis canonical_basis(const LieAlgebra& g, const ASimpleCertificate& cert) {
  const std::size_t n = g.dim();
  if (!nilpotency_step(g))
    throw PreconditionFailure("canonical_basis: g must be nilpotent");
  CertificateCheck check = verify_certificate(g, cert);
  if (!check.ok)
    throw PreconditionFailure("canonical_basis: certificate invalid: " + check.reason);
  const std::size_t m = cert.x_basis.size();

  LieAlgebra cur = g;
  RatMatrix pi = RatMatrix::identity(n);
  RatMatrix sigma = RatMatrix::identity(n);
  std::vector<Vec> x_cur = cert.x_basis;
  std::vector<Vec> y_cur = cert.y_witnesses;
  Subspace a_cur = cert.a;

  // Reduction loop: quotient one central line at a time, avoiding the witness
  // bracket lines so their images stay nonzero.
  for (;;) {
    Subspace zc = center(cur);
    if (zc.dim() == 0)
      throw ConstructionFailure("canonical_basis: centerless stage");
    if (zc.dim() == 1) break;
    std::vector<Vec> bracket_lines;
    for (std::size_t i = 0; i < m; ++i) {
      Vec b = cur.bracket(x_cur[i], y_cur[i]);
      if (is_zero(b) || !zc.contains(b))
        throw ConstructionFailure("canonical_basis: witness bracket degenerated");
      bracket_lines.push_back(std::move(b));
    }
    std::vector<Vec> z_rows = zc.basis_rows();
    const std::size_t zd = z_rows.size();
    Vec zeta;
    bool found = false;
    // Graded scan over integer coefficient tuples: max-norm 1, 2, ... with the
    // rightmost coordinate cycling 0, 1, -1, 2, -2, ...
    for (long norm = 1; norm <= 16 && !found; ++norm) {
      std::vector<long> seq{0};
      for (long v = 1; v <= norm; ++v) {
        seq.push_back(v);
        seq.push_back(-v);
      }
      std::vector<std::size_t> odo(zd, 0);
      for (;;) {
        long maxabs = 0;
        for (std::size_t p = 0; p < zd; ++p)
          maxabs = std::max(maxabs, std::abs(seq[odo[p]]));
        if (maxabs == norm) {
          Vec candidate = zero_vec(cur.dim());
          for (std::size_t p = 0; p < zd; ++p)
            if (seq[odo[p]] != 0)
              candidate = add(candidate, scale(Rat(seq[odo[p]]), z_rows[p]));
          bool clear = !is_zero(candidate);
          for (std::size_t i = 0; i < m && clear; ++i)
            if (rank(RatMatrix::from_rows({candidate, bracket_lines[i]},
                                          cur.dim())) < 2)
              clear = false;
          if (clear) {
            zeta = std::move(candidate);
            found = true;
            break;
          }
        }
        std::size_t pos = zd;
        bool rolled = false;
        while (pos-- > 0) {
          if (odo[pos] + 1 < seq.size()) {
            ++odo[pos];
            for (std::size_t q = pos + 1; q < zd; ++q) odo[q] = 0;
            rolled = true;
            break;
          }
        }
        if (!rolled) break;
      }
    }
    if (!found)
      throw ConstructionFailure("canonical_basis: no central line avoids witnesses");

    QuotientResult q = quotient(cur, Subspace::span_of({zeta}, cur.dim()));
    pi = q.projection * pi;
    sigma = sigma * q.section;
    for (Vec& x : x_cur) x = q.projection.apply(x);
    for (Vec& y : y_cur) y = q.projection.apply(y);
    std::vector<Vec> a_rows;
    for (const Vec& row : a_cur.basis_rows()) a_rows.push_back(q.projection.apply(row));
    a_cur = Subspace::span_of(a_rows, q.algebra.dim());
    cur = std::move(q.algebra);
  }

  // Base case in the terminal algebra: pair X against Z_2 meet a, where all
  // brackets stay inside the one-dimensional center.
  const std::size_t tn = cur.dim();
  Subspace zt = center(cur);
  const Vec zt0 = zt.basis_rows().front();
  Subspace dstar = second_center(cur).intersect(a_cur);
  std::vector<Vec> d_rows = dstar.basis_rows();
  RatMatrix b(m, d_rows.size());
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < d_rows.size(); ++q) {
      auto lambda = multiple_of(cur.bracket(x_cur[p], d_rows[q]), zt0);
      if (!lambda)
        throw ConstructionFailure("canonical_basis: terminal bracket escapes center");
      b.at(p, q) = *lambda;
    }
  Rref rb = rref(b);
  if (rb.pivot_cols.size() != m)
    throw ConstructionFailure("canonical_basis: terminal pairing is degenerate");
  RatMatrix bp(m, m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) bp.at(p, q) = b.at(p, rb.pivot_cols[q]);
  RatMatrix binv = inverse(bp);
  std::vector<Vec> xt, yt;
  for (std::size_t i = 0; i < m; ++i) {
    Vec xi = zero_vec(tn);
    for (std::size_t p = 0; p < m; ++p)
      if (binv.at(i, p) != 0) xi = add(xi, scale(binv.at(i, p), x_cur[p]));
    xt.push_back(std::move(xi));
    yt.push_back(d_rows[rb.pivot_cols[i]]);
  }
  std::vector<Vec> base_span{zt0};
  for (const Vec& y : yt) base_span.push_back(y);
  std::vector<Vec> yat =
      extend_within(Subspace::span_of(base_span, tn), a_cur);

  // Lift through the section; split ker(pi) into its central part (Z_I) and
  // the rest (extra Y_a).
  CanonicalBasis out;
  Subspace kerpi = Subspace::span_of(kernel_basis(pi), n);
  if (!cert.a.contains(kerpi))
    throw ConstructionFailure("canonical_basis: ker(pi) escapes a");
  Subspace zg = center(g);
  Subspace kz = kerpi.intersect(zg);
  out.z_i = kz.basis_rows();
  std::vector<Vec> y_hat = extend_within(kz, kerpi);

  // Central preimage of the terminal center generator.
  {
    std::vector<Vec> zg_rows = zg.basis_rows();
    RatMatrix lift(tn, zg_rows.size());
    for (std::size_t c = 0; c < zg_rows.size(); ++c) {
      Vec img = pi.apply(zg_rows[c]);
      for (std::size_t r = 0; r < tn; ++r) lift.at(r, c) = img[r];
    }
    auto sol = solve(lift, zt0);
    if (!sol)
      throw ConstructionFailure("canonical_basis: no central preimage of Z0");
    out.z0 = zero_vec(n);
    for (std::size_t c = 0; c < zg_rows.size(); ++c)
      if ((*sol)[c] != 0) out.z0 = add(out.z0, scale((*sol)[c], zg_rows[c]));
  }
  for (const Vec& y : yt) out.y_j.push_back(sigma.apply(y));
  for (const Vec& y : yat) out.y_a.push_back(sigma.apply(y));
  for (const Vec& y : y_hat) out.y_a.push_back(y);
  for (const Vec& x : xt) out.x_i.push_back(sigma.apply(x));

  // Exact postconditions.
  RatMatrix full = out.full_matrix(n);
  if (rank(full) != n)
    throw ConstructionFailure("canonical_basis: output is not a basis");
  std::vector<Vec> zspan{out.z0};
  for (const Vec& v : out.z_i) zspan.push_back(v);
  if (Subspace::span_of(zspan, n) != zg)
    throw ConstructionFailure("canonical_basis: <Z0, Z_I> != Z(g)");
  std::vector<Vec> aspan = zspan;
  for (const Vec& v : out.y_j) aspan.push_back(v);
  for (const Vec& v : out.y_a) aspan.push_back(v);
  if (Subspace::span_of(aspan, n) != cert.a)
    throw ConstructionFailure("canonical_basis: <Z0, Z_I, Y_j, Y_a> != a");

  std::vector<Vec> correction_dirs = out.z_i;
  for (const Vec& v : out.y_a) correction_dirs.push_back(v);
  RatMatrix dirs(n, correction_dirs.size());
  for (std::size_t c = 0; c < correction_dirs.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) dirs.at(r, c) = correction_dirs[c][r];
  out.corrections.assign(m, std::vector<Vec>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec res = g.bracket(out.x_i[i], out.y_j[j]);
      if (i == j) res = sub(res, out.z0);
      auto sol = solve(dirs, res);
      if (!sol)
        throw ConstructionFailure(
            "canonical_basis: commutation relation violated at (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
      out.corrections[i][j] = *sol;
    }
  return out;
}

Rat psi(const LieAlgebra& g, const CanonicalBasis& basis, const Vec& mu) {
  return psi(g, basis.x_i, basis.y_j, mu);
}

ASimpleCertificate jet_certificate(std::size_t k, std::size_t n, std::size_t m) {
  LieAlgebra g = catalog::jet(k, n, m);
  const std::size_t dim = g.dim();
  std::vector<Vec> a_rows;
  for (std::size_t i = n; i < dim; ++i) a_rows.push_back(unit_vec(dim, i));
  ASimpleCertificate cert{Subspace::span_of(a_rows, dim), {}, {}, {}};
  for (std::size_t i = 0; i < n; ++i) cert.x_basis.push_back(unit_vec(dim, i));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> e(n, 0);
    e[j] = 1;
    cert.y_witnesses.push_back(unit_vec(dim, catalog::jet_y_index(k, n, m, 1, e)));
  }
  for (std::size_t i = 0; i < n; ++i)
    cert.brackets.push_back(g.bracket(cert.x_basis[i], cert.y_witnesses[i]));
  CertificateCheck check = verify_certificate(g, cert);
  if (!check.ok)
    throw ConstructionFailure("jet_certificate failed to verify: " + check.reason);
  return cert;
}

}  // namespace liered
