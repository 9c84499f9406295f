#include "liered/catalog.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "liered/structure.hpp"

namespace liered {
namespace catalog {

namespace {

using BracketMap = std::map<std::pair<std::size_t, std::size_t>, Vec>;

void check_cap(std::size_t dim) {
  if (dim > kDimensionCap)
    throw DimensionCapExceeded("requested dimension " + std::to_string(dim) +
                               " exceeds cap " + std::to_string(kDimensionCap));
}

Subspace span_indices(const std::vector<std::size_t>& idx, std::size_t n) {
  std::vector<Vec> rows;
  for (std::size_t k : idx) rows.push_back(unit_vec(n, k));
  return Subspace::span_of(rows, n);
}

}  // namespace

LieAlgebra heisenberg(std::size_t n) {
  if (n < 1) throw PreconditionFailure("heisenberg requires n >= 1");
  const std::size_t dim = 2 * n + 1;
  check_cap(dim);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
  names.push_back("Z");
  BracketMap lower;
  for (std::size_t i = 0; i < n; ++i) lower[{i, n + i}] = unit_vec(dim, 2 * n);
  std::vector<std::size_t> v1;
  for (std::size_t i = 0; i < 2 * n; ++i) v1.push_back(i);
  std::vector<GradingLayer> grading{{1, span_indices(v1, dim)},
                                    {2, span_indices({2 * n}, dim)}};
  return LieAlgebra::from_brackets(std::move(names), lower, std::move(grading));
}

LieAlgebra cartan_f23() {
  const std::size_t dim = 5;  // X1 X2 Y Z1 Z2
  BracketMap lower;
  lower[{0, 1}] = unit_vec(dim, 2);  // [X1,X2] = Y
  lower[{0, 2}] = unit_vec(dim, 3);  // [X1,Y] = Z1
  lower[{1, 2}] = unit_vec(dim, 4);  // [X2,Y] = Z2
  std::vector<GradingLayer> grading{{1, span_indices({0, 1}, dim)},
                                    {2, span_indices({2}, dim)},
                                    {3, span_indices({3, 4}, dim)}};
  return LieAlgebra::from_brackets({"X1", "X2", "Y", "Z1", "Z2"}, lower,
                                   std::move(grading));
}

LieAlgebra free_f24() {
  const std::size_t dim = 8;  // X1 X2 Y1 Y2 Y3 Z1 Z2 Z3
  BracketMap lower;
  lower[{0, 1}] = unit_vec(dim, 4);  // [X1,X2] = Y3
  lower[{0, 4}] = unit_vec(dim, 3);  // [X1,Y3] = Y2
  lower[{1, 4}] = unit_vec(dim, 2);  // [X2,Y3] = Y1
  lower[{0, 3}] = unit_vec(dim, 5);  // [X1,Y2] = Z1
  lower[{0, 2}] = unit_vec(dim, 6);  // [X1,Y1] = Z2
  lower[{1, 3}] = unit_vec(dim, 6);  // [X2,Y2] = Z2
  lower[{1, 2}] = unit_vec(dim, 7);  // [X2,Y1] = Z3
  std::vector<GradingLayer> grading{{1, span_indices({0, 1}, dim)},
                                    {2, span_indices({4}, dim)},
                                    {3, span_indices({2, 3}, dim)},
                                    {4, span_indices({5, 6, 7}, dim)}};
  return LieAlgebra::from_brackets({"X1", "X2", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3"},
                                   lower, std::move(grading));
}

std::vector<std::vector<std::size_t>> jet_multi_indices(std::size_t k, std::size_t n) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> cur(n, 0);
  for (;;) {
    std::size_t total = 0;
    for (std::size_t c : cur) total += c;
    if (total <= k) all.push_back(cur);
    std::size_t pos = n;
    bool rolled = false;
    while (pos-- > 0) {
      if (cur[pos] < k) {
        ++cur[pos];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cur.end(), 0);
        rolled = true;
        break;
      }
    }
    if (!rolled) break;
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    std::size_t sa = 0, sb = 0;
    for (std::size_t x : a) sa += x;
    for (std::size_t x : b) sb += x;
    if (sa != sb) return sa > sb;
    return a < b;
  });
  return all;
}

std::size_t jet_y_index(std::size_t k, std::size_t n, std::size_t m, std::size_t l,
                        const std::vector<std::size_t>& idx) {
  if (l < 1 || l > m) throw PreconditionFailure("jet_y_index: bad component l");
  auto indices = jet_multi_indices(k, n);
  for (std::size_t p = 0; p < indices.size(); ++p)
    if (indices[p] == idx) return n + (l - 1) * indices.size() + p;
  throw PreconditionFailure("jet_y_index: no such multi-index");
}

LieAlgebra jet(std::size_t k, std::size_t n, std::size_t m) {
  if (k < 1 || n < 1 || m < 1)
    throw PreconditionFailure("jet requires k, n, m >= 1");
  auto indices = jet_multi_indices(k, n);
  const std::size_t block = indices.size();  // C(n+k, k)
  const std::size_t dim = n + m * block;
  check_cap(dim);

  std::map<std::vector<std::size_t>, std::size_t> pos_of;
  for (std::size_t p = 0; p < block; ++p) pos_of[indices[p]] = p;

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  for (std::size_t l = 1; l <= m; ++l)
    for (const auto& idx : indices) {
      std::string s = "Y" + std::to_string(l) + "_";
      for (std::size_t c : idx) s += std::to_string(c);
      names.push_back(s);
    }

  // [Y^l_{I+e_i}, X_i] = Y^l_I; stored as [X_i, Y^l_{I+e_i}] = -Y^l_I.
  BracketMap lower;
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t p = 0; p < block; ++p) {
      const auto& idx = indices[p];
      std::size_t src = n + l * block + p;
      for (std::size_t i = 0; i < n; ++i) {
        if (idx[i] == 0) continue;
        auto down = idx;
        --down[i];
        std::size_t dst = n + l * block + pos_of.at(down);
        auto it = lower.find({i, src});
        if (it == lower.end()) it = lower.emplace(std::make_pair(i, src), zero_vec(dim)).first;
        it->second[dst] -= 1;
      }
    }

  // Layers: weight 1 holds the X's and |I| = k; weight j = 2..k+1 holds |I| = k+1-j.
  std::vector<std::vector<std::size_t>> layer_idx(k + 1);
  for (std::size_t i = 0; i < n; ++i) layer_idx[0].push_back(i);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t p = 0; p < block; ++p) {
      std::size_t total = 0;
      for (std::size_t c : indices[p]) total += c;
      layer_idx[k - total].push_back(n + l * block + p);
    }
  std::vector<GradingLayer> grading;
  for (std::size_t w = 0; w <= k; ++w)
    if (!layer_idx[w].empty())
      grading.push_back({static_cast<int>(w + 1), span_indices(layer_idx[w], dim)});

  return LieAlgebra::from_brackets(std::move(names), lower, std::move(grading));
}

LieAlgebra filiform(std::size_t n) {
  if (n < 3) throw PreconditionFailure("filiform requires n >= 3");
  check_cap(n);
  const std::size_t k = n - 2;
  std::vector<std::string> names{"X"};
  for (std::size_t d = k + 1; d-- > 0;) names.push_back("Y" + std::to_string(d));
  // Same table as jet(k,1,1): basis X, Y_k, ..., Y_0 with [Y_d, X] = Y_{d-1}.
  BracketMap lower;
  for (std::size_t d = k; d >= 1; --d) {
    std::size_t src = 1 + (k - d);
    Vec v = zero_vec(n);
    v[src + 1] = -1;  // [X, Y_d] = -Y_{d-1}
    lower[{0, src}] = std::move(v);
  }
  std::vector<GradingLayer> grading;
  grading.push_back({1, span_indices({0, 1}, n)});
  for (std::size_t w = 2; w <= k + 1; ++w)
    grading.push_back({static_cast<int>(w), span_indices({w}, n)});
  return LieAlgebra::from_brackets(std::move(names), lower, std::move(grading));
}

LieAlgebra se2() {
  const std::size_t dim = 3;  // R E1 E2
  BracketMap lower;
  Vec b01 = zero_vec(dim);
  b01[2] = 1;  // [R,E1] = E2
  Vec b02 = zero_vec(dim);
  b02[1] = -1;  // [R,E2] = -E1
  lower[{0, 1}] = b01;
  lower[{0, 2}] = b02;
  return LieAlgebra::from_brackets({"R", "E1", "E2"}, lower);
}

LieAlgebra semidirect(const SemidirectSpec& spec) {
  const std::size_t dh = spec.h.dim();
  if (spec.action.size() != dh)
    throw HomomorphismFailure("one action matrix required per h basis vector");
  const std::size_t da = spec.action.empty() ? 0 : spec.action[0].rows();
  for (const RatMatrix& rho : spec.action)
    if (rho.rows() != da || rho.cols() != da)
      throw HomomorphismFailure("action matrices must be square of equal size");
  auto rho_of = [&](const Vec& xi) {
    RatMatrix r(da, da);
    for (std::size_t b = 0; b < dh; ++b) {
      if (xi[b] == 0) continue;
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
          r.at(i, j) += xi[b] * spec.action[b].at(i, j);
    }
    return r;
  };
  // rho([xi_a, xi_b]) = rho(xi_a) rho(xi_b) - rho(xi_b) rho(xi_a)
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = a + 1; b < dh; ++b) {
      RatMatrix lhs = rho_of(spec.h.basis_bracket(a, b));
      RatMatrix comm = spec.action[a] * spec.action[b];
      RatMatrix rev = spec.action[b] * spec.action[a];
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
          if (lhs.at(i, j) != comm.at(i, j) - rev.at(i, j))
            throw HomomorphismFailure("action is not a Lie algebra homomorphism");
    }

  const std::size_t dim = dh + da;
  check_cap(dim);
  std::vector<std::string> names = spec.h.names();
  for (std::size_t i = 1; i <= da; ++i) names.push_back("A" + std::to_string(i));
  BracketMap lower;
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = a + 1; b < dh; ++b) {
      const Vec& hb = spec.h.basis_bracket(a, b);
      if (is_zero(hb)) continue;
      Vec v = zero_vec(dim);
      for (std::size_t t = 0; t < dh; ++t) v[t] = hb[t];
      lower[{a, b}] = std::move(v);
    }
  for (std::size_t b = 0; b < dh; ++b)
    for (std::size_t j = 0; j < da; ++j) {
      Vec col(da);
      for (std::size_t i = 0; i < da; ++i) col[i] = spec.action[b].at(i, j);
      if (is_zero(col)) continue;
      Vec v = zero_vec(dim);
      for (std::size_t i = 0; i < da; ++i) v[dh + i] = col[i];
      lower[{b, dh + j}] = std::move(v);  // [xi_b, a_j] = rho(xi_b) a_j
    }
  LieAlgebra g = LieAlgebra::from_brackets(std::move(names), lower);

  std::vector<Vec> a_rows;
  for (std::size_t i = 0; i < da; ++i) a_rows.push_back(unit_vec(dim, dh + i));
  Subspace a = Subspace::span_of(a_rows, dim);
  if (!is_abelian_subspace(g, a) || !is_ideal(g, a))
    throw ConstructionFailure("semidirect: A is not an abelian ideal");
  return g;
}

Subspace h_nu_stabilizer(const SemidirectSpec& spec, const Vec& nu) {
  const std::size_t dh = spec.h.dim();
  const std::size_t da = spec.action.empty() ? 0 : spec.action[0].rows();
  if (nu.size() != da) throw DimensionError("nu must live on A");
  RatMatrix k(da, dh);
  for (std::size_t b = 0; b < dh; ++b) {
    Vec col = spec.action[b].transpose().apply(nu);
    for (std::size_t i = 0; i < da; ++i) k.at(i, b) = col[i];
  }
  return Subspace::span_of(kernel_basis(k), dh);
}

SemidirectSpec se2_spec() {
  LieAlgebra so2 = LieAlgebra::from_brackets({"R"}, {});
  RatMatrix rot(2, 2);
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  return SemidirectSpec{std::move(so2), {rot}};
}

}  // namespace catalog
}  // namespace liered
