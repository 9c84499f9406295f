#include "liered/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "liered/structure.hpp"

namespace liered {
namespace io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(Line{number, std::move(tokens)});
  }
  return lines;
}

struct ParsedAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::map<std::pair<std::size_t, std::size_t>, Vec> lower;
  std::vector<GradingLayer> grading;
  std::vector<Line> extra;  // certificate / action sections
};

std::size_t lookup(const ParsedAlgebra& p, const Line& line, const std::string& name) {
  for (std::size_t i = 0; i < p.names.size(); ++i)
    if (p.names[i] == name) return i;
  throw ParseError(line.number, "unknown basis name '" + name + "'");
}

Rat coeff_token(const Line& line, const std::string& tok) {
  try {
    return parse_rational(tok);
  } catch (const Error&) {
    throw ParseError(line.number, "bad coefficient '" + tok + "'");
  }
}

ParsedAlgebra parse(const std::string& text) {
  ParsedAlgebra p;
  bool have_dim = false, have_basis = false, in_extra = false;
  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens.front();
    if (in_extra || head == "certificate") {
      in_extra = true;
      p.extra.push_back(line);
      continue;
    }
    if (head == "dim") {
      if (have_dim) throw ParseError(line.number, "duplicate dim line");
      if (line.tokens.size() != 2)
        throw ParseError(line.number, "expected: dim <N>");
      try {
        long v = std::stol(line.tokens[1]);
        if (v < 0) throw std::invalid_argument("negative");
        p.dim = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw ParseError(line.number, "bad dimension '" + line.tokens[1] + "'");
      }
      have_dim = true;
    } else if (head == "basis") {
      if (!have_dim) throw ParseError(line.number, "basis line before dim line");
      if (have_basis) throw ParseError(line.number, "duplicate basis line");
      if (line.tokens.size() != p.dim + 1)
        throw ParseError(line.number, "basis line must name exactly dim vectors");
      p.names.assign(line.tokens.begin() + 1, line.tokens.end());
      for (std::size_t i = 0; i < p.names.size(); ++i)
        for (std::size_t j = i + 1; j < p.names.size(); ++j)
          if (p.names[i] == p.names[j])
            throw ParseError(line.number, "duplicate basis name '" + p.names[i] + "'");
      have_basis = true;
    } else if (head == "bracket") {
      if (!have_basis) throw ParseError(line.number, "bracket line before basis line");
      // bracket <a> <b> = <coeff> <name> [+ <coeff> <name>]...
      if (line.tokens.size() < 6 || line.tokens[3] != "=")
        throw ParseError(line.number,
                         "expected: bracket <a> <b> = <coeff> <name> [+ ...]");
      std::size_t a = lookup(p, line, line.tokens[1]);
      std::size_t b = lookup(p, line, line.tokens[2]);
      if (a >= b)
        throw ParseError(line.number,
                         "bracket pairs must satisfy index(a) < index(b)");
      Vec value = zero_vec(p.dim);
      std::size_t pos = 4;
      for (;;) {
        if (pos >= line.tokens.size())
          throw ParseError(line.number, "dangling term");
        Rat c = coeff_token(line, line.tokens[pos]);
        if (pos + 1 >= line.tokens.size())
          throw ParseError(line.number, "coefficient without basis name");
        std::size_t k = lookup(p, line, line.tokens[pos + 1]);
        value[k] += c;
        pos += 2;
        if (pos == line.tokens.size()) break;
        if (line.tokens[pos] != "+")
          throw ParseError(line.number, "expected '+' between terms");
        ++pos;
      }
      if (p.lower.count({a, b}))
        throw ParseError(line.number, "duplicate bracket for this pair");
      p.lower[{a, b}] = std::move(value);
    } else if (head == "grading") {
      if (!have_basis) throw ParseError(line.number, "grading line before basis line");
      // grading <k>: <names...>   (the colon may be attached to k)
      if (line.tokens.size() < 3)
        throw ParseError(line.number, "expected: grading <k>: <names...>");
      std::string ktok = line.tokens[1];
      std::size_t name_start = 2;
      if (!ktok.empty() && ktok.back() == ':') {
        ktok.pop_back();
      } else if (line.tokens[2] == ":") {
        name_start = 3;
      } else {
        throw ParseError(line.number, "expected ':' after the grading weight");
      }
      int weight = 0;
      try {
        weight = std::stoi(ktok);
      } catch (const std::exception&) {
        throw ParseError(line.number, "bad grading weight '" + ktok + "'");
      }
      if (weight <= 0) throw ParseError(line.number, "grading weight must be positive");
      if (name_start >= line.tokens.size())
        throw ParseError(line.number, "empty grading layer");
      std::vector<Vec> rows;
      for (std::size_t t = name_start; t < line.tokens.size(); ++t)
        rows.push_back(unit_vec(p.dim, lookup(p, line, line.tokens[t])));
      p.grading.push_back(
          {weight, Subspace::span_of(rows, p.dim)});
    } else if (head == "action") {
      p.extra.push_back(line);
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!have_dim) throw ParseError(0, "missing dim line");
  if (!have_basis) throw ParseError(0, "missing basis line");
  return p;
}

}  // namespace

LieAlgebra read_algebra(const std::string& text) {
  ParsedAlgebra p = parse(text);
  return LieAlgebra::from_brackets(p.names, p.lower, p.grading);
}

std::string write_algebra(const LieAlgebra& g) {
  std::ostringstream out;
  const std::size_t n = g.dim();
  out << "dim " << n << "\n";
  out << "basis";
  for (const std::string& name : g.names()) out << " " << name;
  out << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec& c = g.basis_bracket(i, j);
      if (is_zero(c)) continue;
      out << "bracket " << g.names()[i] << " " << g.names()[j] << " =";
      bool first = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k] == 0) continue;
        out << (first ? " " : " + ") << rat_to_string(c[k]) << " " << g.names()[k];
        first = false;
      }
      out << "\n";
    }
  if (g.has_grading()) {
    auto layers = g.grading();
    std::sort(layers.begin(), layers.end(),
              [](const GradingLayer& a, const GradingLayer& b) {
                return a.weight < b.weight;
              });
    for (const GradingLayer& layer : layers) {
      out << "grading " << layer.weight << ":";
      // Layers written via their canonical rows; catalog layers are spans of
      // named basis vectors, which round-trip exactly.
      for (const Vec& row : layer.space.basis_rows()) {
        std::size_t k = 0, count = 0;
        for (std::size_t t = 0; t < row.size(); ++t)
          if (row[t] != 0) {
            ++count;
            k = t;
          }
        if (count != 1 || row[k] != 1)
          throw Error("write_algebra: grading layer is not a span of basis vectors");
        out << " " << g.names()[k];
      }
      out << "\n";
    }
  }
  return out.str();
}

ASimpleCertificate read_certificate(const std::string& text, const LieAlgebra& g) {
  ParsedAlgebra p = parse(text);
  ASimpleCertificate cert{maximal_abelian_ideal(g), {}, {}, {}};
  bool started = false;
  for (const Line& line : p.extra) {
    if (line.tokens.front() == "certificate") {
      started = true;
      continue;
    }
    if (!started || line.tokens.front() != "witness")
      throw ParseError(line.number, "expected 'witness <X> <Y>' inside certificate");
    if (line.tokens.size() != 3)
      throw ParseError(line.number, "expected: witness <X_name> <Y_name>");
    auto xi = g.name_index(line.tokens[1]);
    auto yi = g.name_index(line.tokens[2]);
    if (!xi || !yi)
      throw ParseError(line.number, "witness names must be basis names");
    cert.x_basis.push_back(unit_vec(g.dim(), *xi));
    cert.y_witnesses.push_back(unit_vec(g.dim(), *yi));
  }
  if (!started) throw ParseError(0, "no certificate section found");
  for (std::size_t i = 0; i < cert.x_basis.size(); ++i)
    cert.brackets.push_back(g.bracket(cert.x_basis[i], cert.y_witnesses[i]));
  return cert;
}

std::string write_certificate(const LieAlgebra& g, const ASimpleCertificate& cert) {
  auto name_of = [&](const Vec& v) -> std::string {
    std::size_t k = 0, count = 0;
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t] != 0) {
        ++count;
        k = t;
      }
    if (count != 1 || v[k] != 1)
      throw Error("write_certificate: witnesses must be named basis vectors");
    return g.names()[k];
  };
  std::ostringstream out;
  out << "certificate\n";
  for (std::size_t i = 0; i < cert.x_basis.size(); ++i)
    out << "witness " << name_of(cert.x_basis[i]) << " "
        << name_of(cert.y_witnesses[i]) << "\n";
  return out.str();
}

catalog::SemidirectSpec read_semidirect(const std::string& text) {
  ParsedAlgebra p = parse(text);
  LieAlgebra h = LieAlgebra::from_brackets(p.names, p.lower, p.grading);
  std::map<std::size_t, RatMatrix> actions;
  std::size_t dim_a = 0;
  for (const Line& line : p.extra) {
    if (line.tokens.front() != "action")
      throw ParseError(line.number, "expected action lines only");
    // action <name> = r r r ; r r r ; ...
    if (line.tokens.size() < 4 || line.tokens[2] != "=")
      throw ParseError(line.number, "expected: action <name> = row ; row ; ...");
    auto idx = h.name_index(line.tokens[1]);
    if (!idx) throw ParseError(line.number, "unknown h basis name");
    std::vector<std::vector<Rat>> rows(1);
    for (std::size_t t = 3; t < line.tokens.size(); ++t) {
      if (line.tokens[t] == ";") {
        rows.emplace_back();
        continue;
      }
      rows.back().push_back(coeff_token(line, line.tokens[t]));
    }
    if (rows.back().empty()) rows.pop_back();
    if (rows.empty()) throw ParseError(line.number, "empty action matrix");
    std::size_t cols = rows.front().size();
    if (rows.size() != cols)
      throw ParseError(line.number, "action matrices must be square");
    for (const auto& r : rows)
      if (r.size() != cols)
        throw ParseError(line.number, "ragged action matrix");
    if (dim_a == 0) dim_a = cols;
    if (cols != dim_a)
      throw ParseError(line.number, "action matrices must share one size");
    RatMatrix m(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j) m.at(i, j) = rows[i][j];
    actions.emplace(*idx, std::move(m));
  }
  if (actions.size() != h.dim())
    throw ParseError(0, "need one action line per h basis vector");
  catalog::SemidirectSpec spec{std::move(h), {}};
  for (std::size_t b = 0; b < spec.h.dim(); ++b) spec.action.push_back(actions.at(b));
  return spec;
}

}  // namespace io
}  // namespace liered
