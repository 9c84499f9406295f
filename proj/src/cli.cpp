#include "liered/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "liered/io.hpp"

namespace liered {
namespace cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

Vec parse_named_covector(const LieAlgebra& g, const std::string& text) {
  Vec mu = zero_vec(g.dim());
  if (text.empty()) return mu;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("expected name=value in '" + item + "'");
    std::string name = item.substr(0, eq);
    auto idx = g.name_index(name);
    if (!idx) throw Error("unknown basis name '" + name + "'");
    mu[*idx] = parse_rational(item.substr(eq + 1));
  }
  return mu;
}

std::string vec_string(const LieAlgebra& g, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += rat_to_string(v[i]) + "*";
    s += g.names()[i];
  }
  return s.empty() ? "0" : s;
}

Json vec_json(const Vec& v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(rat_to_string(x));
  return arr;
}

Json subspace_json(const LieAlgebra& g, const Subspace& s) {
  Json arr = Json::array();
  for (const Vec& row : s.basis_rows()) arr.push_back(vec_string(g, row));
  return arr;
}

void emit(std::ostream& out, bool json, const Json& payload,
          const std::vector<std::string>& human) {
  if (json) {
    out << payload.dump(2) << "\n";
  } else {
    for (const std::string& line : human) out << line << "\n";
  }
}

/// The abelian ideal every verdict-style command analyzes against: the greedy
/// maximal abelian ideal for metabelian algebras, the center otherwise.
std::pair<Subspace, std::string> default_ideal(const LieAlgebra& g) {
  if (is_metabelian(g))
    return {maximal_abelian_ideal(g), "maximal abelian ideal (greedy)"};
  return {center(g), "center (g is not metabelian)"};
}

struct Options {
  std::string file = "-";
  std::string mu_text;
  std::string mu_tilde_text;
  std::string nu_text;
  std::string cert_file;
  bool random = false;
  std::size_t trials = 5;
  long bound = 10000;
  std::uint64_t seed = 1;
  std::size_t budget = 64;
  bool json = false;
};

int cmd_catalog(const std::vector<std::string>& params, std::ostream& out,
                std::ostream& err) {
  if (params.empty()) {
    err << "catalog: missing family name\n";
    return kInputError;
  }
  const std::string& family = params[0];
  auto need = [&](std::size_t count) {
    if (params.size() != count + 1)
      throw Error("catalog " + family + ": expected " + std::to_string(count) +
                  " parameter(s)");
  };
  auto arg = [&](std::size_t i) {
    return static_cast<std::size_t>(std::stoul(params[i]));
  };
  LieAlgebra g = [&] {
    if (family == "heisenberg") {
      need(1);
      return catalog::heisenberg(arg(1));
    }
    if (family == "cartan" || family == "f23") {
      need(0);
      return catalog::cartan_f23();
    }
    if (family == "f24") {
      need(0);
      return catalog::free_f24();
    }
    if (family == "filiform") {
      need(1);
      return catalog::filiform(arg(1));
    }
    if (family == "jet") {
      need(3);
      return catalog::jet(arg(1), arg(2), arg(3));
    }
    if (family == "se2") {
      need(0);
      return catalog::se2();
    }
    throw Error("unknown family '" + family + "'");
  }();
  out << io::write_algebra(g);
  return kOk;
}

Json analysis_json(const LieAlgebra& g, const MomentumAnalysis& a) {
  Json j;
  j["mu"] = vec_json(a.mu);
  j["orbit_dim"] = a.orbit_dim;
  j["isotropy_dim"] = a.isotropy.dim();
  j["isotropy"] = subspace_json(g, a.isotropy);
  j["dimension_condition"] = a.dim_condition_holds;
  j["isotropy_in_a"] = a.isotropy_in_a;
  j["t_injective"] = a.t_injective;
  if (a.psi) j["psi"] = rat_to_string(*a.psi);
  return j;
}

int cmd_analyze(const Options& opt, std::istream& in, std::ostream& out) {
  LieAlgebra g = io::read_algebra(read_input(opt.file, in));
  StructureReport r = analyze_structure(g);
  Json j;
  j["command"] = "analyze";
  j["dim"] = g.dim();
  j["names"] = g.names();
  Json dims = Json::array();
  for (const Subspace& s : r.series) dims.push_back(s.dim());
  j["series_dims"] = dims;
  j["nilpotent"] = r.step.has_value();
  if (r.step) j["step"] = *r.step;
  j["center"] = subspace_json(g, r.center);
  j["second_center"] = subspace_json(g, r.second_center);
  j["derived"] = subspace_json(g, r.derived);
  j["metabelian"] = r.is_metabelian;
  j["grading"] = r.grading == GradingCheck::NotDeclared          ? "not declared"
                 : r.grading == GradingCheck::Invalid            ? "invalid"
                 : r.grading == GradingCheck::ValidStratification ? "stratification"
                                                                  : "grading";
  if (r.carnot_rank) j["rank"] = *r.carnot_rank;
  std::vector<std::string> human;
  human.push_back("dim: " + std::to_string(g.dim()));
  std::string sd = "series dims:";
  for (const Subspace& s : r.series) sd += " " + std::to_string(s.dim());
  human.push_back(sd);
  human.push_back(r.step ? "nilpotent of step " + std::to_string(*r.step)
                         : "not nilpotent");
  human.push_back("center dim: " + std::to_string(r.center.dim()));
  human.push_back("second center dim: " + std::to_string(r.second_center.dim()));
  human.push_back("derived dim: " + std::to_string(r.derived.dim()));
  human.push_back(std::string("metabelian: ") + (r.is_metabelian ? "yes" : "no"));
  human.push_back("grading: " + j["grading"].get<std::string>());
  if (r.carnot_rank) human.push_back("rank: " + std::to_string(*r.carnot_rank));
  if (r.is_metabelian) {
    Subspace a = maximal_abelian_ideal(g);
    j["maximal_abelian_ideal"] = subspace_json(g, a);
    j["maximal_abelian_ideal_dim"] = a.dim();
    human.push_back("maximal abelian ideal dim: " + std::to_string(a.dim()));
    for (const Vec& row : a.basis_rows())
      human.push_back("  a: " + vec_string(g, row));
  }
  j["exit_code"] = kOk;
  emit(out, opt.json, j, human);
  return kOk;
}

int cmd_asimple(const Options& opt, std::istream& in, std::ostream& out) {
  LieAlgebra g = io::read_algebra(read_input(opt.file, in));
  auto [a, a_label] = default_ideal(g);
  ASimpleVerdict verdict{ASimpleVerdict::Status::Unknown, std::nullopt, ""};
  std::string route;
  bool onedim_route = is_metabelian(g) && center(g).dim() == 1 && g.has_grading() &&
                      verify_stratification(g) &&
                      a.contains(derived_subalgebra(g)) && centralizer(g, a) == a;
  if (!necessary_condition(g, a)) {
    verdict = heuristic_search(g, a, opt.seed, opt.budget);  // short-circuits
    route = "necessary condition";
  } else if (onedim_route) {
    verdict = certify_onedim_center(g, a);
    route = "one-dimensional center construction";
  } else {
    verdict = heuristic_search(g, a, opt.seed, opt.budget);
    route = "heuristic search";
  }
  std::string status = verdict.status == ASimpleVerdict::Status::ProvenYes ? "PROVEN_YES"
                       : verdict.status == ASimpleVerdict::Status::ProvenNo
                           ? "PROVEN_NO"
                           : "UNKNOWN";
  Json j;
  j["command"] = "asimple";
  j["status"] = status;
  j["route"] = route;
  j["a"] = subspace_json(g, a);
  j["a_choice"] = a_label;
  if (!verdict.reason.empty()) j["reason"] = verdict.reason;
  j["seed"] = opt.seed;
  std::vector<std::string> human{"A-simple: " + status + "  [" + route + "]"};
  if (!verdict.reason.empty()) human.push_back("reason: " + verdict.reason);
  human.push_back("a (" + a_label + "), dim " + std::to_string(a.dim()));
  if (verdict.certificate) {
    Json wit = Json::array();
    for (std::size_t i = 0; i < verdict.certificate->x_basis.size(); ++i) {
      std::string line = "[" + vec_string(g, verdict.certificate->x_basis[i]) + ", " +
                         vec_string(g, verdict.certificate->y_witnesses[i]) + "] = " +
                         vec_string(g, verdict.certificate->brackets[i]);
      wit.push_back(line);
      human.push_back("witness: " + line);
    }
    j["witnesses"] = wit;
  }
  int code = verdict.status == ASimpleVerdict::Status::ProvenNo ? kNegative : kOk;
  j["exit_code"] = code;
  emit(out, opt.json, j, human);
  return code;
}

int cmd_basis(const Options& opt, std::istream& in, std::ostream& out) {
  std::string text = read_input(opt.file, in);
  LieAlgebra g = io::read_algebra(text);
  std::string cert_text = opt.cert_file.empty() ? text : read_input(opt.cert_file, in);
  ASimpleCertificate cert = io::read_certificate(cert_text, g);
  CanonicalBasis basis = canonical_basis(g, cert);
  Json j;
  j["command"] = "basis";
  auto list = [&](const std::vector<Vec>& vs) {
    Json arr = Json::array();
    for (const Vec& v : vs) arr.push_back(vec_string(g, v));
    return arr;
  };
  j["Z0"] = vec_string(g, basis.z0);
  j["Z_I"] = list(basis.z_i);
  j["Y_j"] = list(basis.y_j);
  j["Y_a"] = list(basis.y_a);
  j["X_i"] = list(basis.x_i);
  std::vector<std::string> human;
  human.push_back("Z0:  " + vec_string(g, basis.z0));
  for (const Vec& v : basis.z_i) human.push_back("Z_I: " + vec_string(g, v));
  for (const Vec& v : basis.y_j) human.push_back("Y_j: " + vec_string(g, v));
  for (const Vec& v : basis.y_a) human.push_back("Y_a: " + vec_string(g, v));
  for (const Vec& v : basis.x_i) human.push_back("X_i: " + vec_string(g, v));
  for (std::size_t i = 0; i < basis.n(); ++i)
    for (std::size_t jx = 0; jx < basis.n(); ++jx)
      human.push_back("[X_" + std::to_string(i + 1) + ",Y_" + std::to_string(jx + 1) +
                      "] = " + vec_string(g, g.bracket(basis.x_i[i], basis.y_j[jx])));
  j["exit_code"] = kOk;
  emit(out, opt.json, j, human);
  return kOk;
}

int cmd_equivalence(const Options& opt, std::istream& in, std::ostream& out) {
  std::string text = read_input(opt.file, in);
  LieAlgebra g = io::read_algebra(text);
  auto [a, a_label] = default_ideal(g);
  Json j;
  j["command"] = "equivalence";
  j["a"] = subspace_json(g, a);
  j["a_choice"] = a_label;
  std::vector<std::string> human;
  int code = kOk;
  if (opt.random) {
    GenericReport r = generic_scan(g, a, opt.trials, opt.bound, opt.seed);
    bool all = r.equivalent_count == r.trials;
    j["mode"] = r.label;
    j["trials"] = r.trials;
    j["bound"] = r.bound;
    j["seed"] = r.seed;
    j["max_orbit_dim"] = r.max_orbit_dim;
    j["equivalent_count"] = r.equivalent_count;
    if (r.representative) j["representative_mu"] = vec_json(*r.representative);
    Json samples = Json::array();
    for (const GenericTrial& s : r.samples) {
      Json e;
      e["orbit_dim"] = s.orbit_dim;
      e["equivalent"] = s.equivalent;
      samples.push_back(e);
    }
    j["samples"] = samples;
    human.push_back("generic scan (" + std::to_string(r.trials) + " trials, bound " +
                    std::to_string(r.bound) + ", seed " + std::to_string(r.seed) + ")");
    human.push_back("max orbit dim: " + std::to_string(r.max_orbit_dim));
    human.push_back("equivalent: " + std::to_string(r.equivalent_count) + "/" +
                    std::to_string(r.trials) + " trials  [" + r.label + "]");
    code = all ? kOk : kNegative;
    if (!nilpotency_step(g)) {
      j["caveats"] = Json::array(
          {"Lie-algebra level; assumes G_mu connected / G simply connected"});
      human.push_back(
          "caveat: Lie-algebra level; assumes G_mu connected / G simply connected");
    }
  } else {
    Vec mu = parse_named_covector(g, opt.mu_text);
    EquivalenceVerdict v = equivalence_verdict(g, a, mu);
    if (!opt.cert_file.empty()) {
      ASimpleCertificate cert =
          io::read_certificate(read_input(opt.cert_file, in), g);
      CanonicalBasis basis = canonical_basis(g, cert);
      v.analysis.psi = psi(g, basis, mu);
    }
    j["verdict"] = v.equivalent ? "EQUIVALENT" : "NOT_EQUIVALENT";
    j["reasons"] = v.reasons;
    j["caveats"] = v.caveats;
    j["analysis"] = analysis_json(g, v.analysis);
    human.push_back(std::string("verdict: ") +
                    (v.equivalent ? "EQUIVALENT" : "NOT_EQUIVALENT"));
    for (const std::string& r : v.reasons) human.push_back("reason: " + r);
    for (const std::string& c : v.caveats) human.push_back("caveat: " + c);
    human.push_back("orbit dim: " + std::to_string(v.analysis.orbit_dim));
    human.push_back("isotropy dim: " + std::to_string(v.analysis.isotropy.dim()));
    human.push_back(std::string("dimension condition: ") +
                    (v.analysis.dim_condition_holds ? "holds" : "fails"));
    if (v.analysis.psi)
      human.push_back("psi: " + rat_to_string(*v.analysis.psi));
    code = v.equivalent ? kOk : kNegative;
  }
  j["exit_code"] = code;
  emit(out, opt.json, j, human);
  return code;
}

int cmd_psi(const Options& opt, std::istream& in, std::ostream& out) {
  std::string text = read_input(opt.file, in);
  LieAlgebra g = io::read_algebra(text);
  std::string cert_text = opt.cert_file.empty() ? text : read_input(opt.cert_file, in);
  ASimpleCertificate cert = io::read_certificate(cert_text, g);
  CanonicalBasis basis = canonical_basis(g, cert);
  Vec mu = parse_named_covector(g, opt.mu_text);
  Rat value = psi(g, basis, mu);
  Json j;
  j["command"] = "psi";
  j["psi"] = rat_to_string(value);
  j["exit_code"] = kOk;
  emit(out, opt.json, j, {"psi: " + rat_to_string(value)});
  return kOk;
}

int cmd_shift(const Options& opt, std::istream& in, std::ostream& out,
              std::ostream& err) {
  LieAlgebra g = io::read_algebra(read_input(opt.file, in));
  auto [a, a_label] = default_ideal(g);
  Vec mu = parse_named_covector(g, opt.mu_text);
  Vec mu_tilde = parse_named_covector(g, opt.mu_tilde_text);
  ShiftResult r = coadjoint_shift(g, a, mu, mu_tilde);
  Json j;
  j["command"] = "shift";
  j["a_choice"] = a_label;
  if (r.status == ShiftResult::Status::RestrictionMismatch) {
    err << "shift: restriction mismatch: i*(mu) != i*(mu_tilde)\n";
    return kInputError;
  }
  if (r.status == ShiftResult::Status::NoShift) {
    j["status"] = "NoShift";
    j["exit_code"] = kNegative;
    emit(out, opt.json, j, {"NoShift: mu - mu_tilde outside range of T*_mu"});
    return kNegative;
  }
  j["status"] = "Found";
  j["Y"] = vec_string(g, r.y);
  j["exit_code"] = kOk;
  emit(out, opt.json, j, {"Y = " + vec_string(g, r.y)});
  return kOk;
}

int cmd_semidirect(const Options& opt, std::istream& in, std::ostream& out) {
  catalog::SemidirectSpec spec = io::read_semidirect(read_input(opt.file, in));
  LieAlgebra g = catalog::semidirect(spec);
  const std::size_t da = spec.action.empty() ? 0 : spec.action[0].rows();
  Vec nu = zero_vec(da);
  if (!opt.nu_text.empty()) {
    std::istringstream s(opt.nu_text);
    std::string item;
    std::size_t slot = 0;
    while (std::getline(s, item, ',')) {
      auto eq = item.find('=');
      if (eq != std::string::npos) {
        std::string name = item.substr(0, eq);
        auto idx = g.name_index(name);
        if (!idx || *idx < spec.h.dim())
          throw Error("unknown A coordinate '" + name + "'");
        nu[*idx - spec.h.dim()] = parse_rational(item.substr(eq + 1));
      } else {
        if (slot >= da) throw Error("too many nu coordinates");
        nu[slot++] = parse_rational(item);
      }
    }
  }
  Subspace h_nu = catalog::h_nu_stabilizer(spec, nu);
  bool trivial = h_nu.dim() == 0;
  Json j;
  j["command"] = "semidirect";
  j["nu"] = vec_json(nu);
  j["h_nu_dim"] = h_nu.dim();
  j["verdict"] = trivial ? "EQUIVALENT" : "NOT_EQUIVALENT";
  j["caveats"] = Json::array(
      {"infinitesimal stabilizer; discrete components are invisible"});
  j["exit_code"] = trivial ? kOk : kNegative;
  std::vector<std::string> human{
      "h_nu dim: " + std::to_string(h_nu.dim()),
      std::string("verdict: ") + (trivial ? "EQUIVALENT" : "NOT_EQUIVALENT") +
          " (infinitesimal; discrete components invisible)"};
  emit(out, opt.json, j, human);
  return trivial ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"liered: exact certificates for abelian vs nonabelian symplectic reduction"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_file = true) {
    if (with_file)
      sub->add_option("file", opt.file, "algebra file ('-' reads standard input)");
    sub->add_flag("--json", opt.json, "machine-readable output");
  };

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "emit a built-in algebra");
  std::vector<std::string> catalog_params;
  catalog_cmd->add_option("family", catalog_params,
                          "heisenberg n | cartan | f24 | filiform n | jet k n m | se2");

  CLI::App* analyze = app.add_subcommand("analyze", "structure report");
  add_common(analyze);

  CLI::App* asimple = app.add_subcommand("asimple", "A-simplicity verdict");
  add_common(asimple);
  asimple->add_option("--seed", opt.seed, "search seed");
  asimple->add_option("--budget", opt.budget, "candidate bases to try");

  CLI::App* basis = app.add_subcommand("basis", "canonical basis from a certificate");
  add_common(basis);
  basis->add_option("--cert", opt.cert_file, "certificate file (defaults to input)");

  CLI::App* equivalence =
      app.add_subcommand("equivalence", "per-mu or generic equivalence verdict");
  add_common(equivalence);
  equivalence->add_option("--mu", opt.mu_text, "covector, e.g. Z=1,X1=3/2");
  equivalence->add_flag("--random", opt.random, "seeded generic scan");
  equivalence->add_option("--trials", opt.trials, "scan trials");
  equivalence->add_option("--bound", opt.bound, "coordinate bound");
  equivalence->add_option("--seed", opt.seed, "scan seed");
  equivalence->add_option("--cert", opt.cert_file, "certificate for psi diagnostics");

  CLI::App* psi_cmd = app.add_subcommand("psi", "psi(mu) in the canonical basis");
  add_common(psi_cmd);
  psi_cmd->add_option("--cert", opt.cert_file, "certificate file (defaults to input)");
  psi_cmd->add_option("--mu", opt.mu_text, "covector, e.g. Z=1");

  CLI::App* shift = app.add_subcommand("shift", "coadjoint shift solver");
  add_common(shift);
  shift->add_option("--mu", opt.mu_text, "covector mu");
  shift->add_option("--mu-tilde", opt.mu_tilde_text, "covector mu~");

  CLI::App* semidirect =
      app.add_subcommand("semidirect", "infinitesimal stabilizer h_nu");
  add_common(semidirect);
  semidirect->add_option("--nu", opt.nu_text, "covector on A, e.g. A1=1,A2=0");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(catalog_params, out, err);
    if (analyze->parsed()) return cmd_analyze(opt, in, out);
    if (asimple->parsed()) return cmd_asimple(opt, in, out);
    if (basis->parsed()) return cmd_basis(opt, in, out);
    if (equivalence->parsed()) return cmd_equivalence(opt, in, out);
    if (psi_cmd->parsed()) return cmd_psi(opt, in, out);
    if (shift->parsed()) return cmd_shift(opt, in, out, err);
    if (semidirect->parsed()) return cmd_semidirect(opt, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidAlgebra& e) {
    const char* kind = e.kind == InvalidAlgebra::Kind::Jacobi ? "JacobiFailure"
                       : e.kind == InvalidAlgebra::Kind::Grading ? "GradingFailure"
                                                                 : "AntisymmetryFailure";
    err << kind << ": " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "no command\n";
  return kInputError;
}

}  // namespace cli
}  // namespace liered
