#include <CLI11.hpp>

#include <iostream>

#include "heisurf/cli/suite.hpp"
#include "heisurf/elim/ideal_file.hpp"

using namespace heisurf;

namespace {

std::pair<unsigned, unsigned> parse_pair(const std::string& text, const std::string& what) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(what + " must be written as A,B");
  try {
    return {static_cast<unsigned>(std::stoul(text.substr(0, comma))), static_cast<unsigned>(std::stoul(text.substr(comma + 1)))};
  } catch (const std::exception&) {
    throw Error("cannot parse " + what + " '" + text + "'");
  }
}

Param parse_param(const std::string& text) {
  if (text.empty() || text == "symbolic") return std::nullopt;
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw Error("not a rational number: '" + text + "'");
  }
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

// "trivial" or "t=0,chi=2"
HeisCharacter parse_character(const HeisType& t, const std::string& text) {
  if (text == "trivial") return trivial_character(t);
  HeisCharacter chi;
  for (const auto& part : split_names(text)) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error("character entries are written gen=k, got '" + part + "'");
    std::string name = part.substr(0, eq);
    heis_generator(t, name);
    unsigned long k = 0;
    try {
      k = std::stoul(part.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("bad exponent in character entry '" + part + "'");
    }
    chi.values.emplace_back(name, static_cast<unsigned>(k % t.n()));
  }
  return chi;
}

void print_matrix(const RepMatrix& m, std::ostream& os) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]\n";
  }
}

void print_certificate(const EmptinessCertificate& c) {
  std::cout << (c.empty ? "empty" : "nonempty") << "\n";
  for (const auto& [v, k] : c.pure_powers) std::cout << "  " << v << "^" << k << " is a leading monomial\n";
  for (const auto& v : c.missing) std::cout << "  no pure power of " << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Heisenberg-invariant surface constructions"};
  app.require_subcommand(1);

  SuiteOptions suite;
  std::string json_path;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--filter", suite.filter, "Glob on check ids")->capture_default_str();
  verify->add_option("--seed", suite.seed, "Random seed")->capture_default_str();
  verify->add_option("--prime", suite.prime, "Prime for modular checks")->capture_default_str();
  verify->add_option("--json", json_path, "Write the JSON report to PATH ('-' for stdout)");
  verify->add_option("--octic", suite.octic, "Octic F(c, x) file for the star3 rank probe");
  verify->add_option("--threads", suite.threads, "Worker threads (0: all cores)");
  verify->add_flag("--timings", timings, "Include elapsed_ms per check");

  auto* chpp = app.add_subcommand("chpp", "CHPP family computations");
  chpp->require_subcommand(1);
  std::string lambda_text;
  auto* disc = chpp->add_subcommand("disc", "Discriminant of the 4x4 determinant");
  disc->add_option("--lambda", lambda_text, "Numeric lambda (default symbolic)");

  auto* pp4 = app.add_subcommand("pp4", "PP4 family computations");
  pp4->require_subcommand(1);
  std::string mu_text;
  bool symbolic = false;
  auto* branch = pp4->add_subcommand("branch-locus", "Branch sextic in s1, s2, s3");
  auto* mu_opt = branch->add_option("--mu", mu_text, "Numeric mu");
  branch->add_flag("--symbolic", symbolic, "Keep mu symbolic (default)")->excludes(mu_opt);

  auto* heis = app.add_subcommand("heis", "Heisenberg group representations");
  heis->require_subcommand(1);
  std::string type_text;
  bool dual = false;
  auto* rep = heis->add_subcommand("rep", "Schrodinger representation matrices");
  rep->add_option("--type", type_text, "Polarization type D1,D2")->required();
  rep->add_flag("--dual", dual, "Print the dual representation");

  std::string family, degrees_text, character_text = "trivial";
  auto* inv = app.add_subcommand("invariants", "Family invariants and eigenspaces");
  inv->add_option("--family", family, "CHPP, PP4, HESSE3, AC3 or QUARTIC4")->required();
  inv->add_option("--degrees", degrees_text, "d,e for Sym^d(V^vee) (x) Sym^e(V)");
  inv->add_option("--character", character_text, "trivial, all, or gen=k,... ")->capture_default_str();

  std::string ideal_path, order = "grevlex";
  auto* gb = app.add_subcommand("groebner", "Reduced Groebner basis of an ideal file");
  gb->add_option("--ideal", ideal_path, "Ideal file")->required();
  gb->add_option("--order", order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}))->capture_default_str();

  std::string octic_path;
  std::uint64_t probe_prime = 10007, probe_seed = 1;
  std::size_t samples = 20;
  unsigned probe_threads = 1;
  auto* probe = app.add_subcommand("probe-rank", "Jacobian rank probe of the star3 system");
  probe->add_option("--octic", octic_path, "Octic F(c, x) file")->required();
  probe->add_option("--prime", probe_prime)->capture_default_str();
  probe->add_option("--samples", samples)->capture_default_str();
  probe->add_option("--seed", probe_seed)->capture_default_str();
  probe->add_option("--threads", probe_threads)->capture_default_str();

  std::string projective;
  auto* smooth = app.add_subcommand("smooth", "Projective emptiness certificate of an ideal");
  smooth->add_option("--ideal", ideal_path, "Ideal file")->required();
  smooth->add_option("--projective", projective, "Projective variables, comma separated")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      VerificationReport report = run_suite(suite);
      if (json_path == "-") {
        emit_json(report, "-", timings);
      } else {
        emit_text(report, std::cout, timings);
        emit_summary(report, std::cout);
        if (!json_path.empty()) emit_json(report, json_path, timings);
      }
      return report.exit_code();
    }
    if (*disc) {
      std::cout << chpp_discriminant(parse_param(lambda_text)).to_string() << "\n";
      return 0;
    }
    if (*branch) {
      std::cout << pp4_branch_locus(symbolic ? std::nullopt : parse_param(mu_text)).to_string() << "\n";
      return 0;
    }
    if (*rep) {
      auto [d1, d2] = parse_pair(type_text, "--type");
      HeisType t(d1, d2);
      auto r = dual ? dual_rep(t) : schrodinger_rep(t);
      std::cout << "type " << t.to_string() << ", dimension " << t.delta() << ", field Q(zeta(" << t.n() << "))\n";
      for (const auto& [name, m] : r.generators) {
        std::cout << name << ":\n";
        print_matrix(m, std::cout);
      }
      auto rel = verify_group_relations(t);
      for (const auto& line : rel.lines) std::cout << line << "\n";
      std::cout << "relations " << (rel.pass ? "hold" : "FAIL") << "\n";
      return rel.pass ? 0 : 1;
    }
    if (*inv) {
      auto n = numeric_invariants(family);
      std::cout << family << ": d=" << n.d << " delta=" << n.delta << " K2=" << n.k2 << " K2'=" << n.k2_cover
                << " chi=" << n.chi << " chi'=" << n.chi_cover << " pg=" << n.pg << " q=" << n.q
                << " c2=" << (n.c2 ? std::to_string(*n.c2) : "-") << "\n";
      if (degrees_text.empty()) return 0;
      auto [d, e] = parse_pair(degrees_text, "--degrees");
      HeisType t(1, static_cast<unsigned>(n.delta));
      GradedModule m(t, d, e);
      std::vector<HeisCharacter> chars =
          character_text == "all" ? all_characters(t) : std::vector<HeisCharacter>{parse_character(t, character_text)};
      std::cout << "Sym^" << d << "(V^vee) (x) Sym^" << e << "(V), type " << t.to_string() << ", dimension " << m.dim() << "\n";
      std::size_t found = 0;
      for (const auto& chi : chars) {
        auto basis = eigenspace_basis(t, m, chi);
        found += basis.size();
        if (basis.empty() && chars.size() > 1) continue;
        std::cout << "character " << chi.to_string() << ": dimension " << basis.size() << "\n";
        for (const auto& f : basis) std::cout << "  " << f.to_string() << "\n";
      }
      if (found == 0 && chars.size() > 1)
        std::cout << "no character eigenvectors: the centre acts by "
                  << Cyclotomic::zeta(t.n(), static_cast<long long>(e) - static_cast<long long>(d))
                  << ", so only subgroups with commuting lifts (e.g. t^2, chi) have eigenspaces\n";
      return 0;
    }
    if (*gb) {
      auto file = read_poly_file(ideal_path);
      auto ring = make_ring<Rational>(file.ring->vars.names(), {},
                                      order == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex);
      std::vector<QPoly> gens;
      for (const auto& f : file.polys) gens.push_back(change_ring(f, ring, [](const Rational& c) { return c; }));
      auto basis = groebner(IdealBasis<Rational>(ring, gens));
      for (const auto& g : basis.basis()) std::cout << g.to_string() << "\n";
      return 0;
    }
    if (*probe) {
      auto r = star3_rank_probe(octic_path, probe_prime, samples, probe_seed, probe_threads);
      std::cout << "max rank " << r.probe.max_rank << " over " << r.probe.ranks.size() << " samples mod " << probe_prime
                << "\n";
      if (!r.probe.witness.empty()) {
        std::cout << "witness sample " << r.probe.witness_sample << ":";
        for (std::size_t i = 0; i < r.probe.witness.size(); ++i)
          std::cout << " " << octic_vars()[i] << "=" << r.probe.witness[i];
        std::cout << "\n";
      }
      std::cout << (r.verified ? "claim verified (rank 3)" : "claim unverified") << "\n";
      return 0;
    }
    if (*smooth) {
      auto file = read_poly_file(ideal_path);
      print_certificate(is_projectively_empty(IdealBasis<Rational>(file.ring, file.polys), split_names(projective)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
