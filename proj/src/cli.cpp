#include "circunit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <vector>

#include "circunit/errors.hpp"
#include "circunit/io.hpp"
#include "circunit/real_basis.hpp"

namespace circunit {

namespace {

std::vector<int> levels_or(const RunConfig& c, std::vector<int> fallback) {
  if (c.n) return {*c.n};
  return fallback;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << j.dump(2) << "\n";
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto ns = levels_or(c, {4, 5, 6, 7});
  for (int n : ns) {
    if (n < 4) throw LevelTooSmall("verify needs n >= 4, got n = " + std::to_string(n));
    if (n >= 8 && !c.explore) {
      err << "n = " << n << " is outside the range 4..7; pass --explore for an exploratory run\n";
      return kUsage;
    }
  }
  VerifyOptions opts;
  opts.seed = c.seed;
  std::vector<Json> certs;
  bool all_trivial = true;
  for (int n : ns) {
    Certificate cert = verify_main_theorem(Level(n), opts);
    all_trivial = all_trivial && cert.trivial_only;
    std::ostream& summary = c.json_path == "-" ? err : out;
    summary << "n=" << n << " generators=" << cert.generators.size() << " rank=" << cert.rank
        << " nullity=" << cert.nullity << " trivial_only=" << (cert.trivial_only ? "true" : "false")
        << (cert.exhaustive ? " exhaustive=" : " spot_checked=") << cert.assignments_checked
        << (cert.exploratory ? " exploratory" : "") << "\n";
    certs.push_back(to_json(cert, c.timing));
  }
  if (!c.json_path.empty()) {
    if (c.json_path == "-") {
      out << (certs.size() == 1 ? certs[0] : Json(certs)).dump(2) << "\n";
    } else if (certs.size() == 1) {
      write_file(c.json_path, certs[0]);
    } else {
      std::filesystem::create_directories(c.json_path);
      for (std::size_t i = 0; i < certs.size(); ++i) {
        write_file(std::filesystem::path(c.json_path) / ("certificate_n" + std::to_string(ns[i]) + ".json"), certs[i]);
      }
    }
  }
  return all_trivial ? kOk : kNegative;
}

int cmd_tables(const RunConfig& c, std::ostream& out) {
  Json all = Json::array();
  for (int n : levels_or(c, {4, 5, 6, 7, 8})) {
    const Level lv(n);
    const auto s = s_table(lv);
    const auto r = r_table(lv);
    if (c.json) {
      all.push_back({{"n", std::to_string(n)}, {"s", s}, {"r", r}});
    } else {
      out << "n=" << n << "\n" << "s: " << join(s) << "\n" << "r: " << join(r) << "\n";
    }
  }
  if (c.json) out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kOk;
}

Json funnel_json(Level lv) {
  const FunnelLatticeReport rep = funnel_lattice_report(lv);
  Json inv = Json::array();
  for (const auto& d : rep.quotient_invariants) inv.push_back(d.get_str());
  return {{"partition", to_json(build_partition(lv))},
          {"generators", to_json(generator_system(lv))},
          {"lattice",
           {{"index_D_F", rep.index_D_F.get_str()},
            {"index_D_sqrtF", rep.index_D_sqrtF.get_str()},
            {"index_D_Dpow", rep.index_D_Dpow.get_str()},
            {"index_F_Dpow", rep.index_F_Dpow.get_str()},
            {"quotient_invariants", inv},
            {"squares_in_F", rep.squares_in_F},
            {"sqrt_gens_outside_F", rep.sqrt_gens_outside_F},
            {"chain_strict", rep.chain_strict}}}};
}

int cmd_funnel(const RunConfig& c, std::ostream& out) {
  Json all = Json::array();
  for (int n : levels_or(c, {4, 5, 6, 7})) all.push_back(funnel_json(Level(n)));
  out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kOk;
}

int cmd_unit(const RunConfig& c, std::ostream& out) {
  if (!c.n) throw CLI::ValidationError("--n", "unit needs --n");
  if (c.word.empty()) throw CLI::ValidationError("--word", "unit needs --word");
  const Level lv(*c.n);
  const UnitWord w = parse_word(lv, c.word);
  const CycInt beta = eval_word(w);
  try {
    const GroupRingElt u = u_chi1(beta);
    if (c.json) {
      out << to_json(u, w.to_string()).dump(2) << "\n";
    } else {
      std::vector<std::string> g;
      for (const auto& x : u.coeffs()) g.push_back(x.get_str());
      out << "word: " << w.to_string() << "\n" << "gammas: " << join(g) << "\n";
    }
    return kOk;
  } catch (const NotIntegral& e) {
    const bool real = is_real(beta);
    const bool odd = Mod2Elem(beta).is_one();
    if (c.json) {
      out << Json{{"n", std::to_string(*c.n)}, {"word", w.to_string()}, {"error", e.what()}, {"real", real}, {"congruent_to_1_mod_2", odd}}
                 .dump(2)
          << "\n";
    } else {
      out << "word: " << w.to_string() << "\n" << e.what() << "\n"
          << "real: " << (real ? "yes" : "no") << ", congruent to 1 mod 2: " << (odd ? "yes" : "no") << "\n";
    }
    return kNegative;
  }
}

int cmd_identities(const RunConfig& c, std::ostream& out) {
  bool ok = true;
  Json all = Json::array();
  for (int n : levels_or(c, {4, 5, 6, 7})) {
    const Level lv(n);
    for (const IdentityReport& rep : {q_power_identities(lv), galois_transport_check(lv)}) {
      ok = ok && rep.all_passed();
      if (c.json) {
        all.push_back(to_json(rep));
        continue;
      }
      for (const auto& chk : rep.checks) {
        out << (chk.passed ? "PASS" : "FAIL") << " n=" << n << " k=" << chk.k << " j=" << chk.j << " " << chk.name
            << " : " << chk.lhs << (chk.passed ? " == " : " != ") << chk.rhs << "\n";
      }
    }
  }
  if (c.json) out << all.dump(2) << "\n";
  return ok ? kOk : kNegative;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "verify") return cmd_verify(config, out, err);
    if (config.subcommand == "tables") return cmd_tables(config, out);
    if (config.subcommand == "funnel") return cmd_funnel(config, out);
    if (config.subcommand == "unit") return cmd_unit(config, out);
    if (config.subcommand == "identities") return cmd_identities(config, out);
    err << "unknown subcommand '" << config.subcommand << "'\n";
    return kUsage;
  } catch (const DisagreementError& e) {
    err << e.what() << "\n";
    return kDisagreement;
  } catch (const InvalidLevel& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const LevelTooSmall& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const IndexOutOfRange& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circular units of Z[zeta_{2^n}] and their mod-2 congruences", "circunit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check that sqrt(F) meets E only in F");
  verify->add_option("--n", cfg.n, "Level n (default: 4..7)");
  verify->add_option("--json", cfg.json_path, "Certificate output: file, directory for several n, or '-'");
  verify->add_flag("--explore", cfg.explore, "Allow n >= 8 (exploratory)");
  verify->add_flag("!--no-timing", cfg.timing, "Write elapsed_ms as 0");

  auto* tables = app.add_subcommand("tables", "Mod-2 tables of s_j and r_j");
  tables->add_option("--n", cfg.n, "Level n (default: 4..8)");
  tables->add_flag("--json", cfg.json, "JSON output");

  auto* funnel = app.add_subcommand("funnel", "Funnel partition and generator systems as JSON");
  funnel->add_option("--n", cfg.n, "Level n (default: 4..7)");

  auto* unit = app.add_subcommand("unit", "Group ring unit u_chi1 of a word");
  unit->add_option("--n", cfg.n, "Level n")->required();
  unit->add_option("--word", cfg.word, "Word such as 'd1^4' or 'a^3 * d1^-2 * d7^2'")->required();
  unit->add_flag("--json", cfg.json, "JSON output");

  auto* ids = app.add_subcommand("identities", "Mod-2 identities for q(k,.) and Galois transport");
  ids->add_option("--n", cfg.n, "Level n (default: 4..7)");
  ids->add_flag("--json", cfg.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  return run(cfg, out, err);
}

}  // namespace circunit
