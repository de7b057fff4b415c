#include "betaword/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "betaword/json_io.hpp"

namespace betaword {

namespace {

struct CliConfig {
  std::string expansion;
  std::size_t prefix_length = 1'000'000;
  std::size_t max_factor_length = 300;
  int n_max = 30;
  std::string beta_precision = "1e-14";
  std::size_t materialization_cap = kDefaultCap;
  std::string format = "human";
  bool corpus = false;
  std::vector<std::string> extras;

  // Command-specific knobs.
  std::size_t generate_length = 0;
  int returns_n = -1;

  RunLimits limits() const {
    RunLimits out;
    out.n_max = n_max;
    out.prefix_length = prefix_length;
    out.max_factor_length = max_factor_length;
    out.beta_precision = rat_from_decimal(beta_precision);
    out.materialization_cap = materialization_cap;
    return out;
  }
};

const std::vector<std::string>& builtin_corpus() {
  static const std::vector<std::string> corpus = {"221(12)", "2000(1)", "2(1)", "22(01)",
                                                  "21(1200)"};
  return corpus;
}

void add_common(CLI::App* cmd, CliConfig& cfg, bool needs_expansion) {
  auto* positional = cmd->add_option("expansion", cfg.expansion, "expansion of unity, e.g. 221(12)");
  if (needs_expansion) positional->required(false);
  cmd->add_option("--prefix-length", cfg.prefix_length, "observation prefix length");
  cmd->add_option("--max-factor-length", cfg.max_factor_length, "factor length cap for scans");
  cmd->add_option("--n-max", cfg.n_max, "iteration bound for term sequences");
  cmd->add_option("--beta-precision", cfg.beta_precision, "absolute precision for beta");
  cmd->add_option("--cap", cfg.materialization_cap, "materialization cap in letters");
  cmd->add_option("--format", cfg.format, "human | json | tsv")
      ->check(CLI::IsMember({"human", "json", "tsv"}));
  cmd->add_flag("--corpus", cfg.corpus, "run over the built-in example expansions");
  cmd->add_option("--extra", cfg.extras, "extra expansions for --corpus mode");
}

void validate_config(const CliConfig& cfg) {
  if (cfg.prefix_length == 0 || cfg.max_factor_length == 0 || cfg.n_max <= 0 ||
      cfg.materialization_cap == 0)
    throw CLI::ValidationError("config", "all caps must be positive");
  if (cfg.prefix_length < 4 * cfg.max_factor_length)
    throw CLI::ValidationError("config", "prefix-length must be at least 4*max-factor-length");
}

Word observation_prefix(const RenyiExpansion& e, std::size_t length) {
  return fixed_point_prefix(build_substitution(e), length);
}

int cmd_check(const CliConfig& cfg, const RenyiExpansion& e, std::ostream& out) {
  bool nonsimple = classify(e) == ParryClass::NonSimple;
  if (cfg.format == "json") {
    Json j{{"expansion", e.to_string()},
           {"class", nonsimple ? "NonSimple" : "Simple"},
           {"m", e.m()},
           {"p", e.p()}};
    out << j.dump(2) << "\n";
  } else {
    out << e.to_string() << ": " << (nonsimple ? "NonSimple" : "Simple") << " m=" << e.m()
        << " p=" << e.p() << "\n";
  }
  return kExitOk;
}

int cmd_generate(const CliConfig& cfg, const RenyiExpansion& e, std::ostream& out) {
  Word prefix = observation_prefix(e, cfg.generate_length);
  if (!prefix.empty()) out << to_display(prefix) << "\n";
  return kExitOk;
}

int cmd_subst(const CliConfig& cfg, const RenyiExpansion& e, std::ostream& out) {
  Substitution s = build_substitution(e);
  if (cfg.format == "json") {
    Json images = Json::object();
    for (int a = 0; a < s.alphabet_size(); ++a)
      images[std::to_string(a)] = to_display(s.image(static_cast<Letter>(a)));
    Json matrix = Json::array();
    for (int a = 0; a < s.alphabet_size(); ++a) {
      Json row = Json::array();
      for (int b = 0; b < s.alphabet_size(); ++b) row.push_back(s.incidence().at(a, b));
      matrix.push_back(row);
    }
    Json j{{"expansion", e.to_string()},
           {"alphabet_size", s.alphabet_size()},
           {"images", images},
           {"incidence", matrix}};
    if (!e.simple()) {
      TZ tz = t_and_z(e);
      j["t"] = tz.t;
      j["z"] = static_cast<int>(tz.z);
    }
    out << j.dump(2) << "\n";
  } else {
    for (int a = 0; a < s.alphabet_size(); ++a)
      out << a << " -> " << to_display(s.image(static_cast<Letter>(a))) << "\n";
    if (!e.simple()) {
      TZ tz = t_and_z(e);
      out << "t=" << tz.t << " z=" << static_cast<int>(tz.z) << "\n";
    }
  }
  return kExitOk;
}

int cmd_bispecial(const CliConfig& cfg, const RenyiExpansion& e, std::ostream& out) {
  Word prefix = observation_prefix(e, cfg.prefix_length);
  std::vector<BispecialFactor> seeds = initial_bispecials(e, prefix);
  Json chains = Json::array();
  for (const BispecialFactor& seed : seeds) {
    BispecialFactor current = seed;
    Json elements = Json::array();
    for (int n = 0; n <= cfg.n_max; ++n) {
      elements.push_back(bispecial_to_json(current));
      current = f_image(current, e, cfg.materialization_cap);
    }
    chains.push_back(Json{{"seed", bispecial_to_json(seed)}, {"elements", elements}});
  }
  Json type1 = Json::array();
  for (int n = 0; n <= cfg.n_max; ++n) {
    BigRat term = e_I_term(e, n);
    type1.push_back(Json::array({n, rat_num(term).str(), rat_den(term).str()}));
  }
  Json j{{"expansion", e.to_string()}, {"chains", chains}, {"v_I_indices", type1}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_returns(const CliConfig& cfg, const RenyiExpansion& e, std::ostream& out) {
  int n = cfg.returns_n >= 0 ? cfg.returns_n : e.m();
  Word prefix = observation_prefix(e, cfg.prefix_length);
  ReturnTypeReport report = classify_returns_zn(e, n, prefix, cfg.materialization_cap);
  if (cfg.format == "json") {
    out << return_types_to_json(report).dump(2) << "\n";
  } else {
    out << "z^(" << report.n << ") = " << to_display(report.z) << ", "
        << report.total() << " complete return words\n";
    for (const Word& w : report.type_a) out << "A " << to_display(w) << "\n";
    for (const Word& w : report.type_b) out << "B " << to_display(w) << "\n";
    for (const Word& w : report.type_c) out << "C " << to_display(w) << "\n";
    for (const Word& w : report.undetermined) out << "? " << to_display(w) << "\n";
  }
  return kExitOk;
}

int cmd_critexp(const CliConfig& cfg, const RenyiExpansion& e, std::ostream& out) {
  CritExpReport report = critical_exponent(e, cfg.limits());
  if (cfg.format == "json") {
    out << critexp_to_json(report).dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    Word prefix = observation_prefix(e, cfg.prefix_length);
    IndexTable table = ind_n_table(prefix, cfg.max_factor_length);
    out << index_table_tsv(table, prefix);
  } else {
    out << e.to_string() << ": branch " << to_string(report.branch) << "\n";
    if (report.e_exact) {
      out << "E = " << mixed_fraction(*report.e_exact) << "\n";
    } else {
      out << "E in [" << mixed_fraction(report.e_enclosure.lo) << ", "
          << mixed_fraction(report.e_enclosure.hi) << "]\n";
    }
    out << "E_I finite max = " << mixed_fraction(report.e_I_finite_max) << " at n="
        << report.e_I_argmax << (report.e_I_attained ? " (attained)" : "") << "\n";
    out << "E* = " << rat_to_decimal(report.e_star.mid(), 12)
        << (report.e_star_unconditional ? "" : " (conditionally valid)") << "\n";
    out << "floor = " << mixed_fraction(report.brute_force_floor) << " (prefix "
        << report.floor_prefix_length << ", lengths <= " << report.floor_max_factor_length
        << ")\n";
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, const RenyiExpansion& e, std::ostream& out) {
  VerificationReport report = verify_critical_exponent(e, cfg.limits());
  if (cfg.format == "json") {
    out << verification_to_json(report).dump(2) << "\n";
  } else {
    out << e.to_string() << ": " << (report.passed ? "PASS" : "FAIL") << " (floor "
        << mixed_fraction(report.floor) << ", " << report.terms_attained
        << " terms attained, " << report.terms_skipped << " skipped)\n";
    for (const std::string& f : report.failures) out << "failure: " << f << "\n";
    for (const std::string& n : report.notes) out << "note: " << n << "\n";
  }
  return report.passed ? kExitOk : kExitVerifyFailed;
}

int dispatch(const std::string& name, const CliConfig& cfg, std::ostream& out,
             std::ostream& err) {
  std::vector<std::string> expansions;
  if (cfg.corpus) {
    expansions = builtin_corpus();
    expansions.insert(expansions.end(), cfg.extras.begin(), cfg.extras.end());
    if (!cfg.expansion.empty()) expansions.push_back(cfg.expansion);
  } else {
    expansions.push_back(cfg.expansion);
  }
  int worst = kExitOk;
  for (const std::string& text : expansions) {
    if (text.empty()) {
      err << "error: empty expansion\n";
      return kExitUsage;
    }
    RenyiExpansion e;
    try {
      e = parse_expansion(text);
    } catch (const Error& ex) {
      err << "error: " << ex.what() << "\n";
      return kExitInvalidExpansion;
    }
    if (cfg.corpus) out << "# " << text << "\n";
    int code = kExitOk;
    try {
      if (name == "check")
        code = cmd_check(cfg, e, out);
      else if (name == "generate")
        code = cmd_generate(cfg, e, out);
      else if (name == "subst")
        code = cmd_subst(cfg, e, out);
      else if (name == "bispecial")
        code = cmd_bispecial(cfg, e, out);
      else if (name == "returns")
        code = cmd_returns(cfg, e, out);
      else if (name == "critexp")
        code = cmd_critexp(cfg, e, out);
      else if (name == "verify")
        code = cmd_verify(cfg, e, out);
    } catch (const ValidationError& ex) {
      err << "error: " << ex.what() << "\n";
      return kExitInvalidExpansion;
    } catch (const Error& ex) {
      err << "error: " << ex.what() << "\n";
      return kExitVerifyFailed;
    }
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"analysis of infinite words coding beta-integers"};
  app.require_subcommand(1);

  CliConfig cfg;
  CLI::App* check = app.add_subcommand("check", "validate and classify an expansion");
  add_common(check, cfg, true);
  CLI::App* generate = app.add_subcommand("generate", "print a prefix of the fixed point");
  add_common(generate, cfg, true);
  generate->add_option("--length", cfg.generate_length, "prefix length")->required();
  CLI::App* subst = app.add_subcommand("subst", "print the canonical substitution");
  add_common(subst, cfg, true);
  CLI::App* bispecial = app.add_subcommand("bispecial", "dump bispecial chains");
  add_common(bispecial, cfg, true);
  CLI::App* returns = app.add_subcommand("returns", "classify complete return words of z^(n)");
  add_common(returns, cfg, true);
  returns->add_option("--n", cfg.returns_n, "iteration level (default m)");
  CLI::App* critexp = app.add_subcommand("critexp", "critical exponent report");
  add_common(critexp, cfg, true);
  CLI::App* verify = app.add_subcommand("verify", "run the oracle verification harness");
  add_common(verify, cfg, true);

  std::vector<const char*> argv;
  argv.push_back("betaword");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& ex) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    validate_config(cfg);
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  }

  for (const auto* cmd : {check, generate, subst, bispecial, returns, critexp, verify})
    if (cmd->parsed()) {
      if (cfg.expansion.empty() && !cfg.corpus) {
        err << "usage error: expansion required\n";
        return kExitUsage;
      }
      return dispatch(cmd->get_name(), cfg, out, err);
    }
  return kExitUsage;
}

}  // namespace betaword
