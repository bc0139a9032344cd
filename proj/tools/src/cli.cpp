#include "dlga_tools/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "dlga/errors.hpp"
#include "dlga/literals.hpp"
#include "dlga/verify.hpp"

namespace dlga::cli {

namespace {

struct Common {
  std::int64_t q = 3;
  int d = 3;
  std::string l = "1,2";

  GroupParams params() const {
    const auto lv = parse_int_list(l);
    return GroupParams::validate(q, d, lv);
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--q", c.q, "ring modulus")->capture_default_str();
  app->add_option("--d", c.d, "rank")->capture_default_str();
  app->add_option("--l", c.l, "comma-separated l_1..l_{d-1}")->capture_default_str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
}

std::string format_element(const Group& g, const GroupElement& e) {
  std::string out = "m = (";
  for (std::size_t k = 0; k < e.m.size(); ++k) out += (k ? ", " : "") + std::to_string(e.m[k]);
  out += ")\nR' = " + g.ring().to_string(e.rprime) + "\n";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"normal forms and multiplier automata for Gamma_d(q)"};
  app.require_subcommand(1);
  Common common;

  auto* validate = app.add_subcommand("validate", "check group parameters");
  add_common(validate, common);

  std::string word;
  bool raw = false;
  auto* eval = app.add_subcommand("eval", "evaluate a generator word to (m, R') coordinates");
  add_common(eval, common);
  eval->add_option("--word", word, "comma-separated generator literals")->required();

  auto* nf = app.add_subcommand("nf", "print the normal form of a word");
  add_common(nf, common);
  nf->add_option("--word", word, "comma-separated generator literals")->required();
  nf->add_flag("--raw", raw, "print tokens without separators (q <= 10)");

  std::string gen, out_path;
  bool dot = false;
  auto* build = app.add_subcommand("build", "build the multiplier automaton of a generator");
  add_common(build, common);
  build->add_option("--gen", gen, "generator literal")->required();
  build->add_option("--out", out_path, "output path, '-' for stdout");
  build->add_flag("--dot", dot, "emit DOT instead of structured text");

  bool all = false, no_mutation = false;
  int radius = 4;
  std::size_t maxlen = 9, samples = 1000;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "run the verification harness");
  add_common(verify, common);
  verify->add_flag("--all", all, "run every check");
  verify->add_option("--gen", gen, "check soundness and completeness for one generator");
  verify->add_option("--radius", radius, "ball radius")->capture_default_str();
  verify->add_option("--maxlen", maxlen, "enumeration length bound")->capture_default_str()->check(CLI::Range(0, 16));
  verify->add_option("--samples", samples, "random samples per property")->capture_default_str();
  verify->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  verify->add_flag("--no-mutation", no_mutation, "skip the mutation sentinel");
  verify->add_option("--out", out_path, "also write the report to this path");

  bool via_automata = false;
  auto* wp = app.add_subcommand("wp", "decide whether a word is the identity");
  add_common(wp, common);
  wp->add_option("--word", word, "comma-separated generator literals")->required();
  wp->add_flag("--via-automata", via_automata, "cross-check with the multiplier automata");

  std::string what = "nf";
  auto* exp = app.add_subcommand("export", "export an automaton");
  add_common(exp, common);
  exp->add_option("--what", what, "prefix | suffix | nf | multiplier | prefix-pair")
      ->check(CLI::IsMember({"prefix", "suffix", "nf", "multiplier", "prefix-pair"}))
      ->capture_default_str();
  exp->add_option("--gen", gen, "generator literal for multiplier and prefix-pair");
  exp->add_option("--out", out_path, "output path, '-' for stdout");
  exp->add_flag("--dot", dot, "emit DOT instead of structured text");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  std::optional<GroupParams> params;
  try {
    params = common.params();
  } catch (const ParamsError& e) {
    if (*validate) {
      out << "invalid: " << e.what() << '\n';
      return 1;
    }
    err << "invalid parameters: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Group group(*params);
    const Codec codec(group);
    if (*validate) {
      out << "valid: q=" << params->q() << " d=" << params->rank() << " l=" << common.l << '\n';
      return 0;
    }
    if (*eval) {
      out << format_element(group, group.evaluate(parse_word(word, *params)));
      return 0;
    }
    if (*nf) {
      out << codec.to_string(codec.encode(group.evaluate(parse_word(word, *params))), raw) << '\n';
      return 0;
    }
    if (*build) {
      const Generator s = parse_generator(gen, *params);
      const MultiplierBuilder builder(codec);
      const Automaton m = builder.multiplier(s);
      write_output(out_path, dot ? export_dot(m, to_string(s)) : export_text(m), out);
      if (!out_path.empty() && out_path != "-") {
        out << to_string(s) << ": " << m.num_states() << " states, " << m.num_edges() << " transitions\n";
      }
      return 0;
    }
    if (*exp) {
      Automaton m;
      std::string name = what;
      if (what == "prefix") {
        m = minimize(codec.prefix_automaton());
      } else if (what == "suffix") {
        m = minimize(codec.suffix_automaton());
      } else if (what == "nf") {
        m = codec.nf_automaton();
      } else {
        if (gen.empty()) {
          err << "usage error: --gen is required for " << what << '\n';
          return 2;
        }
        const Generator s = parse_generator(gen, *params);
        const MultiplierBuilder builder(codec);
        m = what == "multiplier" ? builder.multiplier(s) : builder.prefix_pair_machine(s);
        name = to_string(s);
      }
      write_output(out_path, dot ? export_dot(m, name) : export_text(m), out);
      return 0;
    }
    if (*wp) {
      const Word w = parse_word(word, *params);
      const bool direct = group.is_identity(group.evaluate(w));
      out << "identity: " << (direct ? "yes" : "no") << '\n';
      if (!via_automata) return 0;
      Verifier ver(codec);
      SymbolString cur = codec.encode(group.identity());
      for (const auto& s : w) cur = apply_multiplier(ver.machine(s), cur, 2 * static_cast<std::size_t>(group.rank()) + 2);
      const bool automata = cur == codec.encode(group.identity());
      out << "automata: " << (automata ? "yes" : "no") << '\n';
      out << "agree: " << (automata == direct ? "yes" : "no") << '\n';
      return automata == direct ? 0 : 1;
    }
    if (*verify) {
      Verifier ver(codec, BuildOptions{}, seed);
      std::vector<CheckReport> reports;
      if (!gen.empty()) {
        const Generator s = parse_generator(gen, *params);
        reports.push_back(ver.check_soundness(s, maxlen));
        reports.push_back(ver.check_completeness(s, radius));
        if (!no_mutation && !s.inverse) reports.push_back(ver.check_mutation(s, maxlen));
      } else if (all) {
        reports = ver.run_all({radius, maxlen, samples, !no_mutation});
      } else {
        err << "usage error: verify needs --all or --gen\n";
        return 2;
      }
      std::string text;
      bool ok = true;
      for (const auto& r : reports) {
        text += format_report(r) + '\n';
        ok = ok && r.passed;
      }
      text += std::string("summary checks=") + std::to_string(reports.size()) + " status=" + (ok ? "pass" : "FAIL") + '\n';
      out << text;
      if (!out_path.empty()) write_output(out_path, text, out);
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace dlga::cli
