// pavi — generate morphic words, search them for patterns under morphic and
// antimorphic involutions, and run the exhaustive unavoidability searches.
//
// Exit codes: 0 success / avoids / proved, 1 substantive negative
// (contains / exceeded / failed target), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pavi/prover.hpp"
#include "pavi/reproduce.hpp"

namespace {

using namespace pavi;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

Word remap(const Word& w, const Alphabet& target) {
  std::vector<Letter> symbols;
  symbols.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) symbols.push_back(target.index_of(w.alphabet().letter(w[i])));
  return Word(target, std::move(symbols));
}

Word realize_host(const std::string& spec_text, std::size_t len, const std::string& alphabet_override) {
  const WordSpec spec = WordSpec::parse(spec_text);
  Word w = spec.realize(len).prefix(len);
  if (!alphabet_override.empty()) w = remap(w, Alphabet(alphabet_override));
  return w;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

struct Options {
  std::string spec;
  std::string pattern;
  std::string mode = "morphic";
  std::string theta;
  std::string alphabet;
  std::string target;
  std::string out_path;
  std::size_t len = 0;
  std::size_t k = 2;
  std::size_t max_depth = 32;
  std::optional<std::size_t> max_var_len;
  bool reduced = false;
};

int run_generate(const Options& opt) {
  std::cout << realize_host(opt.spec, opt.len, opt.alphabet).str() << "\n";
  return kOk;
}

int run_check(const Options& opt) {
  const Word host = realize_host(opt.spec, opt.len, opt.alphabet);
  const Pattern p = Pattern::parse(opt.pattern);
  const Mode mode = parse_mode(opt.mode);
  const std::size_t bound = *opt.max_var_len;
  std::optional<Occurrence> occ;
  if (!opt.theta.empty()) {
    occ = find_occurrence(host, p, Involution::parse(opt.theta, host.alphabet(), mode), bound);
  } else {
    occ = find_occurrence_any_involution(host, p, mode, bound);
  }
  if (occ) {
    std::cout << "CONTAINS " << render(*occ, p) << "\n";
    return kNegative;
  }
  std::cout << "AVOIDS (bounded)\n";
  return kOk;
}

int run_prove(const Options& opt) {
  const Pattern p = Pattern::parse(opt.pattern);
  const Mode mode = parse_mode(opt.mode);
  const ProveOptions popts{opt.max_depth, opt.max_var_len};
  const ProveResult res = opt.reduced ? symmetry_reduced_prove(p, opt.k, mode, popts)
                                      : prove_unavoidable(p, opt.k, mode, popts);
  if (proved(res)) {
    const auto& cert = certificate(res);
    std::cout << to_text(cert) << "\n";
    if (!opt.out_path.empty()) write_file(opt.out_path, to_json_string(cert));
    return kOk;
  }
  const auto& exceeded = std::get<SearchExceeded>(res);
  std::cout << "EXCEEDED witness=" << exceeded.witness.str() << " nodes=" << exceeded.nodes_explored << "\n";
  if (!opt.out_path.empty()) write_file(opt.out_path, to_json_string(exceeded));
  return kNegative;
}

int run_complement(const Options& opt) {
  std::cout << theta_complement(Pattern::parse(opt.pattern)).str() << "\n";
  return kOk;
}

int run_reproduce_cmd(const Options& opt) {
  bool all_pass = true;
  for (const ReproduceResult& r : run_reproduce(opt.target)) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.target << ": " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word patterns under morphic and antimorphic involutions"};
  app.require_subcommand(0, 1);
  Options opt;

  bool seed_table_flag = false;
  app.add_flag("--seed-table", seed_table_flag, "print the frozen parameter table of the reproduce targets");

  CLI::App* generate = app.add_subcommand("generate", "realize a word spec and print a prefix");
  generate->add_option("--spec", opt.spec, "word spec, e.g. fix:a=ab,b=ba@a|a=aacb,b=accb")->required();
  generate->add_option("--len", opt.len, "number of letters to print")->required();
  generate->add_option("--alphabet", opt.alphabet, "declare the alphabet explicitly, e.g. abc");

  CLI::App* check = app.add_subcommand("check", "search a realized word for a pattern occurrence");
  check->add_option("--spec", opt.spec, "word spec for the host word")->required();
  check->add_option("--pattern", opt.pattern, "pattern, e.g. \"a t(a) a\"")->required();
  check->add_option("--len", opt.len, "host prefix length")->required();
  check->add_option("--mode", opt.mode, "morphic|antimorphic")->required();
  std::size_t check_bound = 0;
  check->add_option("--max-var-len", check_bound, "variable length bound (mandatory: results are bounded)")
      ->required();
  check->add_option("--theta", opt.theta, "restrict to one involution, e.g. \"(ab)(c)\" or id");
  check->add_option("--alphabet", opt.alphabet, "declare the alphabet explicitly");

  CLI::App* prove = app.add_subcommand("prove", "exhaustive word-tree search for an unavoidability certificate");
  prove->add_option("--pattern", opt.pattern, "pattern to prove unavoidable")->required();
  prove->add_option("--k", opt.k, "alphabet size")->required();
  prove->add_option("--mode", opt.mode, "morphic|antimorphic")->required();
  prove->add_option("--max-depth", opt.max_depth, "search depth limit (default 32)");
  std::size_t prove_bound = 0;
  prove->add_option("--max-var-len", prove_bound, "variable length bound (default: max-depth)");
  prove->add_flag("--reduced", opt.reduced, "explore only words starting with the first letter");
  prove->add_option("--out", opt.out_path, "write the certificate as JSON to this path");

  CLI::App* complement = app.add_subcommand("complement", "print the theta-complementary pattern");
  complement->add_option("--pattern", opt.pattern, "pattern to complement")->required();

  CLI::App* reproduce = app.add_subcommand("reproduce", "run a frozen one-shot check (see --seed-table)");
  std::string targets_help = "one of: all";
  for (const std::string& name : reproduce_target_names()) targets_help += ", " + name;
  reproduce->add_option("--target", opt.target, targets_help)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) opt.max_var_len = check_bound;
    if (prove->parsed() && prove->count("--max-var-len") > 0) opt.max_var_len = prove_bound;
    if (generate->parsed()) return run_generate(opt);
    if (check->parsed()) return run_check(opt);
    if (prove->parsed()) return run_prove(opt);
    if (complement->parsed()) return run_complement(opt);
    if (reproduce->parsed()) return run_reproduce_cmd(opt);
    if (seed_table_flag) {
      std::cout << seed_table();
      return kOk;
    }
    std::cerr << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
