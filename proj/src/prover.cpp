#include "pavi/prover.hpp"

#include <algorithm>

#include "json.hpp"

namespace pavi {

bool proved(const ProveResult& r) { return std::holds_alternative<UnavoidabilityCertificate>(r); }

const UnavoidabilityCertificate& certificate(const ProveResult& r) {
  return std::get<UnavoidabilityCertificate>(r);
}

std::size_t exhaustive_var_len(const Pattern& p, std::size_t max_depth) {
  const std::size_t t = p.size();
  if (max_depth < t) return 0;  // nothing fits, no bound can miss anything
  std::size_t needed = 0;
  for (int m : p.var_multiplicity())
    needed = std::max(needed, (max_depth - t + m) / static_cast<std::size_t>(m));
  return needed;
}

namespace {

// Letter-by-letter tree search. Every prefix on the stack avoids the
// pattern, so extending by one letter only requires checking occurrences
// that end at the new last position.
class ProverRun {
public:
  ProverRun(const Pattern& p, std::size_t k, Mode mode, std::size_t max_depth, std::size_t max_var_len)
      : pattern_(p),
        alphabet_(Alphabet::standard(k)),
        thetas_(enumerate_involutions(alphabet_, mode)),
        max_depth_(max_depth),
        max_var_len_(max_var_len) {}

  // true when a surviving word of length max_depth_ was found
  bool run(bool fix_first_letter) {
    if (fix_first_letter) return visit(0);
    for (std::size_t c = 0; c < alphabet_.size(); ++c)
      if (visit(static_cast<Letter>(c))) return true;
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::size_t deepest_death() const { return deepest_death_; }
  Word survivor() const { return Word(alphabet_, word_); }

private:
  bool visit(Letter next) {
    word_.push_back(next);
    ++nodes_;
    bool found = false;
    if (dies_here()) {
      deepest_death_ = std::max(deepest_death_, word_.size());
    } else if (word_.size() >= max_depth_) {
      return true;  // survivor stays on word_ for the caller
    } else {
      for (std::size_t c = 0; c < alphabet_.size() && !found; ++c)
        found = visit(static_cast<Letter>(c));
    }
    if (!found) word_.pop_back();
    return found;
  }

  bool dies_here() const {
    for (const Involution& theta : thetas_)
      if (contains_ending_at_end(word_, pattern_, theta, max_var_len_)) return true;
    return false;
  }

  const Pattern& pattern_;
  Alphabet alphabet_;
  std::vector<Involution> thetas_;
  std::size_t max_depth_;
  std::size_t max_var_len_;
  std::vector<Letter> word_;
  std::uint64_t nodes_ = 0;
  std::size_t deepest_death_ = 0;
};

ProveResult prove_impl(const Pattern& p, std::size_t k, Mode mode, const ProveOptions& opts,
                       bool fix_first_letter) {
  if (k < 1) throw std::invalid_argument("prover: alphabet size must be >= 1");
  if (opts.max_depth < 1) throw std::invalid_argument("prover: max_depth must be >= 1");
  const std::size_t max_var_len = opts.max_var_len.value_or(opts.max_depth);
  if (max_var_len < 1) throw std::invalid_argument("prover: max_var_len must be >= 1");
  ProverRun run(p, k, mode, opts.max_depth, max_var_len);
  if (run.run(fix_first_letter)) return SearchExceeded{run.survivor(), run.nodes()};
  return UnavoidabilityCertificate{p,
                                   mode,
                                   k,
                                   run.deepest_death(),
                                   run.nodes(),
                                   max_var_len,
                                   max_var_len >= exhaustive_var_len(p, opts.max_depth)};
}

}  // namespace

ProveResult prove_unavoidable(const Pattern& p, std::size_t k, Mode mode, const ProveOptions& opts) {
  return prove_impl(p, k, mode, opts, false);
}

ProveResult symmetry_reduced_prove(const Pattern& p, std::size_t k, Mode mode, const ProveOptions& opts) {
  return prove_impl(p, k, mode, opts, true);
}

bool recheck_certificate_by_scan(const UnavoidabilityCertificate& c) {
  const std::size_t k = c.alphabet_size;
  if (c.depth < 1) throw std::invalid_argument("scan: certificate depth must be >= 1");
  double total = 1;
  for (std::size_t i = 0; i < c.depth; ++i) total *= static_cast<double>(k);
  if (total > static_cast<double>(1u << 26)) throw std::invalid_argument("scan: k^depth too large to enumerate");
  const Alphabet alphabet = Alphabet::standard(k);
  const auto thetas = enumerate_involutions(alphabet, c.mode);
  std::vector<Letter> w(c.depth, 0);
  while (true) {
    if (!contains_any_involution(w, c.pattern, thetas, c.max_var_len_used)) return false;
    std::size_t i = c.depth;
    while (i > 0) {
      if (++w[i - 1] < k) break;
      w[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return true;
}

CounterexampleError::CounterexampleError(const std::string& what, Occurrence occ)
    : std::runtime_error(what), occurrence_(std::move(occ)) {}

FiniteCheckReport finite_block_check(const Word& x, const Word& y, std::size_t block_seq_len,
                                     const std::vector<std::string>& forbidden, std::size_t max_u_len,
                                     Mode mode) {
  if (x.alphabet() != y.alphabet()) throw std::invalid_argument("block check: x and y over different alphabets");
  if (x.empty() || y.empty()) throw std::invalid_argument("block check: blocks must be nonempty");
  if (block_seq_len < 1 || block_seq_len > 62) throw std::invalid_argument("block check: bad sequence length");
  const Pattern utu = Pattern::parse("a t(a) a");
  const auto thetas = enumerate_involutions(x.alphabet(), mode);
  FiniteCheckReport rep{x, y, block_seq_len, forbidden, max_u_len, mode, 0, {}};
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << block_seq_len); ++bits) {
    std::string seq(block_seq_len, 'x');
    for (std::size_t i = 0; i < block_seq_len; ++i)
      if ((bits >> (block_seq_len - 1 - i)) & 1) seq[i] = 'y';
    const bool admissible = std::none_of(forbidden.begin(), forbidden.end(), [&](const std::string& f) {
      return seq.find(f) != std::string::npos;
    });
    if (!admissible) continue;
    ++rep.admissible_sequences;
    std::vector<Letter> symbols;
    symbols.reserve(block_seq_len * std::max(x.size(), y.size()));
    for (char c : seq) {
      const auto block = (c == 'x' ? x : y).symbols();
      symbols.insert(symbols.end(), block.begin(), block.end());
    }
    const Word host(x.alphabet(), std::move(symbols));
    for (const Involution& theta : thetas) {
      if (auto occ = find_occurrence(host, utu, theta, max_u_len))
        rep.solutions.push_back(BlockCheckSolution{seq, host, std::move(*occ)});
    }
  }
  return rep;
}

WordSpec block_construction_spec(Mode mode) {
  const WordSpec tm = WordSpec::fixpoint(Morphism::parse("a=ab,b=ba"), 'a');
  return tm.then(Morphism::parse(mode == Mode::morphic ? "a=aacb,b=accb" : "a=aabbc,b=aaccb"));
}

WordSpec square_free_spec() { return WordSpec::fixpoint(Morphism::parse("a=abc,b=ac,c=b"), 'a'); }

Word validated_square_free_prefix(std::size_t prefix_len) {
  const Word host = square_free_spec().realize(prefix_len).prefix(prefix_len);
  const Pattern square = Pattern::parse("a a");
  const Involution id = Involution::identity(host.alphabet(), Mode::morphic);
  if (auto occ = find_occurrence(host, square, id, std::max<std::size_t>(1, host.size() / 2)))
    throw CounterexampleError("square-free witness contains a square: " + render(*occ, square), std::move(*occ));
  return host;
}

AvoidanceEvidence verify_construction(Mode mode, std::size_t prefix_len, std::size_t max_var_len) {
  if (prefix_len < 1) throw std::invalid_argument("verify: prefix_len must be >= 1");
  const WordSpec spec = block_construction_spec(mode);
  const Pattern p = Pattern::parse("a t(a) a");
  const Word host = spec.realize(prefix_len).prefix(prefix_len);
  if (auto occ = find_occurrence_any_involution(host, p, mode, max_var_len))
    throw CounterexampleError("construction contains a t(a) a: " + render(*occ, p), std::move(*occ));
  return AvoidanceEvidence{spec, prefix_len, p, mode, max_var_len};
}

DoubledLetterReport audit_doubled_letters(const Word& w) {
  DoubledLetterReport rep{w.size(), 0, 0};
  const auto a = w.alphabet().find('a');
  const auto b = w.alphabet().find('b');
  const auto c = w.alphabet().find('c');
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] != w[i + 1]) continue;
    if (a && c && w[i] == *a && w[i + 2] == *c) {
      ++rep.aa_then_c;
    } else if (c && b && w[i] == *c && w[i + 2] == *b) {
      ++rep.cc_then_b;
    } else {
      throw std::runtime_error("doubled-letter audit: violation at position " + std::to_string(i + 1) +
                               " (" + w.subword(i, 3).str() + ")");
    }
  }
  return rep;
}

DoubledLetterReport doubled_letter_audit(std::size_t prefix_len) {
  if (prefix_len < 3) throw std::invalid_argument("doubled-letter audit: prefix_len must be >= 3");
  const Word host = block_construction_spec(Mode::morphic).realize(prefix_len).prefix(prefix_len);
  return audit_doubled_letters(host);
}

std::string_view to_string(IndexVerdict v) {
  switch (v) {
    case IndexVerdict::proven_unavoidable: return "PROVEN-UNAVOIDABLE";
    case IndexVerdict::evidence_avoidable: return "EVIDENCE-AVOIDABLE";
    default: return "INCONCLUSIVE";
  }
}

IndexReport index_report(const Pattern& p, std::size_t max_k, const std::vector<WordSpec>& witnesses,
                         std::size_t prover_depth, std::size_t max_var_len, std::size_t witness_prefix_len) {
  if (max_k < 1) throw std::invalid_argument("index report: max_k must be >= 1");
  IndexReport rep{p, {}};
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (Mode mode : {Mode::morphic, Mode::antimorphic}) {
      const ProveResult res = prove_unavoidable(p, k, mode, ProveOptions{prover_depth, std::nullopt});
      if (proved(res)) {
        rep.rows.push_back(IndexRow{k, mode, IndexVerdict::proven_unavoidable, certificate(res).depth, {}});
        continue;
      }
      IndexRow row{k, mode, IndexVerdict::inconclusive, {}, {}};
      for (const WordSpec& ws : witnesses) {
        if (ws.alphabet().size() != k) continue;
        const Word host = ws.realize(witness_prefix_len).prefix(witness_prefix_len);
        if (!find_occurrence_any_involution(host, p, mode, max_var_len)) {
          row.verdict = IndexVerdict::evidence_avoidable;
          row.witness = ws.str();
          break;
        }
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::string to_text(const UnavoidabilityCertificate& c) {
  return "certificate pattern=\"" + c.pattern.str() + "\" mode=" + std::string(to_string(c.mode)) +
         " k=" + std::to_string(c.alphabet_size) + " depth=" + std::to_string(c.depth) +
         " nodes=" + std::to_string(c.nodes_explored) + " max-var-len=" + std::to_string(c.max_var_len_used) +
         " conclusive=" + (c.conclusive ? "yes" : "no");
}

std::string to_text(const SearchExceeded& e) {
  return "exceeded witness=" + e.witness.str() + " nodes=" + std::to_string(e.nodes_explored);
}

std::string to_text(const AvoidanceEvidence& e) {
  return "evidence spec=" + e.word_spec.str() + " prefix-len=" + std::to_string(e.prefix_len) +
         " pattern=\"" + e.pattern.str() + "\" mode=" + std::string(to_string(e.mode)) +
         " max-var-len=" + std::to_string(e.max_var_len) + " result=no-occurrence";
}

std::string to_text(const FiniteCheckReport& r) {
  const Pattern utu = Pattern::parse("a t(a) a");
  std::string out = "block-check x=" + r.x.str() + " y=" + r.y.str() +
                    " len=" + std::to_string(r.block_seq_len) + " max-u-len=" + std::to_string(r.max_u_len) +
                    " mode=" + std::string(to_string(r.mode)) +
                    " admissible=" + std::to_string(r.admissible_sequences) +
                    " solutions=" + std::to_string(r.solutions.size());
  for (const BlockCheckSolution& s : r.solutions)
    out += "\n  solution blocks=" + s.block_seq + " host=" + s.host.str() + " " + render(s.occurrence, utu);
  return out;
}

std::string to_text(const DoubledLetterReport& r) {
  return "doubled-letters prefix-len=" + std::to_string(r.prefix_len) +
         " aa-then-c=" + std::to_string(r.aa_then_c) + " cc-then-b=" + std::to_string(r.cc_then_b) +
         " violations=0";
}

std::string to_text(const IndexReport& r) {
  std::string out = "index pattern=\"" + r.pattern.str() + "\"";
  for (const IndexRow& row : r.rows) {
    out += "\n  k=" + std::to_string(row.k) + " mode=" + std::string(to_string(row.mode)) +
           " verdict=" + std::string(to_string(row.verdict));
    if (row.depth) out += " depth=" + std::to_string(*row.depth);
    if (row.witness) out += " witness=" + *row.witness;
  }
  return out;
}

namespace {

nlohmann::json occurrence_json(const Occurrence& occ, const Pattern& p) {
  nlohmann::json asg = nlohmann::json::object();
  for (int v = 0; v < p.num_vars(); ++v) asg[std::string(1, p.var_letter(v))] = occ.assignment[v].str();
  return nlohmann::json{{"position", occ.position},
                        {"theta", occ.involution.str()},
                        {"assignment", asg},
                        {"instance", occ.instance.str()}};
}

}  // namespace

std::string to_json_string(const UnavoidabilityCertificate& c) {
  const nlohmann::json j{{"type", "unavoidability_certificate"},
                         {"pattern", c.pattern.str()},
                         {"mode", std::string(to_string(c.mode))},
                         {"alphabet_size", c.alphabet_size},
                         {"depth", c.depth},
                         {"nodes_explored", c.nodes_explored},
                         {"max_var_len_used", c.max_var_len_used},
                         {"conclusive", c.conclusive}};
  return j.dump(2) + "\n";
}

std::string to_json_string(const SearchExceeded& e) {
  const nlohmann::json j{{"type", "search_exceeded"},
                         {"witness", e.witness.str()},
                         {"nodes_explored", e.nodes_explored}};
  return j.dump(2) + "\n";
}

std::string to_json_string(const AvoidanceEvidence& e) {
  const nlohmann::json j{{"type", "avoidance_evidence"},
                         {"word_spec", e.word_spec.str()},
                         {"prefix_len", e.prefix_len},
                         {"pattern", e.pattern.str()},
                         {"mode", std::string(to_string(e.mode))},
                         {"max_var_len", e.max_var_len},
                         {"result", "no-occurrence"}};
  return j.dump(2) + "\n";
}

std::string to_json_string(const FiniteCheckReport& r) {
  const Pattern utu = Pattern::parse("a t(a) a");
  nlohmann::json solutions = nlohmann::json::array();
  for (const BlockCheckSolution& s : r.solutions)
    solutions.push_back(nlohmann::json{
        {"block_seq", s.block_seq}, {"host", s.host.str()}, {"occurrence", occurrence_json(s.occurrence, utu)}});
  const nlohmann::json j{{"type", "finite_block_check"},
                         {"x", r.x.str()},
                         {"y", r.y.str()},
                         {"block_seq_len", r.block_seq_len},
                         {"forbidden", r.forbidden},
                         {"max_u_len", r.max_u_len},
                         {"mode", std::string(to_string(r.mode))},
                         {"admissible_sequences", r.admissible_sequences},
                         {"solutions", solutions}};
  return j.dump(2) + "\n";
}

}  // namespace pavi
