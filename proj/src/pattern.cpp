#include "pavi/pattern.hpp"

#include <algorithm>
#include <cctype>

namespace pavi {

Pattern::Pattern(std::vector<Term> terms, std::string var_letters)
    : terms_(std::move(terms)), var_letters_(std::move(var_letters)) {
  if (terms_.empty()) throw std::invalid_argument("pattern: needs at least one term");
  // Ids must be contiguous from 0 in first-appearance order.
  int next_new = 0;
  for (const Term& t : terms_) {
    if (t.var < 0 || t.var >= static_cast<int>(var_letters_.size()))
      throw std::invalid_argument("pattern: variable id out of range");
    if (t.var == next_new)
      ++next_new;
    else if (t.var > next_new)
      throw std::invalid_argument("pattern: variable ids not in first-appearance order");
  }
  if (next_new != static_cast<int>(var_letters_.size()))
    throw std::invalid_argument("pattern: unused variable letter");
}

Pattern Pattern::parse(std::string_view text) {
  std::vector<Term> terms;
  std::string letters;
  const auto var_id = [&letters](char c) {
    const auto pos = letters.find(c);
    if (pos != std::string::npos) return static_cast<int>(pos);
    letters.push_back(c);
    return static_cast<int>(letters.size()) - 1;
  };
  const auto is_var = [](char c) { return c >= 'a' && c <= 'z'; };
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c == 't' && i + 1 < text.size() && text[i + 1] == '(') {
      if (i + 3 >= text.size() || !is_var(text[i + 2]) || text[i + 3] != ')')
        throw ParseError("pattern: expected t(<var>)", i + 1);
      terms.push_back(Term{var_id(text[i + 2]), true});
      i += 4;
    } else if (is_var(c)) {
      terms.push_back(Term{var_id(c), false});
      ++i;
    } else {
      throw ParseError("pattern: unexpected character", i + 1);
    }
  }
  if (terms.empty()) throw ParseError("pattern: needs at least one term", 1);
  return Pattern(std::move(terms), std::move(letters));
}

bool Pattern::has_theta() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.theta; });
}

std::vector<int> Pattern::var_multiplicity() const {
  std::vector<int> mult(var_letters_.size(), 0);
  for (const Term& t : terms_) ++mult[t.var];
  return mult;
}

std::string Pattern::str() const {
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out.push_back(' ');
    if (t.theta) {
      out += "t(";
      out.push_back(var_letters_[t.var]);
      out.push_back(')');
    } else {
      out.push_back(var_letters_[t.var]);
    }
  }
  return out;
}

Pattern parse_pattern(std::string_view text) { return Pattern::parse(text); }

Pattern theta_complement(const Pattern& p) {
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) t.theta = !t.theta;
  std::string letters;
  for (int v = 0; v < p.num_vars(); ++v) letters.push_back(p.var_letter(v));
  return Pattern(std::move(terms), std::move(letters));
}

namespace {

// The single variable carrying theta wraps, if any.
std::optional<int> sole_theta_var(const Pattern& p) {
  std::optional<int> var;
  for (const Term& t : p.terms()) {
    if (!t.theta) continue;
    if (var && *var != t.var)
      throw std::invalid_argument("pattern transform: theta wraps on more than one variable");
    var = t.var;
  }
  return var;
}

// Renumber ids to first-appearance order, keeping per-variable letters.
Pattern canonicalize(const std::vector<Term>& terms, const std::string& letters_by_old_id) {
  std::vector<int> remap(letters_by_old_id.size(), -1);
  std::vector<Term> out;
  std::string letters;
  for (const Term& t : terms) {
    if (remap[t.var] < 0) {
      remap[t.var] = static_cast<int>(letters.size());
      letters.push_back(letters_by_old_id[t.var]);
    }
    out.push_back(Term{remap[t.var], t.theta});
  }
  return Pattern(std::move(out), std::move(letters));
}

}  // namespace

Pattern erase_theta(const Pattern& p) {
  sole_theta_var(p);
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) t.theta = false;
  std::string letters;
  for (int v = 0; v < p.num_vars(); ++v) letters.push_back(p.var_letter(v));
  return canonicalize(terms, letters);
}

Pattern split_theta(const Pattern& p) {
  const auto var = sole_theta_var(p);
  if (!var) return p;
  std::string letters;
  for (int v = 0; v < p.num_vars(); ++v) letters.push_back(p.var_letter(v));
  char fresh = 0;
  for (char c = 'a'; c <= 'z'; ++c) {
    if (letters.find(c) == std::string::npos) {
      fresh = c;
      break;
    }
  }
  if (!fresh) throw std::invalid_argument("pattern transform: no fresh variable letter available");
  const int fresh_id = p.num_vars();
  letters.push_back(fresh);
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) {
    if (t.theta) t = Term{fresh_id, false};
  }
  return canonicalize(terms, letters);
}

Word build_instance(const Pattern& p, const Assignment& asg, const Involution& theta) {
  if (static_cast<int>(asg.size()) < p.num_vars())
    throw std::invalid_argument("instance: missing variable assignment");
  for (int v = 0; v < p.num_vars(); ++v) {
    if (asg[v].empty()) throw std::invalid_argument("instance: variables must be assigned nonempty words");
    if (asg[v].alphabet() != theta.alphabet())
      throw std::invalid_argument("instance: assignment and involution alphabets differ");
  }
  std::vector<Letter> symbols;
  for (const Term& t : p.terms()) {
    const Word piece = t.theta ? theta.apply(asg[t.var]) : asg[t.var];
    symbols.insert(symbols.end(), piece.symbols().begin(), piece.symbols().end());
  }
  return Word(theta.alphabet(), std::move(symbols));
}

std::string render(const Occurrence& occ, const Pattern& p) {
  std::string out = "pos=" + std::to_string(occ.position) + " theta=" + occ.involution.str();
  for (int v = 0; v < p.num_vars(); ++v) {
    out.push_back(' ');
    out.push_back(p.var_letter(v));
    out.push_back('=');
    out += occ.assignment[v].str();
  }
  return out;
}

namespace {

struct Binding {
  std::size_t offset = 0;
  std::size_t len = 0;
  bool via_theta = false;
  bool bound = false;
};

// Anchored depth-first matcher. Variables bind to host segments (recorded as
// offset/length plus whether the binding came through a theta term), so
// checks never allocate; lengths are tried ascending, which makes the first
// match the canonical one.
class Matcher {
public:
  Matcher(std::span<const Letter> host, const Pattern& p, const Involution& theta, std::size_t max_var_len)
      : host_(host),
        terms_(p.terms()),
        perm_(theta.perm()),
        anti_(theta.mode() == Mode::antimorphic),
        max_var_len_(max_var_len),
        bind_(p.num_vars()) {}

  bool match_from(std::size_t start) { return forward(0, start); }
  bool match_at_end() { return backward(terms_.size(), host_.size()); }

  const std::vector<Binding>& bindings() const { return bind_; }
  std::size_t match_end() const { return end_; }

private:
  bool forward(std::size_t ti, std::size_t pos) {
    if (ti == terms_.size()) {
      end_ = pos;
      return true;
    }
    const Term& t = terms_[ti];
    Binding& b = bind_[t.var];
    if (b.bound) {
      if (pos + b.len > host_.size() || !segment_matches(b, t.theta, pos)) return false;
      return forward(ti + 1, pos + b.len);
    }
    std::size_t same = 0, others = 0;
    for (std::size_t j = ti + 1; j < terms_.size(); ++j) {
      if (terms_[j].var == t.var)
        ++same;
      else
        others += bind_[terms_[j].var].bound ? bind_[terms_[j].var].len : 1;
    }
    const std::size_t avail = host_.size() - pos;
    if (avail < others + same + 1) return false;
    const std::size_t cap = std::min(max_var_len_, (avail - others) / (same + 1));
    for (std::size_t len = 1; len <= cap; ++len) {
      b = Binding{pos, len, t.theta, true};
      if (forward(ti + 1, pos + len)) return true;
    }
    b.bound = false;
    return false;
  }

  // Mirror image of forward: consumes terms right to left, pinned to the
  // host's last position.
  bool backward(std::size_t ti, std::size_t end) {
    if (ti == 0) return true;
    const Term& t = terms_[ti - 1];
    Binding& b = bind_[t.var];
    if (b.bound) {
      if (end < b.len || !segment_matches(b, t.theta, end - b.len)) return false;
      return backward(ti - 1, end - b.len);
    }
    std::size_t same = 0, others = 0;
    for (std::size_t j = 0; j + 1 < ti; ++j) {
      if (terms_[j].var == t.var)
        ++same;
      else
        others += bind_[terms_[j].var].bound ? bind_[terms_[j].var].len : 1;
    }
    if (end < others + same + 1) return false;
    const std::size_t cap = std::min(max_var_len_, (end - others) / (same + 1));
    for (std::size_t len = 1; len <= cap; ++len) {
      b = Binding{end - len, len, t.theta, true};
      if (backward(ti - 1, end - len)) return true;
    }
    b.bound = false;
    return false;
  }

  // A term contributes the binding's raw segment when its wrap agrees with
  // the wrap the variable was bound through, else the theta image of it.
  bool segment_matches(const Binding& b, bool term_theta, std::size_t pos) const {
    if (term_theta == b.via_theta) {
      for (std::size_t j = 0; j < b.len; ++j)
        if (host_[pos + j] != host_[b.offset + j]) return false;
    } else if (!anti_) {
      for (std::size_t j = 0; j < b.len; ++j)
        if (host_[pos + j] != perm_[host_[b.offset + j]]) return false;
    } else {
      for (std::size_t j = 0; j < b.len; ++j)
        if (host_[pos + j] != perm_[host_[b.offset + b.len - 1 - j]]) return false;
    }
    return true;
  }

  std::span<const Letter> host_;
  const std::vector<Term>& terms_;
  const std::vector<Letter>& perm_;
  bool anti_;
  std::size_t max_var_len_;
  std::vector<Binding> bind_;
  std::size_t end_ = 0;
};

void check_search_args(const Word& host, const Involution& theta, std::size_t max_var_len) {
  if (max_var_len < 1) throw std::invalid_argument("matcher: max_var_len must be >= 1");
  if (host.alphabet() != theta.alphabet())
    throw std::invalid_argument("matcher: host and involution alphabets differ");
}

}  // namespace

std::optional<Occurrence> find_occurrence(const Word& host, const Pattern& p, const Involution& theta,
                                          std::size_t max_var_len) {
  check_search_args(host, theta, max_var_len);
  Matcher m(host.symbols(), p, theta, max_var_len);
  if (host.size() < p.size()) return std::nullopt;
  for (std::size_t start = 0; start + p.size() <= host.size(); ++start) {
    if (!m.match_from(start)) continue;
    Assignment asg;
    asg.reserve(p.num_vars());
    for (int v = 0; v < p.num_vars(); ++v) {
      const Binding& b = m.bindings()[v];
      const Word seg = host.subword(b.offset, b.len);
      asg.push_back(b.via_theta ? theta.apply(seg) : seg);
    }
    Word instance = build_instance(p, asg, theta);
    if (!(instance == host.subword(start, m.match_end() - start)))
      throw std::logic_error("matcher: materialized instance does not equal the matched factor");
    return Occurrence{start + 1, std::move(asg), theta, std::move(instance)};
  }
  return std::nullopt;
}

std::optional<Occurrence> find_occurrence_any_involution(const Word& host, const Pattern& p, Mode mode,
                                                         std::size_t max_var_len) {
  for (const Involution& theta : enumerate_involutions(host.alphabet(), mode)) {
    if (auto occ = find_occurrence(host, p, theta, max_var_len)) return occ;
  }
  return std::nullopt;
}

bool contains_occurrence(std::span<const Letter> host, const Pattern& p, const Involution& theta,
                         std::size_t max_var_len) {
  Matcher m(host, p, theta, max_var_len);
  if (host.size() < p.size()) return false;
  for (std::size_t start = 0; start + p.size() <= host.size(); ++start)
    if (m.match_from(start)) return true;
  return false;
}

bool contains_any_involution(std::span<const Letter> host, const Pattern& p,
                             const std::vector<Involution>& thetas, std::size_t max_var_len) {
  for (const Involution& theta : thetas)
    if (contains_occurrence(host, p, theta, max_var_len)) return true;
  return false;
}

bool contains_ending_at_end(std::span<const Letter> host, const Pattern& p, const Involution& theta,
                            std::size_t max_var_len) {
  if (host.size() < p.size()) return false;
  Matcher m(host, p, theta, max_var_len);
  return m.match_at_end();
}

}  // namespace pavi
