#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pavi/involution.hpp"
#include "pavi/words.hpp"

namespace pavi {

struct Term {
  int var = 0;
  bool theta = false;  // true for t(x) terms

  friend bool operator==(const Term&, const Term&) = default;
};

/// A pattern: nonempty sequence of variable terms, each plain or wrapped in
/// an involution application. Variable ids are contiguous from 0 in order of
/// first appearance; var_letter keeps the surface spelling for rendering.
///
/// Wraps are only one level deep: theta is an involution, so nested
/// applications collapse to plain or single-theta terms.
class Pattern {
public:
  Pattern(std::vector<Term> terms, std::string var_letters);

  /// Grammar: pattern := term+ ; term := VAR | "t(" VAR ")" ; VAR := a-z.
  /// Whitespace between terms is optional.
  static Pattern parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int num_vars() const { return static_cast<int>(var_letters_.size()); }
  char var_letter(int v) const { return var_letters_.at(v); }
  bool has_theta() const;
  std::vector<int> var_multiplicity() const;

  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

private:
  std::vector<Term> terms_;
  std::string var_letters_;  // index = variable id
};

Pattern parse_pattern(std::string_view text);

/// Plain and theta wraps exchanged on every term.
Pattern theta_complement(const Pattern& p);

/// Every theta term becomes a plain term on the same variable. At most one
/// variable may carry theta wraps.
Pattern erase_theta(const Pattern& p);

/// Every theta term becomes a plain term on one fresh variable. At most one
/// variable may carry theta wraps; ids are renumbered to first-appearance
/// order when needed.
Pattern split_theta(const Pattern& p);

/// Nonempty word per variable id.
using Assignment = std::vector<Word>;

/// Concatenates term contributions: asg(var) for plain terms,
/// theta(asg(var)) for theta terms. All assigned words and theta must share
/// one alphabet; every variable of p must be assigned a nonempty word.
Word build_instance(const Pattern& p, const Assignment& asg, const Involution& theta);

struct Occurrence {
  std::size_t position = 0;  // 1-based start in the host word
  Assignment assignment;
  Involution involution;
  Word instance;
};

/// "pos=<n> theta=<involution> <var>=<word> ..." (variables in id order).
std::string render(const Occurrence& occ, const Pattern& p);

/// First occurrence of p in host under the fixed involution with every
/// variable length in [1, max_var_len], or nullopt. Search order is start
/// position ascending, then variable length vectors lexicographically
/// ascending (variables in binding order), so "first" is well defined.
std::optional<Occurrence> find_occurrence(const Word& host, const Pattern& p, const Involution& theta,
                                          std::size_t max_var_len);

/// Tries enumerate_involutions(host.alphabet(), mode) in canonical order and
/// returns the first occurrence found. nullopt means host avoids p for every
/// involution of the mode within the variable-length bound.
std::optional<Occurrence> find_occurrence_any_involution(const Word& host, const Pattern& p, Mode mode,
                                                         std::size_t max_var_len);

/// Bool-only entry points over raw index spans (callers guarantee symbols
/// index into theta's alphabet). Used by the search-heavy provers.
bool contains_occurrence(std::span<const Letter> host, const Pattern& p, const Involution& theta,
                         std::size_t max_var_len);
bool contains_any_involution(std::span<const Letter> host, const Pattern& p,
                             const std::vector<Involution>& thetas, std::size_t max_var_len);

/// True iff some occurrence ends exactly at the last position of host; with
/// the prefix known clean this is the only thing a one-letter extension can
/// add.
bool contains_ending_at_end(std::span<const Letter> host, const Pattern& p, const Involution& theta,
                            std::size_t max_var_len);

}  // namespace pavi
