#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pavi/words.hpp"

namespace pavi {

enum class Mode { morphic, antimorphic };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// An involution of words induced by an involutive letter permutation
/// (perm[perm[i]] == i). Morphic mode maps letterwise; antimorphic mode
/// maps letterwise and reverses, so theta(uv) = theta(v)theta(u).
///
/// Involutions whose letter images are longer words are out of scope; every
/// instance handled here acts letter-to-letter through a permutation.
class Involution {
public:
  Involution(Alphabet alphabet, std::vector<Letter> perm, Mode mode);

  static Involution identity(Alphabet alphabet, Mode mode);

  /// Cycle notation restricted to fixed points and transpositions, with an
  /// optional mode prefix: "morphic:(ab)(c)", "antimorphic:id", "(ab)".
  /// Letters not mentioned are fixed points. A mode prefix in the text must
  /// agree with `mode`.
  static Involution parse(std::string_view text, const Alphabet& alphabet, Mode mode);

  const Alphabet& alphabet() const { return alphabet_; }
  Mode mode() const { return mode_; }
  Letter map(Letter i) const { return perm_[i]; }
  const std::vector<Letter>& perm() const { return perm_; }
  bool identity_perm() const;

  Word apply(const Word& w) const;

  /// "morphic:(ab)(c)" style; identity permutation renders as "id".
  std::string str() const;

  friend bool operator==(const Involution&, const Involution&) = default;

private:
  Alphabet alphabet_;
  std::vector<Letter> perm_;
  Mode mode_;
};

/// All involutive permutations of the alphabet tagged with `mode`, in
/// lexicographic order of the permutation image sequence (identity first).
std::vector<Involution> enumerate_involutions(const Alphabet& alphabet, Mode mode);

Word apply_involution(const Involution& theta, const Word& w);

}  // namespace pavi
