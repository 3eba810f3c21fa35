#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pavi {

using Letter = std::uint8_t;

/// Error for malformed text inputs (word specs, morphisms, patterns,
/// involution notation). `position` is 1-based within the offending text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Ordered set of distinct single-character symbols. Words store small
/// letter indices; the alphabet owns the index<->character mapping, so
/// search loops compare indices only.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::string letters);

  /// First k letters of a..z.
  static Alphabet standard(std::size_t k);

  std::size_t size() const { return letters_.size(); }
  char letter(Letter i) const { return letters_.at(i); }
  std::optional<Letter> find(char c) const;
  Letter index_of(char c) const;  // throws std::invalid_argument on unknown letter
  const std::string& letters() const { return letters_; }

  bool operator==(const Alphabet&) const = default;

private:
  std::string letters_;
};

/// Finite word over an Alphabet. Public reporting is 1-based (at1);
/// internal storage is a 0-based index vector.
class Word {
public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Letter> symbols);

  static Word from_string(const Alphabet& alphabet, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  Letter operator[](std::size_t i0) const { return symbols_[i0]; }
  Letter at1(std::size_t i1) const;  // 1-based, bounds-checked

  std::span<const Letter> symbols() const { return symbols_; }
  std::string str() const;

  Word prefix(std::size_t n) const;
  Word subword(std::size_t pos0, std::size_t len) const;

  /// Concatenation; both operands must share an alphabet.
  Word operator+(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  Alphabet alphabet_;
  std::vector<Letter> symbols_;
};

/// Letter-to-word substitution with nonempty images. Source and target
/// alphabets coincide exactly when the morphism can be iterated (all image
/// letters have rules of their own).
class Morphism {
public:
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  /// Parses "a=ab,b=ba". Domain letters are sorted; the target alphabet is
  /// the source when every image letter has a rule, otherwise the sorted
  /// set of image letters.
  static Morphism parse(std::string_view text);
  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(Letter i) const { return images_.at(i); }
  bool endomorphism() const { return source_ == target_; }
  std::size_t min_image_length() const;

  /// Homomorphic application; letters of w are resolved by character, so w
  /// may live on any alphabet whose letters all have rules.
  Word apply(const Word& w) const;

  std::string str() const;

private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;  // indexed by source letter
};

Word apply_morphism(const Morphism& m, const Word& w);

/// Shortest prefix of the fixpoint of m from `seed` with length >= min_len.
/// Requires an endomorphism prolongable on the seed (image starts with the
/// seed and has length >= 2). Iterates on the whole word; desk-scale only.
Word fixpoint_prefix(const Morphism& m, char seed, std::size_t min_len);

/// Descriptor for a generated word: a literal or a morphism fixpoint,
/// optionally pushed through a chain of further morphisms.
///
/// Text syntax: `lit:<letters>` | `fix:<morphism>@<seed>` | `<spec>|<morphism>`
/// with `<morphism>` = comma-separated `letter=image` pairs.
class WordSpec {
public:
  static WordSpec literal(Word w);
  static WordSpec fixpoint(Morphism m, char seed);
  static WordSpec parse(std::string_view text);

  /// The spec followed by one more morphism application.
  WordSpec then(Morphism m) const;

  /// Alphabet of the realized word.
  const Alphabet& alphabet() const;

  /// Deterministic realization with length >= min_len (may overshoot; take
  /// a prefix for an exact length). Longer requests extend shorter ones.
  Word realize(std::size_t min_len) const;

  std::string str() const;

private:
  struct Literal {
    Word word;
  };
  struct Fixpoint {
    Morphism morphism;
    char seed;
  };
  WordSpec(std::variant<Literal, Fixpoint> base, std::vector<Morphism> post);

  std::variant<Literal, Fixpoint> base_;
  std::vector<Morphism> post_;  // applied left to right
};

Word realize_word(const WordSpec& spec, std::size_t min_len);

struct Factor {
  std::size_t position;  // 1-based start
  Word word;
};

/// Every factor of w with length in [len_min, len_max], position-major then
/// length-ascending. Requires 1 <= len_min <= len_max.
std::vector<Factor> factors(const Word& w, std::size_t len_min, std::size_t len_max);

/// Streaming flavor of `factors`; fn(position1, symbols) in the same order.
template <typename F>
void for_each_factor(const Word& w, std::size_t len_min, std::size_t len_max, F&& fn) {
  if (len_min < 1 || len_min > len_max) throw std::invalid_argument("factors: need 1 <= len_min <= len_max");
  const auto sym = w.symbols();
  for (std::size_t pos = 0; pos + len_min <= sym.size(); ++pos) {
    const std::size_t top = std::min(len_max, sym.size() - pos);
    for (std::size_t len = len_min; len <= top; ++len) fn(pos + 1, sym.subspan(pos, len));
  }
}

}  // namespace pavi
