#include "pavi/words.hpp"

#include <algorithm>
#include <set>

namespace pavi {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("alphabet: needs at least one letter");
  std::set<char> seen;
  for (char c : letters_) {
    if (!seen.insert(c).second) throw std::invalid_argument(std::string("alphabet: duplicate letter '") + c + "'");
  }
}

Alphabet Alphabet::standard(std::size_t k) {
  static constexpr std::string_view kAll = "abcdefghijklmnopqrstuvwxyz";
  if (k < 1 || k > kAll.size()) throw std::invalid_argument("alphabet: size must be in [1, 26]");
  return Alphabet(std::string(kAll.substr(0, k)));
}

std::optional<Letter> Alphabet::find(char c) const {
  const auto pos = letters_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

Letter Alphabet::index_of(char c) const {
  const auto idx = find(c);
  if (!idx) throw std::invalid_argument(std::string("alphabet: unknown letter '") + c + "'");
  return *idx;
}

Word::Word(Alphabet alphabet, std::vector<Letter> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  for (Letter s : symbols_) {
    if (s >= alphabet_.size()) throw std::invalid_argument("word: letter index out of range for alphabet");
  }
}

Word Word::from_string(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> symbols;
  symbols.reserve(text.size());
  for (char c : text) symbols.push_back(alphabet.index_of(c));
  return Word(alphabet, std::move(symbols));
}

Letter Word::at1(std::size_t i1) const {
  if (i1 < 1 || i1 > symbols_.size()) throw std::out_of_range("word: 1-based index out of range");
  return symbols_[i1 - 1];
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Letter s : symbols_) out.push_back(alphabet_.letter(s));
  return out;
}

Word Word::prefix(std::size_t n) const {
  if (n > symbols_.size()) throw std::out_of_range("word: prefix longer than word");
  return Word(alphabet_, std::vector<Letter>(symbols_.begin(), symbols_.begin() + n));
}

Word Word::subword(std::size_t pos0, std::size_t len) const {
  if (pos0 + len > symbols_.size()) throw std::out_of_range("word: subword out of range");
  return Word(alphabet_, std::vector<Letter>(symbols_.begin() + pos0, symbols_.begin() + pos0 + len));
}

Word Word::operator+(const Word& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw std::invalid_argument("word: concatenation across alphabets");
  std::vector<Letter> symbols = symbols_;
  symbols.insert(symbols.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return Word(alphabet_, std::move(symbols));
}

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) throw std::invalid_argument("morphism: one image per source letter required");
  for (const Word& img : images_) {
    if (img.empty()) throw std::invalid_argument("morphism: images must be nonempty");
    if (img.alphabet() != target_) throw std::invalid_argument("morphism: image not over target alphabet");
  }
}

Morphism Morphism::parse(std::string_view text) {
  const auto is_letter = [](char c) { return c >= 'a' && c <= 'z'; };
  std::vector<std::pair<char, std::string>> rules;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t entry_start = pos;
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view entry = text.substr(pos, comma - pos);
    if (entry.size() < 3 || entry[1] != '=' || !is_letter(entry[0]))
      throw ParseError("morphism: expected letter=image", entry_start + 1);
    for (std::size_t i = 2; i < entry.size(); ++i) {
      if (!is_letter(entry[i])) throw ParseError("morphism: image letters must be a-z", entry_start + i + 1);
    }
    rules.emplace_back(entry[0], std::string(entry.substr(2)));
    pos = comma + 1;
    if (comma == text.size()) break;
    if (pos == text.size()) throw ParseError("morphism: trailing comma", text.size());
  }
  if (rules.empty()) throw ParseError("morphism: no rules", 1);

  std::string domain;
  for (const auto& [letter, image] : rules) domain.push_back(letter);
  std::sort(domain.begin(), domain.end());
  if (std::adjacent_find(domain.begin(), domain.end()) != domain.end())
    throw ParseError("morphism: duplicate rule for a letter", 1);
  Alphabet source(domain);

  std::set<char> image_letters;
  for (const auto& [letter, image] : rules)
    for (char c : image) image_letters.insert(c);
  const bool endo = std::all_of(image_letters.begin(), image_letters.end(),
                                [&](char c) { return source.find(c).has_value(); });
  Alphabet target = endo ? source : Alphabet(std::string(image_letters.begin(), image_letters.end()));

  std::vector<Word> images(source.size(), Word(target));
  for (const auto& [letter, image] : rules) images[source.index_of(letter)] = Word::from_string(target, image);
  return Morphism(std::move(source), std::move(target), std::move(images));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    images.push_back(Word(alphabet, {static_cast<Letter>(i)}));
  return Morphism(alphabet, alphabet, std::move(images));
}

std::size_t Morphism::min_image_length() const {
  std::size_t m = images_.front().size();
  for (const Word& img : images_) m = std::min(m, img.size());
  return m;
}

Word Morphism::apply(const Word& w) const {
  // Resolve letters by character so words over letter-subsets work too.
  std::vector<Letter> trans(w.alphabet().size());
  for (std::size_t i = 0; i < w.alphabet().size(); ++i) {
    const char c = w.alphabet().letter(static_cast<Letter>(i));
    const auto idx = source_.find(c);
    if (!idx) throw std::invalid_argument(std::string("morphism: no image for letter '") + c + "'");
    trans[i] = *idx;
  }
  std::size_t total = 0;
  for (Letter s : w.symbols()) total += images_[trans[s]].size();
  std::vector<Letter> symbols;
  symbols.reserve(total);
  for (Letter s : w.symbols()) {
    const auto img = images_[trans[s]].symbols();
    symbols.insert(symbols.end(), img.begin(), img.end());
  }
  return Word(target_, std::move(symbols));
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(source_.letter(static_cast<Letter>(i)));
    out.push_back('=');
    out += images_[i].str();
  }
  return out;
}

Word apply_morphism(const Morphism& m, const Word& w) { return m.apply(w); }

Word fixpoint_prefix(const Morphism& m, char seed, std::size_t min_len) {
  if (!m.endomorphism()) throw std::invalid_argument("fixpoint: morphism must map its alphabet to itself");
  const Letter s = m.source().index_of(seed);
  const Word& img = m.image(s);
  if (img.size() < 2 || img[0] != s)
    throw std::invalid_argument("fixpoint: morphism not prolongable on seed (image must start with seed, length >= 2)");
  Word w(m.source(), {s});
  while (w.size() < min_len) w = m.apply(w);
  return w;
}

WordSpec::WordSpec(std::variant<Literal, Fixpoint> base, std::vector<Morphism> post)
    : base_(std::move(base)), post_(std::move(post)) {}

WordSpec WordSpec::literal(Word w) { return WordSpec(Literal{std::move(w)}, {}); }

namespace {

void require_prolongable(const Morphism& m, char seed) {
  if (!m.endomorphism()) throw std::invalid_argument("word spec: fixpoint morphism must map its alphabet to itself");
  const Letter s = m.source().index_of(seed);
  const Word& img = m.image(s);
  if (img.size() < 2 || img[0] != s)
    throw std::invalid_argument("word spec: morphism not prolongable on seed (image must start with seed, length >= 2)");
}

}  // namespace

WordSpec WordSpec::fixpoint(Morphism m, char seed) {
  require_prolongable(m, seed);
  return WordSpec(Fixpoint{std::move(m), seed}, {});
}

WordSpec WordSpec::then(Morphism m) const {
  WordSpec out = *this;
  out.post_.push_back(std::move(m));
  return out;
}

WordSpec WordSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = text.find('|', pos);
    if (bar == std::string_view::npos) {
      parts.push_back(text.substr(pos));
      break;
    }
    parts.push_back(text.substr(pos, bar - pos));
    pos = bar + 1;
  }
  const std::string_view base = parts.front();
  std::variant<Literal, Fixpoint> b = Literal{};
  if (base.starts_with("lit:")) {
    const std::string_view letters = base.substr(4);
    std::string distinct(letters);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.empty()) throw ParseError("word spec: empty literal", 5);
    b = Literal{Word::from_string(Alphabet(distinct), letters)};
  } else if (base.starts_with("fix:")) {
    const std::string_view body = base.substr(4);
    const std::size_t at = body.rfind('@');
    if (at == std::string_view::npos || at + 2 != body.size())
      throw ParseError("word spec: fixpoint needs a single seed letter after '@'", base.size());
    Morphism m = Morphism::parse(body.substr(0, at));
    const char seed = body[at + 1];
    try {
      require_prolongable(m, seed);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 5);
    }
    b = Fixpoint{std::move(m), seed};
  } else {
    throw ParseError("word spec: expected lit: or fix:", 1);
  }
  std::vector<Morphism> post;
  for (std::size_t i = 1; i < parts.size(); ++i) post.push_back(Morphism::parse(parts[i]));
  // chain mismatches (an image letter with no rule downstream) surface at
  // realize() with a clear message
  return WordSpec(std::move(b), std::move(post));
}

const Alphabet& WordSpec::alphabet() const {
  if (!post_.empty()) return post_.back().target();
  if (const auto* lit = std::get_if<Literal>(&base_)) return lit->word.alphabet();
  return std::get<Fixpoint>(base_).morphism.target();
}

Word WordSpec::realize(std::size_t min_len) const {
  // Walk the composition chain backwards to find how long each intermediate
  // word must be so the final image reaches min_len.
  std::vector<std::size_t> needed(post_.size() + 1);
  needed.back() = std::max<std::size_t>(min_len, 1);
  for (std::size_t i = post_.size(); i-- > 0;) {
    const std::size_t m = post_[i].min_image_length();
    needed[i] = (needed[i + 1] + m - 1) / m + 1;
  }
  Word w(alphabet());
  if (const auto* lit = std::get_if<Literal>(&base_)) {
    if (lit->word.size() < needed[0])
      throw std::invalid_argument("word spec: literal too short for requested length");
    w = lit->word;
  } else {
    const auto& fp = std::get<Fixpoint>(base_);
    w = fixpoint_prefix(fp.morphism, fp.seed, needed[0]);
  }
  for (const Morphism& m : post_) w = m.apply(w);
  if (w.size() < min_len) throw std::logic_error("word spec: realization fell short");  // unreachable
  return w;
}

std::string WordSpec::str() const {
  std::string out;
  if (const auto* lit = std::get_if<Literal>(&base_)) {
    out = "lit:" + lit->word.str();
  } else {
    const auto& fp = std::get<Fixpoint>(base_);
    out = "fix:" + fp.morphism.str() + "@" + std::string(1, fp.seed);
  }
  for (const Morphism& m : post_) out += "|" + m.str();
  return out;
}

Word realize_word(const WordSpec& spec, std::size_t min_len) { return spec.realize(min_len); }

std::vector<Factor> factors(const Word& w, std::size_t len_min, std::size_t len_max) {
  std::vector<Factor> out;
  for_each_factor(w, len_min, len_max, [&](std::size_t pos1, std::span<const Letter> sym) {
    out.push_back(Factor{pos1, Word(w.alphabet(), std::vector<Letter>(sym.begin(), sym.end()))});
  });
  return out;
}

}  // namespace pavi
