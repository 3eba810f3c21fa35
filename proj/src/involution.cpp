#include "pavi/involution.hpp"

#include <algorithm>

namespace pavi {

std::string_view to_string(Mode mode) { return mode == Mode::morphic ? "morphic" : "antimorphic"; }

Mode parse_mode(std::string_view text) {
  if (text == "morphic") return Mode::morphic;
  if (text == "antimorphic") return Mode::antimorphic;
  throw std::invalid_argument("mode: expected 'morphic' or 'antimorphic'");
}

Involution::Involution(Alphabet alphabet, std::vector<Letter> perm, Mode mode)
    : alphabet_(std::move(alphabet)), perm_(std::move(perm)), mode_(mode) {
  if (perm_.size() != alphabet_.size()) throw std::invalid_argument("involution: permutation size mismatch");
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] >= perm_.size() || perm_[perm_[i]] != i)
      throw std::invalid_argument("involution: mapping is not an involutive permutation");
  }
}

Involution Involution::identity(Alphabet alphabet, Mode mode) {
  std::vector<Letter> perm(alphabet.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Letter>(i);
  return Involution(std::move(alphabet), std::move(perm), mode);
}

Involution Involution::parse(std::string_view text, const Alphabet& alphabet, Mode mode) {
  const std::size_t colon = text.find(':');
  std::size_t base = 0;
  if (colon != std::string_view::npos) {
    const Mode tagged = parse_mode(text.substr(0, colon));
    if (tagged != mode) throw std::invalid_argument("involution: mode prefix disagrees with requested mode");
    base = colon + 1;
  }
  const std::string_view body = text.substr(base);
  Involution out = identity(alphabet, mode);
  if (body == "id") return out;
  std::vector<bool> mentioned(alphabet.size(), false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, base + pos + 1); };
  while (pos < body.size()) {
    if (body[pos] != '(') throw fail("involution: expected '('");
    const std::size_t close = body.find(')', pos);
    if (close == std::string_view::npos) throw fail("involution: missing ')'");
    const std::string_view cycle = body.substr(pos + 1, close - pos - 1);
    if (cycle.size() < 1 || cycle.size() > 2)
      throw fail("involution: cycles must be fixed points or transpositions");
    Letter a = alphabet.index_of(cycle[0]);
    Letter b = cycle.size() == 2 ? alphabet.index_of(cycle[1]) : a;
    if (mentioned[a] || (b != a && mentioned[b])) throw fail("involution: letter mentioned twice");
    mentioned[a] = mentioned[b] = true;
    out.perm_[a] = b;
    out.perm_[b] = a;
    pos = close + 1;
  }
  return out;
}

bool Involution::identity_perm() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

Word Involution::apply(const Word& w) const {
  if (w.alphabet() != alphabet_) throw std::invalid_argument("involution: word over a different alphabet");
  const auto sym = w.symbols();
  std::vector<Letter> out(sym.size());
  if (mode_ == Mode::morphic) {
    for (std::size_t i = 0; i < sym.size(); ++i) out[i] = perm_[sym[i]];
  } else {
    // Permute letterwise, then reverse: equal to the inductive
    // anti-homomorphic extension.
    for (std::size_t i = 0; i < sym.size(); ++i) out[i] = perm_[sym[sym.size() - 1 - i]];
  }
  return Word(alphabet_, std::move(out));
}

std::string Involution::str() const {
  std::string out(to_string(mode_));
  out.push_back(':');
  if (identity_perm()) {
    out += "id";
    return out;
  }
  std::vector<bool> done(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (done[i]) continue;
    done[i] = true;
    out.push_back('(');
    out.push_back(alphabet_.letter(static_cast<Letter>(i)));
    if (perm_[i] != i) {
      done[perm_[i]] = true;
      out.push_back(alphabet_.letter(perm_[i]));
    }
    out.push_back(')');
  }
  return out;
}

namespace {

void build_involutions(std::vector<Letter>& perm, std::vector<bool>& used, std::size_t i,
                       const Alphabet& alphabet, Mode mode, std::vector<Involution>& out) {
  const std::size_t k = perm.size();
  while (i < k && used[i]) ++i;
  if (i == k) {
    out.emplace_back(alphabet, perm, mode);
    return;
  }
  // Smallest image first keeps the output lexicographic on image sequences.
  used[i] = true;
  perm[i] = static_cast<Letter>(i);
  build_involutions(perm, used, i + 1, alphabet, mode, out);
  for (std::size_t j = i + 1; j < k; ++j) {
    if (used[j]) continue;
    used[j] = true;
    perm[i] = static_cast<Letter>(j);
    perm[j] = static_cast<Letter>(i);
    build_involutions(perm, used, i + 1, alphabet, mode, out);
    used[j] = false;
  }
  used[i] = false;
}

}  // namespace

std::vector<Involution> enumerate_involutions(const Alphabet& alphabet, Mode mode) {
  std::vector<Letter> perm(alphabet.size(), 0);
  std::vector<bool> used(alphabet.size(), false);
  std::vector<Involution> out;
  build_involutions(perm, used, 0, alphabet, mode, out);
  return out;
}

Word apply_involution(const Involution& theta, const Word& w) { return theta.apply(w); }

}  // namespace pavi
