#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "pavi/involution.hpp"
#include "pavi/pattern.hpp"

using namespace pavi;

namespace {

Word random_word(std::mt19937& rng, const Alphabet& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, static_cast<int>(alphabet.size()) - 1);
  std::vector<Letter> symbols(len_dist(rng));
  for (auto& s : symbols) s = static_cast<Letter>(letter_dist(rng));
  return Word(alphabet, std::move(symbols));
}

// next_permutation filter, as an independent route to the involution set
std::vector<std::vector<Letter>> brute_force_involutive_perms(std::size_t k) {
  std::vector<Letter> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Letter>> out;
  do {
    bool involutive = true;
    for (std::size_t i = 0; i < k && involutive; ++i) involutive = perm[perm[i]] == i;
    if (involutive) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;  // next_permutation yields lexicographic order
}

}  // namespace

TEST_CASE("enumerate_involutions counts and order") {
  CHECK(enumerate_involutions(Alphabet::standard(1), Mode::morphic).size() == 1);
  const auto two = enumerate_involutions(Alphabet::standard(2), Mode::morphic);
  REQUIRE(two.size() == 2);
  CHECK(two[0].identity_perm());
  CHECK(two[1].str() == "morphic:(ab)");
  const auto three = enumerate_involutions(Alphabet::standard(3), Mode::antimorphic);
  REQUIRE(three.size() == 4);
  CHECK(three[0].str() == "antimorphic:id");
  CHECK(three[1].str() == "antimorphic:(a)(bc)");
  CHECK(three[2].str() == "antimorphic:(ab)(c)");
  CHECK(three[3].str() == "antimorphic:(ac)(b)");
}

TEST_CASE("enumeration agrees with the brute-force filter for k <= 5") {
  const std::size_t expected_counts[] = {1, 2, 4, 10, 26};
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto got = enumerate_involutions(Alphabet::standard(k), Mode::morphic);
    const auto want = brute_force_involutive_perms(k);
    REQUIRE(got.size() == want.size());
    CHECK(got.size() == expected_counts[k - 1]);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].perm() == want[i]);
  }
}

TEST_CASE("apply_involution") {
  const Alphabet ab("ab");
  const Alphabet abc("abc");
  const Involution swap2 = Involution::parse("(ab)", ab, Mode::morphic);
  CHECK(swap2.apply(Word::from_string(ab, "ab")).str() == "ba");

  const Involution rev = Involution::identity(abc, Mode::antimorphic);
  CHECK(rev.apply(Word::from_string(abc, "abc")).str() == "cba");

  // theta(aabbc) = theta(c) theta(b) theta(b) theta(a) theta(a) = caabb
  const Involution anti_swap = Involution::parse("(ab)(c)", abc, Mode::antimorphic);
  CHECK(anti_swap.apply(Word::from_string(abc, "aabbc")).str() == "caabb");

  CHECK_THROWS_AS(swap2.apply(Word::from_string(abc, "abc")), std::invalid_argument);
}

TEST_CASE("involution laws on random words") {
  std::mt19937 rng(20240812);
  for (std::size_t k : {1u, 2u, 3u, 4u}) {
    const Alphabet alphabet = Alphabet::standard(k);
    for (Mode mode : {Mode::morphic, Mode::antimorphic}) {
      const auto thetas = enumerate_involutions(alphabet, mode);
      for (int i = 0; i < 120; ++i) {
        const Involution& theta = thetas[rng() % thetas.size()];
        const Word w = random_word(rng, alphabet, 24);
        const Word u = random_word(rng, alphabet, 12);
        CHECK(theta.apply(theta.apply(w)) == w);
        CHECK(theta.apply(w).size() == w.size());
        if (mode == Mode::morphic) {
          CHECK(theta.apply(u + w) == theta.apply(u) + theta.apply(w));
        } else {
          CHECK(theta.apply(u + w) == theta.apply(w) + theta.apply(u));
        }
      }
    }
  }
}

TEST_CASE("involution text notation") {
  const Alphabet abc("abc");
  const Involution i1 = Involution::parse("morphic:(ab)(c)", abc, Mode::morphic);
  CHECK(i1.str() == "morphic:(ab)(c)");
  CHECK(Involution::parse("(ac)", abc, Mode::antimorphic).str() == "antimorphic:(ac)(b)");
  CHECK(Involution::parse("antimorphic:id", abc, Mode::antimorphic).identity_perm());
  CHECK_THROWS_AS(Involution::parse("morphic:(ab)", abc, Mode::antimorphic), std::invalid_argument);
  CHECK_THROWS_AS(Involution::parse("(abc)", abc, Mode::morphic), ParseError);
  CHECK_THROWS_AS(Involution::parse("(ab)(b)", abc, Mode::morphic), ParseError);
  CHECK_THROWS_AS(Involution::parse("(ab", abc, Mode::morphic), ParseError);
  CHECK_THROWS_AS(Involution(abc, {1, 2, 0}, Mode::morphic), std::invalid_argument);
}

TEST_CASE("a constant word avoids mixed patterns when theta moves its letter") {
  // Property, not an operation: a^n avoids any pattern mixing a variable and
  // its theta image whenever theta(a) != a; with the identity it cannot.
  const Alphabet ab("ab");
  std::vector<Letter> symbols(16, 0);
  const Word host(ab, std::move(symbols));
  const Pattern p = Pattern::parse("a t(a)");
  const Involution swap2 = Involution::parse("(ab)", ab, Mode::morphic);
  CHECK(!find_occurrence(host, p, swap2, 8).has_value());
  const Involution id = Involution::identity(ab, Mode::morphic);
  const auto occ = find_occurrence(host, p, id, 8);
  REQUIRE(occ.has_value());
  CHECK(occ->position == 1);
}
