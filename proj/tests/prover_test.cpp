#include <random>

#include "doctest.h"
#include "json.hpp"
#include "pavi/prover.hpp"

using namespace pavi;

namespace {

const Alphabet kAb("ab");
const Alphabet kAbc("abc");

// Independent route to the certificate depth: the smallest L such that all
// k^L words contain the pattern for some involution of the mode.
std::size_t minimal_unavoidable_depth(const Pattern& p, std::size_t k, Mode mode, std::size_t cap) {
  const Alphabet alphabet = Alphabet::standard(k);
  const auto thetas = enumerate_involutions(alphabet, mode);
  std::vector<Letter> w;
  for (std::size_t L = 1; L <= cap; ++L) {
    w.assign(L, 0);
    bool all_contain = true;
    while (all_contain) {
      if (!contains_any_involution(w, p, thetas, L)) all_contain = false;
      std::size_t i = L;
      while (i > 0 && static_cast<std::size_t>(++w[i - 1]) == k) {
        w[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
    if (all_contain) return L;
  }
  return 0;
}

Word random_word(std::mt19937& rng, const Alphabet& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<int> letter_dist(0, static_cast<int>(alphabet.size()) - 1);
  std::vector<Letter> symbols(len_dist(rng));
  for (auto& s : symbols) s = static_cast<Letter>(letter_dist(rng));
  return Word(alphabet, std::move(symbols));
}

}  // namespace

TEST_CASE("prover: a t(a) a is binary-unavoidable at depth 6, both modes") {
  const Pattern p = Pattern::parse("a t(a) a");
  for (Mode mode : {Mode::morphic, Mode::antimorphic}) {
    const ProveResult res = prove_unavoidable(p, 2, mode, ProveOptions{16, std::nullopt});
    REQUIRE(proved(res));
    const auto& cert = certificate(res);
    CHECK(cert.depth == 6);
    CHECK(cert.conclusive);
    CHECK(cert.alphabet_size == 2);
    CHECK(cert.depth == minimal_unavoidable_depth(p, 2, mode, 8));
    CHECK(recheck_certificate_by_scan(cert));
  }
}

TEST_CASE("prover: squares are binary-unavoidable at depth 4") {
  const Pattern p = Pattern::parse("a a");
  const ProveResult res = prove_unavoidable(p, 2, Mode::morphic, ProveOptions{8, std::nullopt});
  REQUIRE(proved(res));
  CHECK(certificate(res).depth == 4);
  CHECK(certificate(res).depth == minimal_unavoidable_depth(p, 2, Mode::morphic, 6));
  CHECK(recheck_certificate_by_scan(certificate(res)));
}

TEST_CASE("prover: cubes exceed at depth 64 and the witness is extendable") {
  const Pattern cubes = Pattern::parse("a a a");
  const ProveResult res = prove_unavoidable(cubes, 2, Mode::morphic, ProveOptions{64, std::nullopt});
  REQUIRE(!proved(res));
  const auto& e = std::get<SearchExceeded>(res);
  CHECK(e.witness.size() == 64);
  const Involution id = Involution::identity(kAb, Mode::morphic);
  CHECK(!find_occurrence(e.witness, cubes, id, 22).has_value());
  // the Thue-Morse prefix is another survivor
  const Word tm64 = fixpoint_prefix(Morphism::parse("a=ab,b=ba"), 'a', 64).prefix(64);
  CHECK(!find_occurrence(tm64, cubes, id, 22).has_value());
}

TEST_CASE("prover: a a t(a) and its mirror certify at depth 7 in both modes") {
  for (const char* text : {"a a t(a)", "t(a) a a"}) {
    const Pattern p = Pattern::parse(text);
    for (Mode mode : {Mode::morphic, Mode::antimorphic}) {
      const ProveResult res = prove_unavoidable(p, 2, mode, ProveOptions{16, std::nullopt});
      REQUIRE(proved(res));
      CHECK(certificate(res).depth == 7);
      CHECK(recheck_certificate_by_scan(certificate(res)));
    }
  }
}

TEST_CASE("prover: single-variable pattern dies immediately") {
  const ProveResult res = prove_unavoidable(Pattern::parse("a"), 2, Mode::morphic, ProveOptions{4, std::nullopt});
  REQUIRE(proved(res));
  CHECK(certificate(res).depth == 1);
  CHECK(recheck_certificate_by_scan(certificate(res)));
}

TEST_CASE("symmetry-reduced prover agrees and explores less") {
  for (const char* text : {"a t(a) a", "a a t(a)", "a a", "a a b"}) {
    const Pattern p = Pattern::parse(text);
    for (Mode mode : {Mode::morphic, Mode::antimorphic}) {
      const ProveResult full = prove_unavoidable(p, 2, mode, ProveOptions{24, std::nullopt});
      const ProveResult reduced = symmetry_reduced_prove(p, 2, mode, ProveOptions{24, std::nullopt});
      REQUIRE(proved(full));
      REQUIRE(proved(reduced));
      CHECK(certificate(full).depth == certificate(reduced).depth);
      CHECK(certificate(reduced).nodes_explored < certificate(full).nodes_explored);
    }
  }
  // k = 1: the reduction is vacuous
  const Pattern ata = Pattern::parse("a t(a) a");
  const ProveResult full1 = prove_unavoidable(ata, 1, Mode::morphic, ProveOptions{8, std::nullopt});
  const ProveResult red1 = symmetry_reduced_prove(ata, 1, Mode::morphic, ProveOptions{8, std::nullopt});
  REQUIRE(proved(full1));
  REQUIRE(proved(red1));
  CHECK(certificate(full1).depth == 3);
  CHECK(certificate(red1).depth == 3);
  // inconclusive searches return the same lexicographically-least survivor
  const ProveResult full3 = prove_unavoidable(ata, 3, Mode::morphic, ProveOptions{10, std::nullopt});
  const ProveResult red3 = symmetry_reduced_prove(ata, 3, Mode::morphic, ProveOptions{10, std::nullopt});
  REQUIRE(!proved(full3));
  REQUIRE(!proved(red3));
  CHECK(std::get<SearchExceeded>(full3).witness == std::get<SearchExceeded>(red3).witness);
}

TEST_CASE("both provers agree on the whole studied pattern set at k = 2 and 3") {
  const std::vector<const char*> patterns{
      "a t(a) a",  "a a t(a)", "t(a) a a", "t(a) a t(a)", "t(a) t(a) a", "a t(a) t(a)",
      "a a",       "a a b",    "b a a",    "a a b a",     "a b b a",     "a a b b",
      "a b a b",   "a a b a a", "a a b a b"};
  for (const char* text : patterns) {
    const Pattern p = Pattern::parse(text);
    for (Mode mode : {Mode::morphic, Mode::antimorphic}) {
      const ProveResult full2 = prove_unavoidable(p, 2, mode, ProveOptions{44, std::nullopt});
      const ProveResult red2 = symmetry_reduced_prove(p, 2, mode, ProveOptions{44, std::nullopt});
      REQUIRE(proved(full2));
      REQUIRE(proved(red2));
      CHECK(certificate(full2).depth == certificate(red2).depth);
      // ternary searches stay inconclusive: these patterns are all avoidable
      // over three letters, and both provers land on the same survivor
      const ProveResult full3 = prove_unavoidable(p, 3, mode, ProveOptions{9, std::nullopt});
      const ProveResult red3 = symmetry_reduced_prove(p, 3, mode, ProveOptions{9, std::nullopt});
      REQUIRE(!proved(full3));
      REQUIRE(!proved(red3));
      CHECK(std::get<SearchExceeded>(full3).witness == std::get<SearchExceeded>(red3).witness);
    }
  }
}

TEST_CASE("certificate depths are invariant under theta complement") {
  for (const char* text : {"a t(a) a", "a a t(a)", "t(a) a a", "a a", "a a b"}) {
    const Pattern p = Pattern::parse(text);
    const Pattern q = theta_complement(p);
    for (Mode mode : {Mode::morphic, Mode::antimorphic}) {
      const ProveResult rp = prove_unavoidable(p, 2, mode, ProveOptions{16, std::nullopt});
      const ProveResult rq = prove_unavoidable(q, 2, mode, ProveOptions{16, std::nullopt});
      REQUIRE(proved(rp));
      REQUIRE(proved(rq));
      CHECK(certificate(rp).depth == certificate(rq).depth);
      // k = 3 stays inconclusive for both
      const ProveResult rp3 = prove_unavoidable(p, 3, mode, ProveOptions{10, std::nullopt});
      const ProveResult rq3 = prove_unavoidable(q, 3, mode, ProveOptions{10, std::nullopt});
      CHECK(proved(rp3) == proved(rq3));
    }
  }
}

TEST_CASE("exhaustive_var_len and the conclusiveness guard") {
  CHECK(exhaustive_var_len(Pattern::parse("a a"), 4) == 2);
  CHECK(exhaustive_var_len(Pattern::parse("a t(a) a"), 6) == 2);
  CHECK(exhaustive_var_len(Pattern::parse("a a b"), 8) == 6);
  CHECK(exhaustive_var_len(Pattern::parse("a a"), 1) == 0);

  // cutting the bound below the exhaustive one loses occurrences: squares of
  // length > 1 go unseen, so (ab)* survives and the search exceeds
  const ProveResult res =
      prove_unavoidable(Pattern::parse("a a"), 2, Mode::morphic, ProveOptions{8, 1});
  CHECK(!proved(res));

  // a lowered bound that still certifies is flagged as non-exhaustive
  const ProveResult res2 =
      prove_unavoidable(Pattern::parse("a t(a) a"), 2, Mode::morphic, ProveOptions{16, 2});
  REQUIRE(proved(res2));
  CHECK(certificate(res2).depth == 6);
  CHECK(!certificate(res2).conclusive);  // 2 < exhaustive_var_len for depth 16
  CHECK(certificate(res2).max_var_len_used == 2);
}

TEST_CASE("scan rejects an understated certificate") {
  const UnavoidabilityCertificate bogus{Pattern::parse("a t(a) a"), Mode::morphic, 2, 3, 0, 3, true};
  CHECK(!recheck_certificate_by_scan(bogus));
  const UnavoidabilityCertificate huge{Pattern::parse("a a"), Mode::morphic, 2, 40, 0, 40, true};
  CHECK_THROWS_AS(recheck_certificate_by_scan(huge), std::invalid_argument);
}

TEST_CASE("extending by one letter only adds occurrences at the new end") {
  std::mt19937 rng(20240816);
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = 1 + rng() % 3;
    const Alphabet alphabet = Alphabet::standard(k);
    const Mode mode = (rng() & 1) ? Mode::morphic : Mode::antimorphic;
    const auto thetas = enumerate_involutions(alphabet, mode);
    const Involution& theta = thetas[rng() % thetas.size()];
    const Word w = random_word(rng, alphabet, 12);
    const Pattern p = [&] {
      switch (rng() % 4) {
        case 0: return Pattern::parse("a t(a) a");
        case 1: return Pattern::parse("a a t(a)");
        case 2: return Pattern::parse("a b a");
        default: return Pattern::parse("a a");
      }
    }();
    const auto all = w.symbols();
    const auto prefix = all.subspan(0, all.size() - 1);
    const bool full_scan = contains_occurrence(all, p, theta, 6);
    const bool incremental = contains_occurrence(prefix, p, theta, 6) || contains_ending_at_end(all, p, theta, 6);
    CHECK(full_scan == incremental);
  }
}

TEST_CASE("finite_block_check positive control and admissibility filter") {
  const Alphabet a1("a");
  const Word unit = Word::from_string(a1, "a");
  const FiniteCheckReport hit = finite_block_check(unit, unit, 3, {}, 1, Mode::morphic);
  CHECK(hit.admissible_sequences == 8);
  REQUIRE(!hit.solutions.empty());
  CHECK(hit.solutions.front().host.str() == "aaa");
  CHECK(hit.solutions.front().occurrence.assignment[0].str() == "a");

  const Word x = Word::from_string(kAb, "ab");
  const Word y = Word::from_string(kAb, "ba");
  const FiniteCheckReport filt = finite_block_check(x, y, 3, {"xx"}, 1, Mode::morphic);
  CHECK(filt.admissible_sequences == 5);  // xyx, xyy, yxy, yyx, yyy

  CHECK_THROWS_AS(finite_block_check(unit, Word::from_string(kAb, "a"), 2, {}, 1, Mode::morphic),
                  std::invalid_argument);
}

TEST_CASE("finite_block_check reproduces both delegated computations") {
  const FiniteCheckReport thm3 =
      finite_block_check(Word::from_string(kAbc, "aacb"), Word::from_string(kAbc, "accb"), 6,
                         {"xxx", "yyy", "xyxyx", "yxyxy"}, 6, Mode::morphic);
  CHECK(thm3.admissible_sequences == 20);
  CHECK(thm3.solutions.empty());

  const FiniteCheckReport thm4 =
      finite_block_check(Word::from_string(kAbc, "aabbc"), Word::from_string(kAbc, "aaccb"), 6,
                         {"xxx", "yyy", "xyxyx", "yxyxy"}, 8, Mode::antimorphic);
  CHECK(thm4.admissible_sequences == 20);
  CHECK(thm4.solutions.empty());
}

TEST_CASE("verify_construction smoke runs") {
  const AvoidanceEvidence ev = verify_construction(Mode::morphic, 12, 2);
  CHECK(ev.prefix_len == 12);
  CHECK(ev.word_spec.realize(12).prefix(12).str() == "aacbaccbaccb");
  const AvoidanceEvidence ev4 = verify_construction(Mode::antimorphic, 10, 2);
  CHECK(ev4.word_spec.realize(10).prefix(10).str() == "aabbcaaccb");
  CHECK_THROWS_AS(verify_construction(Mode::morphic, 0, 2), std::invalid_argument);
}

TEST_CASE("validated square-free witness") {
  const Word sf = validated_square_free_prefix(512);
  CHECK(sf.size() == 512);
  CHECK(sf.prefix(12).str() == "abcacbabcbac");
}

TEST_CASE("doubled-letter audit") {
  const DoubledLetterReport rep12 = doubled_letter_audit(12);
  CHECK(rep12.aa_then_c == 1);  // aacbaccbaccb: pairs at 1, 6, 10
  CHECK(rep12.cc_then_b == 2);
  const DoubledLetterReport rep3 = doubled_letter_audit(3);
  CHECK(rep3.aa_then_c == 1);
  CHECK(rep3.cc_then_b == 0);
  CHECK_THROWS_AS(doubled_letter_audit(2), std::invalid_argument);

  CHECK_THROWS_WITH_AS(audit_doubled_letters(Word::from_string(kAbc, "aab")),
                       doctest::Contains("position 1"), std::runtime_error);
  CHECK_THROWS_AS(audit_doubled_letters(Word::from_string(kAbc, "bba")), std::runtime_error);
  CHECK_NOTHROW(audit_doubled_letters(Word::from_string(kAbc, "ccb")));
  // an unauditable pair at the very end is skipped
  CHECK_NOTHROW(audit_doubled_letters(Word::from_string(kAbc, "abb")));
}

TEST_CASE("index_report classifies alphabet sizes") {
  const std::vector<WordSpec> block_witnesses{block_construction_spec(Mode::morphic),
                                              block_construction_spec(Mode::antimorphic)};
  const IndexReport rep = index_report(Pattern::parse("a t(a) a"), 3, block_witnesses, 12, 30, 2000);
  REQUIRE(rep.rows.size() == 6);
  for (const IndexRow& row : rep.rows) {
    if (row.k <= 2) {
      CHECK(row.verdict == IndexVerdict::proven_unavoidable);
      CHECK(*row.depth == (row.k == 1 ? 3 : 6));
    } else {
      CHECK(row.verdict == IndexVerdict::evidence_avoidable);
      REQUIRE(row.witness.has_value());
    }
  }

  const IndexReport rep2 = index_report(Pattern::parse("a a t(a)"), 3, {square_free_spec()}, 12, 30, 2000);
  for (const IndexRow& row : rep2.rows) {
    if (row.k == 2) CHECK(*row.depth == 7);
    if (row.k == 3) CHECK(row.verdict == IndexVerdict::evidence_avoidable);
  }

  // nothing of matching size to test at k = 3
  const IndexReport rep3 = index_report(Pattern::parse("t(a) a a"), 3, {}, 12, 30, 2000);
  CHECK(rep3.rows[4].verdict == IndexVerdict::inconclusive);
  CHECK(rep3.rows[2].verdict == IndexVerdict::proven_unavoidable);
  const std::string text = to_text(rep3);
  CHECK(text.find("INCONCLUSIVE") != std::string::npos);
  CHECK(text.find("PROVEN-UNAVOIDABLE") != std::string::npos);
}

TEST_CASE("certificate serialization") {
  const ProveResult res = prove_unavoidable(Pattern::parse("a t(a) a"), 2, Mode::morphic,
                                            ProveOptions{16, std::nullopt});
  REQUIRE(proved(res));
  const auto& cert = certificate(res);
  CHECK(to_text(cert) ==
        "certificate pattern=\"a t(a) a\" mode=morphic k=2 depth=6 nodes=" +
            std::to_string(cert.nodes_explored) + " max-var-len=16 conclusive=yes");
  const auto j = nlohmann::json::parse(to_json_string(cert));
  CHECK(j.at("type") == "unavoidability_certificate");
  CHECK(j.at("pattern") == "a t(a) a");
  CHECK(j.at("mode") == "morphic");
  CHECK(j.at("alphabet_size") == 2);
  CHECK(j.at("depth") == 6);
  CHECK(j.at("max_var_len_used") == 16);
  CHECK(j.at("conclusive") == true);

  const FiniteCheckReport thm3 =
      finite_block_check(Word::from_string(kAbc, "aacb"), Word::from_string(kAbc, "accb"), 2, {}, 2,
                         Mode::morphic);
  const auto jb = nlohmann::json::parse(to_json_string(thm3));
  CHECK(jb.at("x") == "aacb");
  CHECK(jb.at("admissible_sequences") == 4);

  const AvoidanceEvidence ev = verify_construction(Mode::morphic, 12, 2);
  const auto je = nlohmann::json::parse(to_json_string(ev));
  CHECK(je.at("result") == "no-occurrence");
  CHECK(je.at("word_spec") == "fix:a=ab,b=ba@a|a=aacb,b=accb");

  const ProveResult exceeded = prove_unavoidable(Pattern::parse("a a a"), 2, Mode::morphic,
                                                 ProveOptions{16, std::nullopt});
  REQUIRE(!proved(exceeded));
  const auto& e = std::get<SearchExceeded>(exceeded);
  CHECK(to_text(e) == "exceeded witness=" + e.witness.str() + " nodes=" + std::to_string(e.nodes_explored));
  const auto jx = nlohmann::json::parse(to_json_string(e));
  CHECK(jx.at("type") == "search_exceeded");
  CHECK(jx.at("witness") == e.witness.str());
}
