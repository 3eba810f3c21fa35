#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pavi/pattern.hpp"

namespace pavi {

/// Finite unavoidability witness: every word of length `depth` over the
/// k-letter alphabet contains the pattern for some involution of the mode,
/// with variable lengths <= max_var_len_used. Re-checkable by scanning all
/// k^depth words when that is small.
struct UnavoidabilityCertificate {
  Pattern pattern;
  Mode mode;
  std::size_t alphabet_size = 0;
  std::size_t depth = 0;
  std::uint64_t nodes_explored = 0;
  std::size_t max_var_len_used = 0;
  /// True when max_var_len_used is large enough that no occurrence inside a
  /// word of length <= max_depth could have been missed.
  bool conclusive = true;
};

/// Some word of length max_depth survived: the search is inconclusive and
/// the witness is a longest explored avoiding word (lexicographically least).
struct SearchExceeded {
  Word witness;
  std::uint64_t nodes_explored = 0;
};

using ProveResult = std::variant<UnavoidabilityCertificate, SearchExceeded>;

bool proved(const ProveResult& r);
const UnavoidabilityCertificate& certificate(const ProveResult& r);

struct ProveOptions {
  std::size_t max_depth = 32;
  /// Defaults to max_depth, which can never miss an occurrence at any
  /// explored depth. Lowering it is recorded in the certificate.
  std::optional<std::size_t> max_var_len;
};

/// Depth-first search over the k-ary word tree, extending letter by letter
/// and pruning a branch as soon as the word contains p for some involution
/// of the mode. All branches dead by depth L <= max_depth yields a
/// certificate with that L; otherwise the first surviving word of length
/// max_depth is returned.
ProveResult prove_unavoidable(const Pattern& p, std::size_t k, Mode mode, const ProveOptions& opts = {});

/// Same verdict as prove_unavoidable but only explores words starting with
/// the first alphabet letter; sound because the involution set of a mode is
/// closed under conjugation by letter permutations.
ProveResult symmetry_reduced_prove(const Pattern& p, std::size_t k, Mode mode, const ProveOptions& opts = {});

/// Smallest variable length bound that cannot miss any occurrence of p
/// inside a word of length max_depth.
std::size_t exhaustive_var_len(const Pattern& p, std::size_t max_depth);

/// Re-checks a certificate the direct way: scans all k^depth words and
/// verifies each contains the pattern for some involution of the mode with
/// the recorded variable-length bound. Only for k^depth <= 2^26.
bool recheck_certificate_by_scan(const UnavoidabilityCertificate& c);

/// Bounded negative search result: the realized prefix of word_spec contains
/// no occurrence of pattern for any involution of the mode with variable
/// lengths <= max_var_len. Evidence for avoidance, never proof.
struct AvoidanceEvidence {
  WordSpec word_spec;
  std::size_t prefix_len = 0;
  Pattern pattern;
  Mode mode;
  std::size_t max_var_len = 0;
};

/// Thrown when a search that is expected to come up empty finds a witness.
class CounterexampleError : public std::runtime_error {
public:
  CounterexampleError(const std::string& what, Occurrence occ);
  const Occurrence& occurrence() const { return occurrence_; }

private:
  Occurrence occurrence_;
};

struct BlockCheckSolution {
  std::string block_seq;  // over 'x'/'y'
  Word host;
  Occurrence occurrence;  // of u theta(u) u; u = occurrence.assignment[0]
};

struct FiniteCheckReport {
  Word x;
  Word y;
  std::size_t block_seq_len = 0;
  std::vector<std::string> forbidden;  // block sequences over 'x'/'y'
  std::size_t max_u_len = 0;
  Mode mode;
  std::size_t admissible_sequences = 0;
  std::vector<BlockCheckSolution> solutions;  // first hit per (sequence, involution)
};

/// Enumerates every block sequence in {x,y}^block_seq_len avoiding the
/// forbidden block factors, realizes each as a word, and searches it for
/// u theta(u) u with 1 <= |u| <= max_u_len under every involution of the
/// mode. Empty `solutions` means no such u exists anywhere.
FiniteCheckReport finite_block_check(const Word& x, const Word& y, std::size_t block_seq_len,
                                     const std::vector<std::string>& forbidden, std::size_t max_u_len, Mode mode);

/// The ternary words obtained from the Thue-Morse word by the block
/// substitutions a->aacb, b->accb (morphic case) and a->aabbc, b->aaccb
/// (antimorphic case).
WordSpec block_construction_spec(Mode mode);

/// Standard square-free witness over {a,b,c}: fixpoint of a->abc, b->ac,
/// c->b.
WordSpec square_free_spec();

/// Realizes the square-free witness to exactly prefix_len letters and checks
/// it really is square-free before handing it out; a square throws
/// CounterexampleError.
Word validated_square_free_prefix(std::size_t prefix_len);

/// Realizes the block construction for the mode and verifies that its
/// prefix avoids a t(a) a for every involution of the mode within the
/// variable-length bound. A hit throws CounterexampleError.
AvoidanceEvidence verify_construction(Mode mode, std::size_t prefix_len, std::size_t max_var_len);

struct DoubledLetterReport {
  std::size_t prefix_len = 0;
  std::size_t aa_then_c = 0;
  std::size_t cc_then_b = 0;
};

/// Scans any word for positions i with w[i] == w[i+1] and classifies the
/// letter that follows; any doubled pair other than "aa then c" / "cc then
/// b" throws with its 1-based position. Pairs at the very end (no third
/// letter) are not auditable and are skipped.
DoubledLetterReport audit_doubled_letters(const Word& w);

/// audit_doubled_letters on the morphic block construction prefix.
DoubledLetterReport doubled_letter_audit(std::size_t prefix_len);

enum class IndexVerdict { proven_unavoidable, evidence_avoidable, inconclusive };

std::string_view to_string(IndexVerdict v);

struct IndexRow {
  std::size_t k = 0;
  Mode mode;
  IndexVerdict verdict;
  std::optional<std::size_t> depth;     // certificate depth when proven
  std::optional<std::string> witness;   // word spec text when evidence found
};

struct IndexReport {
  Pattern pattern;
  std::vector<IndexRow> rows;
};

/// For each alphabet size k <= max_k and each mode, runs the prover
/// (establishing lower bounds when certificates appear) and checks the
/// supplied witness specs of matching alphabet size for bounded avoidance.
IndexReport index_report(const Pattern& p, std::size_t max_k, const std::vector<WordSpec>& witnesses,
                         std::size_t prover_depth, std::size_t max_var_len, std::size_t witness_prefix_len);

// Line-oriented text renderings.
std::string to_text(const UnavoidabilityCertificate& c);
std::string to_text(const SearchExceeded& e);
std::string to_text(const AvoidanceEvidence& e);
std::string to_text(const FiniteCheckReport& r);
std::string to_text(const DoubledLetterReport& r);
std::string to_text(const IndexReport& r);

// Machine-readable JSON documents (one per value).
std::string to_json_string(const UnavoidabilityCertificate& c);
std::string to_json_string(const SearchExceeded& e);
std::string to_json_string(const AvoidanceEvidence& e);
std::string to_json_string(const FiniteCheckReport& r);

}  // namespace pavi
