#pragma once

#include <span>
#include <vector>

#include "pavi/pattern.hpp"

namespace pavi::testing {

// Reference matcher, deliberately structured differently from the library's
// anchored DFS: it enumerates every factor of the host and every split of
// the factor into |terms| nonempty parts, then solves for an assignment
// consistent with all parts. Theta images of host segments are segments of
// one precomputed array, so consistency checks are plain span compares.
class Oracle {
public:
  Oracle(const Word& host, const Involution& theta)
      : sym_(host.symbols()), anti_(theta.mode() == Mode::antimorphic), mapped_(sym_.size()) {
    const std::size_t n = sym_.size();
    for (std::size_t i = 0; i < n; ++i) mapped_[i] = theta.map(sym_[anti_ ? n - 1 - i : i]);
  }

  bool contains(const Pattern& p, std::size_t bound) const {
    const std::size_t n = sym_.size();
    const std::size_t t = p.size();
    if (n < t) return false;
    std::vector<std::span<const Letter>> value(p.num_vars());
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t total = t; total <= n - start; ++total) {
        for (auto& v : value) v = {};
        if (split(p.terms(), 0, start, total, bound, value)) return true;
      }
    }
    return false;
  }

private:
  std::span<const Letter> theta_seg(std::size_t off, std::size_t len) const {
    return std::span<const Letter>(mapped_).subspan(anti_ ? sym_.size() - off - len : off, len);
  }

  // Part i covers host[off, off+len); the variable's value is the raw
  // segment for a plain term and the theta image for a theta term.
  bool split(const std::vector<Term>& terms, std::size_t i, std::size_t off, std::size_t remaining,
             std::size_t bound, std::vector<std::span<const Letter>>& value) const {
    if (i == terms.size()) return remaining == 0;
    const std::size_t parts_after = terms.size() - i - 1;
    if (remaining < parts_after + 1) return false;
    const std::size_t max_len = remaining - parts_after;
    for (std::size_t len = 1; len <= max_len; ++len) {
      if (len > bound) break;
      const auto derived = terms[i].theta ? theta_seg(off, len) : sym_.subspan(off, len);
      auto& bound_value = value[terms[i].var];
      if (bound_value.empty()) {
        bound_value = derived;
        if (split(terms, i + 1, off + len, remaining - len, bound, value)) return true;
        bound_value = {};
      } else if (bound_value.size() == len && std::equal(derived.begin(), derived.end(), bound_value.begin())) {
        if (split(terms, i + 1, off + len, remaining - len, bound, value)) return true;
      }
    }
    return false;
  }

  std::span<const Letter> sym_;
  bool anti_;
  std::vector<Letter> mapped_;
};

inline bool oracle_contains(const Word& host, const Pattern& p, const Involution& theta, std::size_t bound) {
  return Oracle(host, theta).contains(p, bound);
}

inline bool oracle_contains_any(const Word& host, const Pattern& p, Mode mode, std::size_t bound) {
  for (const Involution& theta : enumerate_involutions(host.alphabet(), mode))
    if (oracle_contains(host, p, theta, bound)) return true;
  return false;
}

// Every pattern shape with up to max_terms terms: variable sequences are
// restricted growth strings (canonical up to renaming), wraps run over all
// subsets. 2 + 8 + 40 = 50 shapes for max_terms = 3.
inline std::vector<Pattern> all_patterns_up_to(std::size_t max_terms) {
  std::vector<Pattern> out;
  for (std::size_t t = 1; t <= max_terms; ++t) {
    std::vector<std::vector<int>> growth_strings;
    std::vector<int> cur(t, 0);
    const auto rec = [&](auto&& self, std::size_t i, int used) -> void {
      if (i == t) {
        growth_strings.push_back(cur);
        return;
      }
      for (int v = 0; v <= used; ++v) {
        cur[i] = v;
        self(self, i + 1, v == used ? used + 1 : used);
      }
    };
    rec(rec, 0, 0);
    for (const auto& vars : growth_strings) {
      for (std::uint32_t wraps = 0; wraps < (1u << t); ++wraps) {
        std::vector<Term> terms(t);
        int num_vars = 0;
        for (std::size_t i = 0; i < t; ++i) {
          terms[i] = Term{vars[i], ((wraps >> i) & 1) != 0};
          num_vars = std::max(num_vars, vars[i] + 1);
        }
        std::string letters;
        for (int v = 0; v < num_vars; ++v) letters.push_back(static_cast<char>('a' + v));
        out.emplace_back(std::move(terms), std::move(letters));
      }
    }
  }
  return out;
}

}  // namespace pavi::testing
