#ifndef VTWIN_TESTS_ORACLE_HPP
#define VTWIN_TESTS_ORACLE_HPP

#include <set>
#include <vector>

#include "vtwin/racg.hpp"
#include "vtwin/words.hpp"

// Test-only oracles, independent of the engine's normalization path.

namespace vtwin::oracle {

// All words reachable from w by adjacent commuting swaps and adjacent
// equal-pair deletions. Finite: swaps preserve length, deletions shrink.
std::set<racg::Word> rewriting_closure(const racg::RacgPresentation& p, const racg::Word& w);

// The (length, lex)-least word of the closure; the canonical form an
// engine must agree with.
racg::Word closure_normal_form(const racg::RacgPresentation& p, const racg::Word& w);

bool closure_equal(const racg::RacgPresentation& p, const racg::Word& u, const racg::Word& v);

// Congruence classes of ALL words over a fixed letter subset up to a fixed
// length, built by union-find over single rewriting moves. Any two words of
// bounded length that are equal in the group are connected inside the
// universe, because both reduce monotonically to commutation-equivalent
// reduced words.
class WordUniverse {
public:
  // letters must be sorted ascending so digit order matches letter order
  WordUniverse(const racg::RacgPresentation& p, std::vector<int> letters, int maxlen);

  long long size() const { return total_; }
  racg::Word word_at(long long rank) const;        // presentation letter ids
  long long rank_of(const std::vector<int>& digits) const;

  // canonical (length, lex)-least member of the class of the word at rank
  racg::Word canonical_of(long long rank) const;

private:
  const racg::RacgPresentation& p_;
  std::vector<int> letters_;
  int k_;
  int maxlen_;
  long long total_;
  std::vector<long long> offset_;
  mutable std::vector<int> parent_;
  std::vector<long long> canonical_;  // root rank -> canonical rank

  std::vector<int> digits_at(long long rank) const;
  int find(int x) const;
};

// The conjugation case table from the generator theorem's proof, written
// out case by case; the independent cross-check for alpha_conjugate.
AlphaLetter expected_rho_conjugate(int k, const AlphaLetter& a);

}  // namespace vtwin::oracle

#endif
