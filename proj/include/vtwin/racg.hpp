#ifndef VTWIN_RACG_HPP
#define VTWIN_RACG_HPP

#include <string>
#include <utility>
#include <vector>

#include "vtwin/errors.hpp"

// Generic right-angled Coxeter group engine: every generator is an
// involution and the only other relations are commutations of some
// generator pairs. Words are sequences of letter ids into a
// RacgPresentation; the canonical form of an element is the left-greedy
// lexicographic minimum of the commutation class of any reduced word for
// it, so two words are equal in the group iff their canonical forms are
// identical sequences.

namespace vtwin::racg {

using Word = std::vector<int>;
using LetterSet = std::vector<int>;  // sorted, unique letter ids

struct RacgPresentation {
  std::vector<std::string> names;
  std::vector<std::uint8_t> comm;  // size() x size() commutation matrix

  int size() const { return static_cast<int>(names.size()); }
  bool commutes(int a, int b) const { return comm[static_cast<std::size_t>(a) * size() + b] != 0; }

  // KT_n: letters alpha_{i,j}, 1 <= i != j <= n, ordered lexicographically
  // by (i,j); alpha_{i,j} and alpha_{k,l} commute iff {i,j} and {k,l} are
  // disjoint.
  static RacgPresentation kt(int n);
  // T_n: letters s_1..s_{n-1}; s_i and s_j commute iff |i-j| >= 2.
  static RacgPresentation twin(int n);
};

// Letter ids for the kt(n) presentation.
int kt_letter_id(int n, int i, int j);
std::pair<int, int> kt_letter_pair(int n, int id);

LetterSet full_letter_set(const RacgPresentation& p);

Word normalize(const RacgPresentation& p, const Word& w);
bool is_canonical(const RacgPresentation& p, const Word& w);
bool equal(const RacgPresentation& p, const Word& u, const Word& v);

// w = conjugator . core . conjugator^{-1} with core cyclically reduced.
struct CyclicReduction {
  Word conjugator;
  Word core;
};
CyclicReduction cyclically_reduce(const RacgPresentation& p, const Word& w);

// True iff w has order exactly two: the cyclically reduced core is
// nonempty and its letters pairwise commute. The identity is excluded.
bool is_involution(const RacgPresentation& p, const Word& w);

LetterSet support(const RacgPresentation& p, const Word& w);
bool parabolic_member(const RacgPresentation& p, const Word& w, const LetterSet& X);
LetterSet parabolic_intersect(const LetterSet& X, const LetterSet& Y);

// g = rep . h with h in W[H] and rep the minimal-length element of the
// coset g W[H]; rep is empty iff g lies in W[H].
struct CosetDecomposition {
  Word rep;
  Word h;
};
CosetDecomposition coset_decompose(const RacgPresentation& p, const Word& g, const LetterSet& H);

// Serre normal form over the amalgam of the standard parabolics W[F_j]
// along W[H]: g = t_1 t_2 ... t_l h with each syllable a nonidentity
// minimal coset representative in its factor, consecutive syllables from
// different factors, and h in W[H]. Factor indices are 1-based positions
// into `factors`. Preconditions: H is contained in every factor, factors
// pairwise intersect exactly in H, letters outside H from different
// factors never commute, and support(g) lies in the union.
struct AmalgamFactorization {
  std::vector<std::pair<int, Word>> syllables;
  Word tail;
};
AmalgamFactorization amalgam_factorize(const RacgPresentation& p, const Word& g,
                                       const std::vector<LetterSet>& factors, const LetterSet& H);

// Connectivity of the non-commutation graph, the standard criterion for
// irreducibility of the Coxeter diagram.
bool is_irreducible(const RacgPresentation& p);

// Exactly the elements of W[X] with canonical length <= radius, each once,
// sorted by (length, lexicographic). `jobs` > 0 caps the OpenMP team; the
// result never depends on it. ball_serial is the plain reference kept for
// testing and benchmarking.
std::vector<Word> ball(const RacgPresentation& p, const LetterSet& X, int radius, int jobs = 0);
std::vector<Word> ball_serial(const RacgPresentation& p, const LetterSet& X, int radius);

std::string print_word(const RacgPresentation& p, const Word& w);
Word parse_word(const RacgPresentation& p, const std::string& text);

bool word_lex_less(const Word& a, const Word& b);  // by (length, letters)

}  // namespace vtwin::racg

#endif
