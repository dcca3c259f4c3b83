#ifndef VTWIN_VTN_HPP
#define VTWIN_VTN_HPP

#include <string>
#include <vector>

#include "vtwin/racg.hpp"
#include "vtwin/words.hpp"

// VT_n-specific layer: the unique semidirect coordinates of a word, group
// arithmetic on those coordinates, the twin-group embedding and the
// index-relabeling action of S_n on KT_n.

namespace vtwin {

struct VtnContext {
  int n;
  racg::RacgPresentation kt;
  racg::RacgPresentation twin;

  explicit VtnContext(int strands);

  int alpha_id(int i, int j) const { return racg::kt_letter_id(n, i, j); }
  AlphaLetter alpha_of(int id) const {
    auto [i, j] = racg::kt_letter_pair(n, id);
    return {i, j};
  }
};

// Canonical coordinates of a VT_n element: the group element is
// k . lambda(sigma) with k canonical over the KT_n letters.
struct SemidirectElement {
  racg::Word k;
  Permutation sigma;

  bool operator==(const SemidirectElement&) const = default;
  auto operator<=>(const SemidirectElement&) const = default;
  bool is_identity() const { return k.empty() && sigma.is_identity(); }
};

// Left-to-right scan: a rho-letter folds into the running permutation, an
// s-letter lands in KT_n relabeled through the prefix permutation.
SemidirectElement decompose(const VtnContext& ctx, const VWord& w);

// Any preimage word: each KT_n letter expands to its defining s/rho word,
// then sigma is emitted as a fixed transposition word.
VWord recompose(const VtnContext& ctx, const SemidirectElement& e);

SemidirectElement multiply(const VtnContext& ctx, const SemidirectElement& a, const SemidirectElement& b);
SemidirectElement inverse(const VtnContext& ctx, const SemidirectElement& a);
SemidirectElement identity_element(const VtnContext& ctx);

bool equal_vtn(const VtnContext& ctx, const VWord& u, const VWord& v);

// Letterwise relabeling g |-> alpha_{p(i),p(j)}, renormalized; this is the
// conjugation action of lambda(p) on KT_n.
racg::Word relabel(const VtnContext& ctx, const racg::Word& g, const Permutation& p);

// s_i |-> alpha_{i,i+1}; injective on normal forms.
racg::Word embed_twin(const VtnContext& ctx, const racg::Word& twin_word);

// True iff conjugation by rho_k fixes g as a group element.
bool fixed_by_rho(const VtnContext& ctx, const racg::Word& g, int k);

// X_k = { alpha_{i,j} : i, j not in {k, k+1} }, the fixed letters of the
// rho_k action.
racg::LetterSet set_Xk(const VtnContext& ctx, int k);

// All elements representable by an s/rho word of length <= radius.
std::vector<SemidirectElement> ball_vtn(const VtnContext& ctx, int radius, int jobs = 0);
std::vector<SemidirectElement> ball_vtn_serial(const VtnContext& ctx, int radius);

// Defining word of alpha_{i,j}: (rho_{j-1} ... rho_{i+1}) s_i (rho_{i+1}
// ... rho_{j-1}) when i < j, and the rho_i s_i rho_i variant conjugated the
// same way when i > j.
VWord alpha_word(int n, const AlphaLetter& a);
VWord kword_to_vword(const VtnContext& ctx, const racg::Word& k);
VWord lambda_word(const VtnContext& ctx, const Permutation& p);

// "k = a1,3 ; sigma = [1 2 3]"
std::string print_semidirect(const VtnContext& ctx, const SemidirectElement& e);
SemidirectElement parse_semidirect(const VtnContext& ctx, const std::string& text);

// Word grammar extended with a-tokens, each expanded to its defining word.
VWord parse_mixed_word(const VtnContext& ctx, const std::string& text);

}  // namespace vtwin

#endif
