#ifndef VTWIN_WORDS_HPP
#define VTWIN_WORDS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "vtwin/errors.hpp"

// Alphabets, word containers, parsing/printing and permutation arithmetic.
//
// Word grammar (UTF-8 text, whitespace-separated tokens):
//   token := "s" INT | "r" INT | "a" INT "," INT
// "s3" is the flat generator s_3, "r2" the virtual generator rho_2 and
// "a1,4" the Coxeter generator alpha_{1,4}. Case-sensitive, INT >= 1,
// no signs. The empty word prints as "e" and "e" parses back to it.

namespace vtwin {

enum class LetterKind : std::uint8_t { S, Rho };

struct GeneratorLetter {
  LetterKind kind;
  int index;  // 1 <= index <= n-1

  auto operator<=>(const GeneratorLetter&) const = default;
};

// A word in the generators of VT_n. Letters are stored verbatim; no
// reduction happens at this layer.
struct VWord {
  int n = 2;
  std::vector<GeneratorLetter> letters;

  auto operator<=>(const VWord&) const = default;
};

struct AlphaLetter {
  int i;
  int j;  // i != j, both in 1..n

  auto operator<=>(const AlphaLetter&) const = default;
};

// A word in the Coxeter generators alpha_{i,j} of KT_n.
struct KWord {
  int n = 2;
  std::vector<AlphaLetter> letters;

  auto operator<=>(const KWord&) const = default;
};

// An element of S_n acting on {1..n}, points on the left:
// (p*q)(x) = p(q(x)).
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int n);
  // tau_i = (i, i+1), 1 <= i <= n-1.
  static Permutation transposition(int n, int i);
  // One-based image list: images[k] = p(k+1).
  static Permutation from_images(const std::vector<int>& images);

  int degree() const { return static_cast<int>(img_.size()); }
  // p(point), 1-based.
  int operator()(int point) const { return img_[point - 1] + 1; }

  Permutation compose(const Permutation& q) const;  // this after q
  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

  // "(1,2)(3,4)(5,6)"; the identity prints as "()".
  std::string cycles() const;
  // "[2 1 3]" (images of 1..n).
  std::string images_line() const;
  static Permutation parse_cycles(const std::string& text, int n);

  // Indices t_1..t_k with tau_{t_1} o ... o tau_{t_k} = p, from a fixed
  // bubble-sort pass; deterministic.
  std::vector<int> transposition_word() const;

private:
  std::vector<int> img_;  // 0-based
};

VWord parse_vword(const std::string& text, int n);
KWord parse_kword(const std::string& text, int n);
std::string print_word(const VWord& w);
std::string print_word(const KWord& w);
std::string print_letter(const GeneratorLetter& g);
std::string print_letter(const AlphaLetter& a);

// theta kills s-letters and sends rho_i to tau_i; pi sends both to tau_i.
// Both multiply left-to-right into composition, leftmost letter applied
// last, which is the unique convention consistent with the conjugation
// case table (see alpha_conjugate).
Permutation theta_of_word(const VWord& w);
Permutation pi_of_word(const VWord& w);

// Left S_n-action on the alpha alphabet: p . alpha_{i,j} = alpha_{p(i),p(j)}.
AlphaLetter alpha_conjugate(const Permutation& p, const AlphaLetter& a);

}  // namespace vtwin

#endif
