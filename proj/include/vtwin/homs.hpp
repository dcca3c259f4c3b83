#ifndef VTWIN_HOMS_HPP
#define VTWIN_HOMS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "vtwin/vtn.hpp"
#include "vtwin/words.hpp"

// Homomorphisms among S_n, VT_n and their targets: representation by
// generator images, relation checking, application, the named catalogue
// (pi, theta, lambda, zeta, phi_m, nu and composites), exhaustive
// enumeration into symmetric groups, and conjugacy classification.

namespace vtwin::homs {

enum class GroupFamily { Sym, VTwin };

struct GroupTag {
  GroupFamily family;
  int degree;

  auto operator<=>(const GroupTag&) const = default;
  std::string str() const;
  static GroupTag parse(const std::string& text);  // "S5" or "VT5"
  // Sym: tau_1..tau_{n-1}. VTwin: s_1..s_{n-1} then rho_1..rho_{n-1}.
  int generator_count() const;
};

// Generator-image table. Exactly one of the image vectors is populated,
// matching the target family. Generator order follows GroupTag.
struct GenImageMap {
  GroupTag source;
  GroupTag target;
  std::vector<Permutation> perm_images;
  std::vector<VWord> word_images;

  auto operator<=>(const GenImageMap&) const = default;
};

using TargetValue = std::variant<Permutation, SemidirectElement>;

struct HomCheck {
  bool ok;
  std::string failing_relation;  // empty when ok
};

// True iff every defining relator of the source maps to the identity of
// the target; reports the first failing relation otherwise.
HomCheck is_homomorphism(const GenImageMap& m);

// which: pi | theta | lambda | zeta | phi:<m> | nu | lambda_pi |
// lambda_theta | lambda_nu_pi | lambda_nu_theta. nu requires n = 6. The
// composites read right-to-left: lambda_nu_pi is lambda o nu o pi.
GenImageMap named_hom(const std::string& which, int n);

// Letterwise substitution followed by target normalization. The word is
// over the source generators: a VWord for a VTwin source, a sequence of
// tau indices for a Sym source.
TargetValue apply_hom(const GenImageMap& m, const VWord& w);
TargetValue apply_hom(const GenImageMap& m, const std::vector<int>& tau_word);

GenImageMap compose_homs(const GenImageMap& outer, const GenImageMap& inner);
GenImageMap conjugate_hom(const GenImageMap& m, const TargetValue& x);

bool target_equal(const GroupTag& tag, const TargetValue& a, const TargetValue& b);
std::string target_str(const GroupTag& tag, const TargetValue& v);

// Closed form phi_m(alpha_{i,j}) = alpha_{i,j} (alpha_{j,i} alpha_{i,j})^t
// for odd m = 2t+1 (any sign); rejects even m.
KWord phi_m_on_alpha(int m, const AlphaLetter& a, int n);

bool is_abelian_hom(const GenImageMap& m);

// Whether the induced map on the Z_2 x Z_2 abelianisation of VT_n is onto;
// source and target must both be VTwin.
bool abelianization_surjective(const GenImageMap& m);

struct EnumOptions {
  long long budget = 100'000'000;  // backtracking nodes
  int jobs = 0;                    // OpenMP cap, 0 = library default
};

// Exhaustive backtracking over generator images in {identity} + involutions
// with relation pruning; returns all homomorphisms, canonically sorted.
// Throws budget_error beyond the node budget.
std::vector<GenImageMap> enumerate_homs_sym_to_sym(int n, int m, const EnumOptions& opt = {});
std::vector<GenImageMap> enumerate_homs_vtn_to_sym(int n, int m, const EnumOptions& opt = {});

enum class HomClass {
  Abelian,
  ConjId,      // Sym source only
  ConjPi,
  ConjTheta,
  ConjNu,      // Sym source, n = m = 6
  ConjNuPi,
  ConjNuTheta,
  Other,
};
const char* to_string(HomClass c);

// Conjugacy is decided by exhaustive search over the finite target.
HomClass classify_hom_to_sym(const GenImageMap& m);

// The order-two outer automorphism of S_6 given by triple transpositions.
std::vector<std::pair<std::string, bool>> nu_checks();

std::string serialize_hom(const GenImageMap& m);
GenImageMap parse_hom(const std::string& text);
std::string hom_digest(const GenImageMap& m);  // 16-hex FNV-1a of the serialization

std::vector<Permutation> all_permutations(int m);
std::vector<Permutation> involution_candidates(int m);  // identity included

}  // namespace vtwin::homs

#endif
