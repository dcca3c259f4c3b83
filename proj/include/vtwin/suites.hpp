#ifndef VTWIN_SUITES_HPP
#define VTWIN_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "vtwin/racg.hpp"
#include "vtwin/vtn.hpp"

// Theorem-checking harness. Each suite runs a battery of exact checks at
// desk scale and emits a machine-readable report; a fail verdict always
// carries a reproducible counterexample in the word grammar. Reports are
// byte-identical across runs on the same inputs except for duration_ms.

namespace vtwin::suites {

struct CheckResult {
  std::string name;
  bool pass;
  std::string counterexample;  // empty on pass
};

struct SuiteReport {
  std::string suite;
  nlohmann::json params;
  std::vector<CheckResult> checks;
  double duration_ms = 0.0;

  bool passed() const;
  nlohmann::json to_json() const;
  // "<suite>-<n>-<radius>.json"
  std::string default_filename() const;
};

// The six-factor product of condition (C), evaluated inside KT_n through
// the index-relabeling action.
bool check_condition_C(const VtnContext& ctx, const racg::Word& alpha);

// The equivalent braid-shaped identity (alpha rho_2 alpha^{-1} rho_1)^3 = 1,
// evaluated in VT_n through decompose. Must agree with check_condition_C
// on every input.
bool condition_C_equiv(const VtnContext& ctx, const racg::Word& alpha);

// Witness for alpha = alpha' beta rho_k alpha'^{-1} rho_k with beta an
// involution (or trivial) in K_n[X intersect X_k]. Preconditions: X is
// invariant under the tau_k index action, alpha lies in K_n[X] and
// rho_k-conjugation inverts alpha. Shortest witness via breadth-first
// search over conjugating prefixes; throws budget_error when the state
// budget runs out.
struct TwistedSolution {
  racg::Word alpha_prime;
  racg::Word beta;
};
TwistedSolution solve_twisted_conjugacy(const VtnContext& ctx, const racg::Word& alpha, int k,
                                        const racg::LetterSet& X, long long budget = 2'000'000);

SuiteReport suite_presentation(int n, int radius, int jobs = 0);
SuiteReport suite_fixed_points(int n, int radius, int jobs = 0);
SuiteReport suite_centralizer(int n, int radius, int jobs = 0);
SuiteReport suite_kt6_H(int radius, int jobs = 0);
// The nu battery. One check stays red by design: the shipped generator
// images square to an inner automorphism, not to the identity map.
SuiteReport suite_nu();
SuiteReport suite_phi_m(int n, const std::vector<int>& ms, int radius, int jobs = 0);
SuiteReport suite_hom_classification(int n, int m, long long budget = 100'000'000, int jobs = 0);
SuiteReport suite_serre(int n, int radius, int jobs = 0);
SuiteReport suite_condition_c(int n, int radius, int samples, std::uint64_t seed, int jobs = 0);
SuiteReport suite_twisted(int n, int radius, int samples, std::uint64_t seed,
                          long long budget = 2'000'000, int jobs = 0);

// Named letter families traversed by the fixed-point proofs, all relative
// to the ambient full letter set of KT_n.
racg::LetterSet set_Uk(const VtnContext& ctx, int k);   // 3 <= k <= n
racg::LetterSet set_Vk(const VtnContext& ctx, int k);   // 3 <= k <= n
racg::LetterSet set_W11(const VtnContext& ctx);
racg::LetterSet set_W12(const VtnContext& ctx);

}  // namespace vtwin::suites

#endif
