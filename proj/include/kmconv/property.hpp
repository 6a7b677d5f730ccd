#pragma once

#include <optional>
#include <vector>

#include "kmconv/cartan.hpp"
#include "kmconv/lattice.hpp"
#include "kmconv/weyl.hpp"

namespace kmconv {

// One way of peeling a generator off the right of w: w = v * w_beta with
// l(v) = l(w) - 1.  `v` carries a deterministic reduced word (greedy
// smallest-descent reduction).
struct Decomposition {
  WeylElement v;
  int beta;
};

// All right descents of w, in ascending order of beta.
std::vector<Decomposition> decompositions(CartanMatrix const& cm,
                                          WeylElement const& w);

// A witness that a decomposition w = v * w_beta fails the admissibility
// condition: alpha lies in Phi_v and alpha - beta is a root.
struct Violation {
  Word v_word;
  int beta;
  RootVector alpha;
  RootVector alpha_minus_beta;
};

struct ElementCheck {
  bool admissible = false;
  // Set when admissible: the first decomposition (ascending beta) with no
  // violation.
  std::optional<Decomposition> via;
  // Set when not admissible: every violating (decomposition, alpha) pair,
  // covering every legal decomposition.
  std::vector<Violation> violations;
};

// Tests the one-step admissibility condition at w: some decomposition
// w = v * w_beta must satisfy "alpha - beta is not a root for any alpha in
// Phi_v".  Subtraction is tested against the full root system, real and
// imaginary.  The identity and the simple reflections hold vacuously.
ElementCheck check_element(CartanMatrix const& cm, WeylElement const& w);

enum class PropertyStatus { holds_up_to, fails_at };

struct PropertyReport {
  PropertyStatus status = PropertyStatus::holds_up_to;
  int length = 0;                  // max length checked, or the failing length
  long elements_checked = 0;
  std::optional<WeylElement> failing;  // shortlex-least failing element
  std::vector<Violation> violations;   // all violations of that element
};

// Checks every element of length <= max_length shell by shell, stopping at
// the first shell containing a failure.  Deterministic: elements are visited
// in shortlex order, so the reported element is the shortlex-least failure.
PropertyReport check_property(CartanMatrix const& cm, int max_length);

// Builds an admissible word for w: a reduced word beta_1 .. beta_l such that
// every prefix v_i = w_{beta_1}..w_{beta_i} satisfies "alpha - beta_{i+1} is
// not a root for any alpha in Phi_{v_i}".  Searches decompositions depth
// first with beta ascending and re-verifies the found chain.  Throws
// NoAdmissibleWord when the search exhausts.
Word admissible_word(CartanMatrix const& cm, WeylElement const& w);

// Re-checks that `word` is reduced and that every prefix satisfies the
// admissibility condition.
bool is_admissible_word(CartanMatrix const& cm, Word const& word);

struct WordClaimFailure {
  Word word;
  int claim;           // 1 or 2
  RootVector witness;  // offending root
};

struct ClaimsReport {
  long words_checked = 0;
  std::vector<WordClaimFailure> failures;
};

// Exhaustively verifies, over every reduced word w_{i1}..w_{ik} of length
// k <= max_length, the two structural claims available for symmetric
// matrices with every off-diagonal entry <= -2:
//
//   claim 1: the root w_{ik} w_{ik-1} .. w_{i2} alpha_{i1} has its i_k-th
//            coordinate strictly largest;
//   claim 2: for k >= 2 every alpha in Phi of the length-(k-1) prefix has
//            <alpha, alpha_{ik}^v> < 0.
//
// Throws HypothesisViolated if the matrix is not symmetric with off-diagonal
// entries <= -2.
ClaimsReport verify_prop42_claims(CartanMatrix const& cm, int max_length);

// For an admissible word beta_1 .. beta_l, the roots
// nu_i = w_{beta_l} .. w_{beta_{i+1}} beta_i satisfy "nu_i + nu_j is not a
// root" for all i < j.  Returns true when that holds; `failure` (if given)
// receives the first offending pair.
bool verify_commutation_condition(CartanMatrix const& cm, Word const& word,
                                  std::pair<int, int>* failure = nullptr);

}  // namespace kmconv
