#pragma once

#include <vector>

#include "kmconv/cartan.hpp"
#include "kmconv/lattice.hpp"
#include "kmconv/numeric.hpp"

namespace kmconv {

// Word in the simple reflections, 1-based letters.  w = [i1, .., il] denotes
// the product w_{i1} * ... * w_{il}; the rightmost letter acts first.
using Word = std::vector<int>;

// A Weyl group element, represented faithfully by its action matrix on
// simple-root coordinates together with one reduced word.  Elements produced
// by the shell enumerator carry the shortlex-minimal reduced word; elements
// built from user input carry the input word.
class WeylElement {
 public:
  static WeylElement identity(CartanMatrix const& cm);

  // Builds the element of a reduced word.  Throws NotReduced otherwise,
  // reporting the longest reduced prefix.
  static WeylElement from_word(CartanMatrix const& cm, Word const& word);

  int rank() const { return static_cast<int>(action_.size()); }
  int length() const { return static_cast<int>(word_.size()); }
  Word const& word() const { return word_; }

  // Action matrix M on simple-root coordinates: M * m(v) = m(w(v)).
  // Column j holds the coordinates of w(alpha_j).
  IntMat const& action() const { return action_; }

  RootVector apply(RootVector const& v) const;
  RatVec apply(RatVec const& root_coords) const;

  // Coordinates of w(alpha_j), i.e. column j of the action matrix.
  RootVector image_of_simple(int j) const;

  // Right descent: true iff w(alpha_j) < 0, equivalently l(w * w_j) < l(w).
  bool is_descent(int j) const;

  // Right multiplication by a generator, extending the stored word.  The
  // caller must know that the extension stays reduced (l goes up); the shell
  // enumerator guarantees this via the descent test.
  WeylElement extend(CartanMatrix const& cm, int j) const;

  // Equality of group elements (action matrices).
  friend bool operator==(WeylElement const& a, WeylElement const& b) {
    return a.action_ == b.action_;
  }

 private:
  WeylElement() = default;

  IntMat action_;
  Word word_;
};

bool is_reduced(CartanMatrix const& cm, Word const& word);

// w * w_j with a freshly computed reduced word (greedy smallest-descent
// reduction), valid whether j extends or shortens w.
WeylElement multiply_generator(CartanMatrix const& cm, WeylElement const& w, int j);

// Inversion set Phi_w = {alpha > 0 : w(alpha) < 0} as an ordered list.  For
// w = w_{i1}..w_{il} the entries are, front to back,
//   alpha_{il},  w_{il} alpha_{i,l-1},  ...,  w_{il} .. w_{i2} alpha_{i1}.
// As a set this is independent of the chosen reduced word, and
// |Phi_w| = l(w).
std::vector<RootVector> phi_w(CartanMatrix const& cm, WeylElement const& w);
std::vector<RootVector> phi_of_word(CartanMatrix const& cm, Word const& word);

WeylElement inverse(CartanMatrix const& cm, WeylElement const& w);

WeightVector act_on_weight(CartanMatrix const& cm, WeylElement const& w,
                           WeightVector const& lambda);
PointH act_on_point(CartanMatrix const& cm, WeylElement const& w, PointH const& x);
RootVector act_on_root(CartanMatrix const& cm, WeylElement const& w,
                       RootVector const& v);

// rho - w(rho) as a root-lattice vector; equals the sum of Phi_{w^{-1}}.
RootVector rho_minus_w_rho(CartanMatrix const& cm, WeylElement const& w);

// Streams the Weyl group shell by shell.  Shell l holds all elements of
// length l, emitted in lexicographic order of their (shortlex-minimal)
// canonical words.  Deduplication is exact, on action matrices.
class ShellEnumerator {
 public:
  explicit ShellEnumerator(CartanMatrix const& cm);

  int length() const { return length_; }
  std::vector<WeylElement> const& shell() const { return shell_; }

  // Moves to the next shell.  Returns false (leaving the enumerator on an
  // empty shell) once the group is exhausted, which happens only for finite
  // types.
  bool advance();

 private:
  CartanMatrix const* cm_;
  int length_ = 0;
  std::vector<WeylElement> shell_;
};

enum class ConeClass { interior, boundary, outside_presumed };

struct TitsReduction {
  PointH dominant;       // representative with all coordinates >= 0
  Word word;             // element u with u(x) = dominant
  ConeClass classification;
};

// Reflects x into the closed dominant chamber, picking the smallest index
// with a negative value at each step.  A dominant representative with a zero
// set spanning a finite-type subdiagram lies in the Tits cone interior (its
// stabilizer is finite); other zero sets put it on the boundary.  If the walk
// exceeds `cap` steps the point is classified outside_presumed: points
// outside the cone never terminate, but non-termination cannot be certified,
// only presumed.
TitsReduction tits_reduce(CartanMatrix const& cm, PointH const& x, long cap = 10000);

}  // namespace kmconv
