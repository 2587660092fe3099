#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hg/diag.h"

namespace hg {

// A letter is a signed generator of the genus-g surface group
//   pi_1(Sigma_g) = < a_1, b_1, ..., a_g, b_g | prod_i [a_i, b_i] >,
// encoded as an integer in [0, 4g):
//   value = 2 * generator_index + (1 if inverted)
// with generator order a_1, b_1, a_2, b_2, ... This raw order coincides with
// the canonical symbol order a1 < A1 < b1 < B1 < a2 < ... used everywhere for
// lexicographic minima.
using Letter = std::uint8_t;

constexpr Letter kMaxLetters = 64;  // supports genus up to 16

inline Letter inverse(Letter x) { return static_cast<Letter>(x ^ 1u); }
inline bool is_inverse_letter(Letter x) { return (x & 1u) != 0; }
inline int generator_index(Letter x) { return x >> 1; }  // 0=a1, 1=b1, 2=a2, ...

// Fixed data of the standard genus-g splitting of the 3-sphere:
//  - the surface relator R = prod_i [a_i, b_i];
//  - the side map (the b_i bound disks in V, the a_i bound disks in W);
//  - the rotation system of the one-vertex CW structure, i.e. the
//    counterclockwise cyclic order of the 4g edge germs at the vertex of the
//    {4g,4g}-tessellated universal cover.
//
// Construction machine-checks the small-cancellation property that every
// later algorithm leans on: all 8g cyclic two-letter subwords of R and R^-1
// are pairwise distinct (equivalently, all pieces have length exactly 1).
class SplittingModel {
 public:
  explicit SplittingModel(int genus);

  int genus() const { return genus_; }
  int alphabet_size() const { return 4 * genus_; }

  Letter a(int i) const;  // 1-based handle index
  Letter b(int i) const;

  const std::vector<Letter>& relator() const { return relator_; }

  // Letter following x in the cyclic word R, resp. in R^-1. Each signed
  // letter occurs exactly once in each, so these are permutations.
  Letter relator_succ(Letter x) const { return relator_succ_[x]; }
  Letter relator_inv_succ(Letter x) const { return relator_inv_succ_[x]; }
  // Position of x in R (0-based); in R^-1 it sits at 4g-1-pos_in_R(inverse(x)).
  int relator_pos(Letter x) const { return relator_pos_[x]; }

  // True iff the two-letter word xy appears in a rotation of R (family +1)
  // or of R^-1 (family -1); 0 if in neither. Never both.
  int pair_family(Letter x, Letter y) const { return pair_family_[x][y]; }

  // Rotation system: counterclockwise successor of an outgoing germ at the
  // vertex. Derived from the face structure: succ(R_i) = R_{i-1}^-1. A single
  // 4g-cycle (checked), so the complex is the one-vertex 4g-gon.
  Letter ccw_next(Letter x) const { return ccw_next_[x]; }
  // Steps from x to y walking counterclockwise; in [0, 4g), 0 iff x == y.
  int ccw_distance(Letter x, Letter y) const { return ccw_rank_[x][y]; }

  // Word syntax: whitespace-separated tokens, lowercase = generator,
  // uppercase = inverse ("a1 b1 A1 B1"). parse rejects unknown symbols and
  // indices outside [1, genus].
  std::vector<Letter> parse(const std::string& text) const;
  std::string print(const std::vector<Letter>& word) const;  // "" for empty
  std::string letter_name(Letter x) const;

  // Genus inferred from the largest index mentioned in the text (minimum 2);
  // used by the CLI when no genus is given explicitly.
  static int infer_genus(const std::string& text);

 private:
  int genus_;
  std::vector<Letter> relator_;
  std::array<Letter, kMaxLetters> relator_succ_{};
  std::array<Letter, kMaxLetters> relator_inv_succ_{};
  std::array<int, kMaxLetters> relator_pos_{};
  std::array<std::array<signed char, kMaxLetters>, kMaxLetters> pair_family_{};
  std::array<Letter, kMaxLetters> ccw_next_{};
  std::array<std::array<std::uint8_t, kMaxLetters>, kMaxLetters> ccw_rank_{};
};

}  // namespace hg
