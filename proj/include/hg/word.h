#pragma once

#include <optional>
#include <vector>

#include "hg/model.h"

namespace hg {

using Word = std::vector<Letter>;

// --- free-group level -------------------------------------------------------

Word free_reduce(Word w);
Word cyclic_free_reduce(Word w);
Word inverse_word(const Word& w);
Word rotated(const Word& w, int k);  // w[k..] + w[..k], k taken mod |w|
Word concat(const Word& u, const Word& v);
Word power(const Word& w, int k);  // k may be negative

// Lexicographically least rotation of a cyclic word (raw letter order, which
// equals the canonical symbol order a1 < A1 < b1 < B1 < a2 < ...).
Word min_rotation(const Word& w);
// Least over all rotations of w and of w^-1; the canonical form of an
// unoriented cyclic word.
Word min_rotation_unoriented(const Word& w);

// --- surface-group level (Dehn's algorithm) ---------------------------------

// Maximal relator runs of a word. run_at(i) = length of the longest subword
// of a rotation of R or R^-1 ending at position i. Pieces have length 1, so
// every length-2 window determines its relator context uniquely.

// Linear Dehn reduction: repeatedly freely reduce and replace any relator
// subword of length >= 2g+1 by the inverse complement. The result represents
// the same group element, is freely reduced, and contains no relator subword
// longer than 2g. It is empty exactly when w is trivial, but it need not be
// geodesic: swapping a half-relator window can expose a further reduction
// (canonical_geodesic closes that gap).
Word dehn_reduce(const SplittingModel& m, Word w);

// Cyclic variant: same moves applied to the cyclic word (windows may wrap).
// All cyclic windows of length 2g+1 of the result avoid the relator, and it
// is empty exactly when w is conjugate to the identity; class-minimal length
// is certified separately by the closure in ClassCache.
Word cyclic_dehn_reduce(const SplittingModel& m, Word w);

// True iff w = 1 in the surface group.
bool is_trivial_in_surface_group(const SplittingModel& m, const Word& w);

// Checks the cyclic-geodesic property without reducing (used in asserts).
bool is_cyclic_geodesic(const SplittingModel& m, const Word& w);

// Exponent-sum vector in the ordered basis (a_1..a_g, b_1..b_g).
std::vector<int> homology_vector(const SplittingModel& m, const Word& w);

// Algebraic (homological) intersection pairing <x,y> with <a_i,b_i> = +1.
long homology_pairing(const SplittingModel& m, const std::vector<int>& x,
                      const std::vector<int>& y);

// Image of a curve word in the fundamental group of a handlebody side.
// pi_1(V) is free on the a_i (the b_i are V's meridians and die there);
// pi_1(W) is free on the b_i. The result is freely reduced; cyclically
// reduced when `cyclic` is set.
enum class Side { V, W };
inline Side opposite(Side s) { return s == Side::V ? Side::W : Side::V; }
inline const char* side_name(Side s) { return s == Side::V ? "V" : "W"; }
Word image_in_handlebody(const SplittingModel& m, const Word& w, Side side,
                         bool cyclic = false);

}  // namespace hg
