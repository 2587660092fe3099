#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hg/word.h"

namespace hg {

// Conjugacy machinery for cyclic words.
//
// Minimal-length representatives of a conjugacy class are connected by
// single-band annular rewritings: a chain of relator faces glued along
// length-1 pieces, with every block's relator context forced (pieces have
// length 1, so any block of length >= 2 sits at a unique position of R or
// R^-1). Enumerating single bands with a small length slack and closing under
// them reaches every minimal representative; every move is sound by
// construction, so false positives are impossible.

// All single-band rewritings of the cyclic word w (which need not be
// geodesic). Outputs are cyclically freely reduced and unsorted; the caller
// deduplicates. `single_face_only` restricts to one-face bands (the classic
// half-relator swaps and Dehn reductions).
std::vector<Word> band_move_targets(const SplittingModel& m, const Word& w);

// Same move set for a linear word: rewrites a subword through a band of
// relator faces, preserving the group element exactly.
std::vector<Word> band_move_targets_linear(const SplittingModel& m, const Word& w);

// Canonical geodesic of the group element: the lexicographically least word
// among all geodesics representing w, computed by closing dehn_reduce(w)
// under element-preserving band moves and restarting whenever a half-window
// swap uncovers a shorter spelling. A genuine normal form.
Word canonical_geodesic(const SplittingModel& m, const Word& w);

struct ConjClass {
  Word geodesic;       // one minimal-length cyclic representative
  Word class_key;      // lexmin over all rotations of all minimal words of the
                       // class and of its inverse class; the canonical form
  int min_length = 0;
  int exponent = 1;    // the class is root^exponent with root primitive
  Word root_geodesic;  // minimal cyclic representative of the root class
  Word root_key;       // class key of the root class
};

class ClassCache {
 public:
  explicit ClassCache(const SplittingModel& m) : m_(m) {}

  // Conjugacy-class analysis of a nontrivial word (input error on trivial).
  const ConjClass& analyze(const Word& w);

  // True iff u and v are conjugate or inverse-conjugate (free homotopy of
  // unoriented curves).
  bool same_class(const Word& u, const Word& v);

  const SplittingModel& model() const { return m_; }

 private:
  const ConjClass& analyze_geodesic(const Word& geo);

  const SplittingModel& m_;
  std::unordered_map<std::string, std::shared_ptr<const ConjClass>> memo_;
};

}  // namespace hg
