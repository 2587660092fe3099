#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hg/classes.h"

namespace hg {

// One transverse crossing in the canonical minimal position of two curve
// classes. Positions are vertex gaps along each class's canonical geodesic:
// gap i sits between letter i-1 and letter i of the cyclic word. Several
// crossings can share a gap; the ordinals resolve them to a strict cyclic
// order along each curve (a permutation of 0..count-1 per curve, or of
// 0..2*count-1 over both ends in self mode). The kernel leaves ordinals
// unset (-1); CurveOps::minimal_position fills them from the chord diagram.
struct Crossing {
  int pos_a = 0;
  int pos_b = 0;
  int sign = 0;  // +1 when the second curve departs into the ccw-left arc of
                 // the first (matching <a1,b1> = +1 on homology)
  int ord_a = -1;
  int ord_b = -1;
};

struct MinimalPosition {
  Word a, b;                        // canonical geodesics the positions refer to
  std::vector<Crossing> crossings;  // sorted by (pos_a, pos_b)
};

// Exact geometric intersection numbers via lift-pair scanning.
//
// Curves are run along their canonical cyclic geodesics, whose bi-infinite
// powers are geodesic lines in the Cayley graph of the surface group. For a
// pair of lifts through the base vertex, every shared vertex sits at equal
// parameter distance on both lines, so all shared vertices are found by four
// diagonal scans that maintain the Dehn-reduced difference word D. Between
// two shared vertices |D| never exceeds 4g (the connecting diagram is a
// ladder of relator faces), so a branch is finished once |D| passes that; we
// stop at 16g+8 for margin. A lift pair contributes one crossing exactly when
// the base vertex is its earliest shared vertex along the first line and the
// ends of the two lines are linked at infinity.
class IntersectionKernel {
 public:
  explicit IntersectionKernel(ClassCache& classes) : classes_(classes) {}

  // i(u, v) of the unoriented curve classes; i(c, c) = 2 si(c).
  long geometric_intersection(const Word& u, const Word& v);

  // Minimal self-intersection number of the class of u.
  long self_intersection(const Word& u);

  bool is_simple(const Word& u) { return self_intersection(u) == 0; }

  // Crossing list for two distinct primitive classes in minimal position.
  MinimalPosition minimal_position(const Word& u, const Word& v);

  ClassCache& classes() { return classes_; }
  const SplittingModel& model() const { return classes_.model(); }

 private:
  long primitive_pair_count(const Word& a, const Word& b);
  long primitive_self_count(const Word& a);

  ClassCache& classes_;
  std::unordered_map<std::string, long> pair_memo_;
  std::unordered_map<std::string, long> self_memo_;
};

}  // namespace hg
