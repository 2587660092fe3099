#pragma once

#include <utility>
#include <vector>

#include "hg/kernel.h"

namespace hg {

// One complementary piece of the surface cut along a disjoint simple system.
struct CutPiece {
  int genus = 0;
  int boundary_count = 0;
  // Boundary scars: (index into the cut list, side of the cut curve's
  // oriented root representative: 0 = left, 1 = right). Every cut curve
  // leaves exactly one scar of each side across the whole report.
  std::vector<std::pair<int, int>> scars;
};

struct CutReport {
  std::vector<CutPiece> pieces;     // ordered by first appearance in the
                                    // vertex diagram (deterministic)
  std::vector<int> placements;      // piece index holding each marked curve
};

// Facade over the exact curve machinery. Intersection data comes from two
// independent computations that must agree (the lift-scanning kernel and the
// chord diagram of the vertex disk); the operations built on top — Dehn
// twists, regular-neighborhood boundaries, crossing surgery, cutting — audit
// their own output with homology and disjointness checks and fail loudly
// rather than return an unverified class.
class CurveOps {
 public:
  explicit CurveOps(const SplittingModel& m) : cache_(m), kernel_(cache_) {}
  CurveOps(const CurveOps&) = delete;
  CurveOps& operator=(const CurveOps&) = delete;

  const SplittingModel& model() const { return cache_.model(); }
  ClassCache& classes() { return cache_; }
  IntersectionKernel& kernel() { return kernel_; }

  // Geometric intersection number of the unoriented classes (i(c,c) = 2 si).
  long intersection(const Word& u, const Word& v);
  long self_intersection(const Word& u);
  bool is_simple(const Word& u);

  // Minimal position of two primitive classes, with crossing ordinals filled
  // along both curves; coinciding classes fall back to the self-crossing
  // record, where each crossing appears once with both of its ordinals on the
  // one curve.
  MinimalPosition minimal_position(const Word& u, const Word& v);

  // Minimal position of a primitive class with itself: each crossing once,
  // pos_a/pos_b are its two gaps on the one curve, and the ordinals of all
  // ends form a permutation of 0..2*count-1 along the curve.
  MinimalPosition self_minimal_position(const Word& u);

  // Image of d under the power-th right-handed Dehn twist along the simple
  // essential curve t; returns the canonical class representative. Homology
  // action: [result] = [d] + power * <t, d> * [t].
  Word dehn_twist(const Word& t, const Word& d, int power);

  // Boundary of a regular neighborhood of c union d when i(c, d) = 1: the
  // class of the commutator of the two loops based at their crossing.
  // Verified simple, disjoint from both inputs, and null-homologous.
  Word neighborhood_boundary(const Word& c, const Word& d);

  // Classes of arc joins at crossing pairs of two simple curves in minimal
  // position: for every pair of crossings (possibly equal) and every choice
  // of connecting subarc on each curve, the loop "arc of c, then arc of c'",
  // freely reduced, filtered to essential classes distinct from both inputs.
  // Sorted and deduplicated; symmetric in the inputs.
  std::vector<Word> surgery_candidates(const Word& c, const Word& d);

  // Components of the surface cut along the disjoint simple cut system, with
  // genus, boundary counts, scars, and the piece holding each marked curve.
  // All curves (cuts and marked alike) must be simple, pairwise disjoint and
  // pairwise non-parallel; violations name the offending pair.
  CutReport cut_along(const std::vector<Word>& cuts,
                      const std::vector<Word>& marked);

 private:
  ClassCache cache_;
  IntersectionKernel kernel_;
};

}  // namespace hg
