#pragma once

#include <vector>

#include "hg/model.h"
#include "hg/word.h"

namespace hg {

// Immersed diagram of curve classes on the standard one-vertex spine.
//
// Each curve follows its cyclic geodesic word along the 2g spine edges. All
// vertex passages happen inside a disk neighborhood of the vertex, as chords
// of its boundary circle: the passage at gap i of a word (between letters
// i-1 and i) enters through the germ of inverse(w[i-1]) and leaves through
// the germ of w[i]. Across each edge the passes run as parallel strands in a
// band, and every crossing of the diagram is a transverse chord crossing in
// the vertex disk, so intersection combinatorics reduce to circle positions.
//
// The transverse order of the strands in a band is combinatorial: normalize
// both strands to traverse the edge in its canonical direction (following a
// reversed pass means reading its curve word backward and inverted), walk the
// two letter rays forward until they first diverge, and rank the diverging
// departures counterclockwise from their shared arrival germ. Distinct
// strands of primitive, pairwise distinct classes always diverge within the
// sum of the period lengths; equal classes in one diagram are therefore
// rejected. Chord ends inherit the band order directly at the germ where the
// canonical letter departs and reversed at the opposite germ (the band
// re-enters the disk boundary with the opposite induced orientation).
//
// The construction always realizes a genuine multicurve representative of
// the classes. Consumers that need minimal position cross-check the crossing
// tallies against the intersection kernel and fail loudly on excess, rather
// than silently working with a non-taut picture.
class ChordModel {
 public:
  // One boundary-circle slot: the arrival or departure end of the vertex
  // chord of `curve` at `gap`.
  struct End {
    int curve = 0;
    int gap = 0;
    bool departure = false;
  };

  // One pass of a curve across a spine edge; `pos` is the letter index, and
  // the letter itself tells the traversal direction.
  struct Pass {
    int curve = 0;
    int pos = 0;
  };

  // A transverse crossing of two vertex chords, reported from the d-chord's
  // viewpoint: sign +1 means the t-chord departs into the counterclockwise
  // arc on the left of the oriented d-chord (arrival end -> departure end),
  // matching the kernel's sign convention with <a1, b1> = +1.
  struct Crossing {
    int curve_d = 0, gap_d = 0;
    int curve_t = 0, gap_t = 0;
    int sign = 0;
  };

  // Curves must be nonempty cyclic geodesics of primitive, pairwise distinct
  // unoriented classes (the band order is undefined otherwise; violations
  // fail as input errors or defects).
  ChordModel(const SplittingModel& m, std::vector<Word> curves);

  const SplittingModel& model() const { return *m_; }
  int curve_count() const { return static_cast<int>(curves_.size()); }
  const Word& curve(int c) const { return curves_[c]; }

  // Boundary circle of the vertex disk: slots in counterclockwise order.
  int slot_count() const { return static_cast<int>(slots_.size()); }
  const End& slot(int pos) const { return slots_[pos]; }
  int departure_slot(int curve, int gap) const;
  int arrival_slot(int curve, int gap) const;

  // Transverse order of the passes across a spine edge, listed from the side
  // that the band order convention fixes once for the whole diagram.
  const std::vector<Pass>& band(int edge) const { return bands_[edge]; }

  // All crossings between chords of curve cd and chords of curve ct
  // (cd != ct), ordered along curve cd: by gap, then by the transverse order
  // of the crossing points along the d-chord from its arrival end.
  std::vector<Crossing> crossings(int cd, int ct) const;

  // Self-crossings of curve c, each unordered chord pair once with the
  // lower-gap chord in the d role, ordered the same way.
  std::vector<Crossing> self_crossings(int c) const;

  // Transverse rank of a crossing along its d-chord (clockwise distance from
  // the d-chord's arrival slot to the t-chord's left-side endpoint); exposed
  // for consumers that interleave crossings of several lists on one chord.
  int along_chord_rank(const Crossing& x) const;

 private:
  bool strand_before(const Pass& s1, const Pass& s2) const;
  bool chords_cross(int c1, int g1, int c2, int g2) const;
  int chord_sign(int cd, int gd, int ct, int gt) const;

  const SplittingModel* m_;
  std::vector<Word> curves_;
  std::vector<std::vector<Pass>> bands_;     // per edge
  std::vector<End> slots_;                   // circle order
  std::vector<std::vector<int>> dep_slot_;   // [curve][gap]
  std::vector<std::vector<int>> arr_slot_;   // [curve][gap]
};

}  // namespace hg
