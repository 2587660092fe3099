#include "hg/strands.h"

#include <algorithm>
#include <utility>

#include "hg/diag.h"

namespace hg {

namespace {

int mod(int a, int b) { return ((a % b) + b) % b; }

// Counterclockwise steps from slot a to slot x on a circle of n slots.
int ccw_offset(int a, int x, int n) { return mod(x - a, n); }

}  // namespace

ChordModel::ChordModel(const SplittingModel& m, std::vector<Word> curves)
    : m_(&m), curves_(std::move(curves)) {
  if (curves_.empty()) fail_input("chord model needs at least one curve");
  for (const Word& w : curves_) {
    if (w.empty()) fail_input("chord model curve must be essential");
    check_defect(is_cyclic_geodesic(m, w),
                 "chord model curve must be a cyclic geodesic");
  }

  const int edges = 2 * m.genus();
  bands_.assign(edges, {});
  for (int c = 0; c < curve_count(); ++c)
    for (int i = 0; i < static_cast<int>(curves_[c].size()); ++i)
      bands_[generator_index(curves_[c][i])].push_back(Pass{c, i});
  for (auto& band : bands_)
    std::sort(band.begin(), band.end(), [this](const Pass& x, const Pass& y) {
      return strand_before(x, y);
    });

  // Assemble the circle: germs counterclockwise starting from a1; within a
  // germ, band order direct where the canonical letter departs and reversed
  // at the opposite end (the band meets the disk boundary twice with opposite
  // induced orientations).
  dep_slot_.resize(curve_count());
  arr_slot_.resize(curve_count());
  for (int c = 0; c < curve_count(); ++c) {
    dep_slot_[c].assign(curves_[c].size(), -1);
    arr_slot_[c].assign(curves_[c].size(), -1);
  }
  Letter x = m.a(1);
  for (int r = 0; r < m.alphabet_size(); ++r, x = m.ccw_next(x)) {
    const int e = generator_index(x);
    const bool head = !is_inverse_letter(x);
    const auto& band = bands_[e];
    const int k_count = static_cast<int>(band.size());
    for (int step = 0; step < k_count; ++step) {
      const Pass& s = band[head ? step : k_count - 1 - step];
      const Word& w = curves_[s.curve];
      const int pos = static_cast<int>(slots_.size());
      if (w[s.pos] == x) {
        dep_slot_[s.curve][s.pos] = pos;
        slots_.push_back(End{s.curve, s.pos, true});
      } else {
        const int gap = mod(s.pos + 1, static_cast<int>(w.size()));
        arr_slot_[s.curve][gap] = pos;
        slots_.push_back(End{s.curve, gap, false});
      }
    }
  }
  for (int c = 0; c < curve_count(); ++c)
    for (std::size_t i = 0; i < curves_[c].size(); ++i)
      check_defect(dep_slot_[c][i] >= 0 && arr_slot_[c][i] >= 0,
                   "chord end missing from the circle assembly");
}

int ChordModel::departure_slot(int curve, int gap) const {
  return dep_slot_[curve][gap];
}

int ChordModel::arrival_slot(int curve, int gap) const {
  return arr_slot_[curve][gap];
}

// Strict transverse order of two distinct passes across one edge. Each pass
// extends to a bi-infinite line; the comparator follows it both ways, the
// tail ray in the edge's canonical direction and the head ray against it.
// Germs swept counterclockwise from the germ of entry order a pencil of rays
// diverging at a common vertex; the head side is read reversed because two
// disjoint lines through one band have nested ends. When the two readings
// disagree the lines cross inside the shared corridor, and the end with the
// nearer divergence decides the order at this band, which lets the pair swap
// exactly once along the corridor.
bool ChordModel::strand_before(const Pass& s1, const Pass& s2) const {
  if (s1.curve == s2.curve && s1.pos == s2.pos) return false;
  const Word& w1 = curves_[s1.curve];
  const Word& w2 = curves_[s2.curve];
  // Distinct periodic rays diverge within the sum of the periods.
  const int cap = static_cast<int>(w1.size() + w2.size()) + 2;
  auto tail_ray = [this](const Pass& s, int k) -> Letter {
    const Word& w = curves_[s.curve];
    const int p = static_cast<int>(w.size());
    if (!is_inverse_letter(w[s.pos])) return w[mod(s.pos + k, p)];
    return inverse(w[mod(s.pos - k, p)]);
  };
  auto head_ray = [this](const Pass& s, int k) -> Letter {
    const Word& w = curves_[s.curve];
    const int p = static_cast<int>(w.size());
    if (!is_inverse_letter(w[s.pos])) return inverse(w[mod(s.pos - k, p)]);
    return w[mod(s.pos + k, p)];
  };
  // Walks one side to the first split and reports the depth and whether the
  // first strand's ray exits fewer ccw steps from the germ of entry.
  auto diverge = [&](auto&& ray, Letter base, int& depth) -> bool {
    for (int k = 1; k <= cap; ++k) {
      const Letter r1 = ray(s1, k);
      const Letter r2 = ray(s2, k);
      if (r1 != r2) {
        depth = k;
        const Letter from = inverse(base);
        return m_->ccw_distance(from, r1) < m_->ccw_distance(from, r2);
      }
      base = r1;
    }
    fail_defect("band strands do not diverge: equal or non-primitive classes");
  };
  const Letter canon = static_cast<Letter>(generator_index(w1[s1.pos]) << 1);
  int kt = 0;
  int kh = 0;
  const bool tail_first = diverge(tail_ray, canon, kt);
  const bool head_first = !diverge(head_ray, inverse(canon), kh);
  if (tail_first == head_first) return tail_first;
  return kt <= kh ? tail_first : head_first;
}

bool ChordModel::chords_cross(int c1, int g1, int c2, int g2) const {
  const int n = slot_count();
  const int f1 = arr_slot_[c1][g1], t1 = dep_slot_[c1][g1];
  const int f2 = arr_slot_[c2][g2], t2 = dep_slot_[c2][g2];
  const int span = ccw_offset(f1, t1, n);
  const bool in1 = ccw_offset(f1, f2, n) < span;
  const bool in2 = ccw_offset(f1, t2, n) < span;
  return in1 != in2;
}

int ChordModel::chord_sign(int cd, int gd, int ct, int gt) const {
  const int n = slot_count();
  const int fd = arr_slot_[cd][gd], td = dep_slot_[cd][gd];
  const int tt = dep_slot_[ct][gt];
  // Left of the oriented d-chord = the counterclockwise open arc from its
  // departure end back to its arrival end.
  const int span = ccw_offset(td, fd, n);
  return ccw_offset(td, tt, n) < span ? +1 : -1;
}

int ChordModel::along_chord_rank(const Crossing& x) const {
  const int n = slot_count();
  const int fd = arr_slot_[x.curve_d][x.gap_d];
  const int td = dep_slot_[x.curve_d][x.gap_d];
  const int ft = arr_slot_[x.curve_t][x.gap_t];
  const int tt = dep_slot_[x.curve_t][x.gap_t];
  const int span = ccw_offset(td, fd, n);
  const int left_end = ccw_offset(td, tt, n) < span ? tt : ft;
  // Crossing points sit along the d-chord in the order of the crossing
  // chords' left-side endpoints, nearest the arrival end first; clockwise
  // distance from the arrival slot realizes that order. (Chords that also
  // cross each other can be drawn in either relative order along the d-chord;
  // this rule fixes one consistent picture.)
  return mod(fd - left_end, n);
}

std::vector<ChordModel::Crossing> ChordModel::crossings(int cd, int ct) const {
  check_defect(cd != ct, "use self_crossings for one curve");
  std::vector<Crossing> out;
  const int pd = static_cast<int>(curves_[cd].size());
  const int pt = static_cast<int>(curves_[ct].size());
  for (int i = 0; i < pd; ++i)
    for (int j = 0; j < pt; ++j)
      if (chords_cross(cd, i, ct, j))
        out.push_back(Crossing{cd, i, ct, j, chord_sign(cd, i, ct, j)});
  std::sort(out.begin(), out.end(),
            [this](const Crossing& x, const Crossing& y) {
              if (x.gap_d != y.gap_d) return x.gap_d < y.gap_d;
              return along_chord_rank(x) < along_chord_rank(y);
            });
  return out;
}

std::vector<ChordModel::Crossing> ChordModel::self_crossings(int c) const {
  std::vector<Crossing> out;
  const int p = static_cast<int>(curves_[c].size());
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (chords_cross(c, i, c, j))
        out.push_back(Crossing{c, i, c, j, chord_sign(c, i, c, j)});
  std::sort(out.begin(), out.end(),
            [this](const Crossing& x, const Crossing& y) {
              if (x.gap_d != y.gap_d) return x.gap_d < y.gap_d;
              return along_chord_rank(x) < along_chord_rank(y);
            });
  return out;
}

}  // namespace hg
