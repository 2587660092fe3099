#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "hg/curve_ops.h"
#include "hg/diag.h"
#include "hg/strands.h"

namespace hg {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

// Cutting happens in the spine picture: the cut chords split the fat vertex
// into regions, the cut strands split each band into strips, and the lone
// complementary cell glues the outermost strips together.  Pieces are the
// connected unions; each is Euler-counted from its cells (scar circles
// contribute no characteristic, so chi = [cell] - strips + regions).
CutReport CurveOps::cut_along(const std::vector<Word>& cuts,
                              const std::vector<Word>& marked) {
  if (cuts.empty()) fail_input("cut needs at least one curve");
  const SplittingModel& m = model();
  const int nc = static_cast<int>(cuts.size());

  std::vector<Word> roots;
  std::vector<std::string> names;
  auto admit = [&](const Word& w, const std::string& name) {
    if (kernel_.self_intersection(w) != 0)
      fail_input(fmt::format("{} is not simple", name));
    roots.push_back(cache_.analyze(w).root_geodesic);
    names.push_back(name);
  };
  for (int i = 0; i < nc; ++i) admit(cuts[i], fmt::format("cut curve {}", i));
  for (std::size_t i = 0; i < marked.size(); ++i)
    admit(marked[i], fmt::format("marked curve {}", i));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (cache_.same_class(roots[i], roots[j]))
        fail_input(fmt::format("{} and {} are parallel", names[i], names[j]));
      if (kernel_.geometric_intersection(roots[i], roots[j]) != 0)
        fail_input(fmt::format("{} and {} intersect", names[i], names[j]));
    }
  }

  ChordModel cm(m, roots);
  const int slot_total = cm.slot_count();

  // Cut chords only; marked chords stay interior to the regions.
  std::vector<int> chord_at_slot(slot_total, -1);
  int chord_total = 0;
  for (int c = 0; c < nc; ++c) {
    for (int i = 0; i < static_cast<int>(roots[c].size()); ++i) {
      chord_at_slot[cm.arrival_slot(c, i)] = chord_total;
      chord_at_slot[cm.departure_slot(c, i)] = chord_total;
      ++chord_total;
    }
  }

  // Disjoint simple curves give non-crossing chords, so a parenthesis sweep
  // labels the arc after every slot with its region of the split vertex.
  std::vector<int> region_of_arc(slot_total, -1);
  std::vector<bool> seen(chord_total, false);
  std::vector<std::pair<int, int>> open;  // (chord, region left behind)
  int current = 0;
  int region_total = 1;
  for (int s = 0; s < slot_total; ++s) {
    const int id = chord_at_slot[s];
    if (id >= 0 && !seen[id]) {
      seen[id] = true;
      open.push_back({id, current});
      current = region_total++;
    } else if (id >= 0) {
      check_defect(!open.empty() && open.back().first == id,
                   "cut chords cross inside the vertex");
      current = open.back().second;
      open.pop_back();
    }
    region_of_arc[s] = current;
  }
  check_defect(open.empty() && current == 0,
               "vertex region sweep did not close");
  check_defect(region_total == chord_total + 1,
               "vertex region count is off");

  // Germ blocks around the circle, counterclockwise from a1, mirroring the
  // chord model's own assembly; verify the block layout against its slots.
  std::vector<int> block_start(m.alphabet_size(), -1);
  {
    int at = 0;
    Letter x = m.a(1);
    for (int r = 0; r < m.alphabet_size(); ++r, x = m.ccw_next(x)) {
      block_start[x] = at;
      at += static_cast<int>(cm.band(generator_index(x)).size());
    }
    check_defect(at == slot_total, "germ blocks do not tile the circle");
  }
  auto slot_in_germ = [&](Letter g, int band_index) {
    const auto& band = cm.band(generator_index(g));
    const int k_count = static_cast<int>(band.size());
    const ChordModel::Pass& s = band[band_index];
    const Word& w = cm.curve(s.curve);
    const int slot =
        w[s.pos] == g
            ? cm.departure_slot(s.curve, s.pos)
            : cm.arrival_slot(s.curve, (s.pos + 1) % static_cast<int>(w.size()));
    const int expect = !is_inverse_letter(g) ? block_start[g] + band_index
                                             : block_start[g] + k_count - 1 - band_index;
    check_defect(slot == expect, "germ block layout mismatch");
    return slot;
  };

  // Band strips join vertex regions; remember one region per strip for the
  // Euler count.  The corner arc before a germ block stands in for the strip
  // beyond the last cut strand on that side.
  Dsu dsu(region_total);
  std::vector<int> strip_region;
  auto corner_before = [&](Letter g) {
    return region_of_arc[(block_start[g] - 1 + slot_total) % slot_total];
  };
  for (int e = 0; e < 2 * m.genus(); ++e) {
    const Letter head = static_cast<Letter>(2 * e);
    const Letter tail = inverse(head);
    const auto& band = cm.band(e);
    const int k_count = static_cast<int>(band.size());
    std::vector<int> cut_at;
    for (int b = 0; b < k_count; ++b)
      if (band[b].curve < nc) cut_at.push_back(b);
    const int strands = static_cast<int>(cut_at.size());
    for (int j = 0; j <= strands; ++j) {
      const int at_head =
          j == 0 ? corner_before(head)
                 : region_of_arc[slot_in_germ(head, cut_at[j - 1])];
      const int at_tail =
          j == strands ? corner_before(tail)
                       : region_of_arc[slot_in_germ(tail, cut_at[j])];
      dsu.unite(at_head, at_tail);
      strip_region.push_back(at_head);
    }
  }

  // The complement cell touches every corner arc, so all corner regions must
  // already be joined; the cell contributes to that piece.
  int cell_class = -1;
  {
    Letter x = m.a(1);
    for (int r = 0; r < m.alphabet_size(); ++r, x = m.ccw_next(x)) {
      const int cls = dsu.find(corner_before(x));
      if (cell_class < 0) cell_class = cls;
      check_defect(cls == cell_class, "complement cell touches two pieces");
    }
  }

  // Pieces in order of their smallest region.
  std::vector<int> piece_of_class(region_total, -1);
  int piece_total = 0;
  for (int r = 0; r < region_total; ++r) {
    const int cls = dsu.find(r);
    if (piece_of_class[cls] < 0) piece_of_class[cls] = piece_total++;
  }
  auto piece_of_region = [&](int r) { return piece_of_class[dsu.find(r)]; };

  std::vector<int> regions_in(piece_total, 0), strips_in(piece_total, 0);
  for (int r = 0; r < region_total; ++r) ++regions_in[piece_of_region(r)];
  for (int r : strip_region) ++strips_in[piece_of_region(r)];

  CutReport report;
  report.pieces.resize(piece_total);

  // Scars: the arcs leaving a chord's endpoints flank it on the left
  // (departure) and right (arrival) for the root as spelled; a scar circle
  // stays inside one piece.
  for (int c = 0; c < nc; ++c) {
    int left = -1, right = -1;
    for (int i = 0; i < static_cast<int>(roots[c].size()); ++i) {
      const int l = piece_of_region(region_of_arc[cm.departure_slot(c, i)]);
      const int r = piece_of_region(region_of_arc[cm.arrival_slot(c, i)]);
      if (i == 0) {
        left = l;
        right = r;
      }
      check_defect(l == left && r == right, "scar circle crosses pieces");
    }
    report.pieces[left].scars.push_back({c, 0});
    report.pieces[right].scars.push_back({c, 1});
  }

  int chi_sum = 0;
  for (int p = 0; p < piece_total; ++p) {
    CutPiece& piece = report.pieces[p];
    const int chi =
        (piece_of_class[cell_class] == p ? 1 : 0) - strips_in[p] + regions_in[p];
    piece.boundary_count = static_cast<int>(piece.scars.size());
    check_defect(piece.boundary_count >= 1, "piece without boundary");
    const int doubled = 2 - chi - piece.boundary_count;
    check_defect(doubled >= 0 && doubled % 2 == 0,
                 "piece has no consistent genus");
    piece.genus = doubled / 2;
    chi_sum += chi;
  }
  check_defect(chi_sum == 2 - 2 * m.genus(),
               "piece characteristics do not sum to the surface's");

  // A marked curve never meets a cut chord, so every arc it touches lies in
  // one piece; report that piece.
  for (int k = 0; k < static_cast<int>(marked.size()); ++k) {
    const int c = nc + k;
    int placed = -1;
    for (int i = 0; i < static_cast<int>(roots[c].size()); ++i) {
      const int l = piece_of_region(region_of_arc[cm.departure_slot(c, i)]);
      const int r = piece_of_region(region_of_arc[cm.arrival_slot(c, i)]);
      if (i == 0) placed = l;
      check_defect(l == placed && r == placed,
                   "marked curve straddles pieces");
    }
    report.placements.push_back(placed);
  }
  return report;
}

}  // namespace hg
