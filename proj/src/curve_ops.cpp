#include "hg/curve_ops.h"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "hg/diag.h"
#include "hg/strands.h"

namespace hg {

namespace {

// Letters of the cyclic word from gap p up to gap q (empty when p == q).
Word cyclic_arc(const Word& w, int p, int q) {
  const int n = static_cast<int>(w.size());
  Word out;
  for (int i = p; i % n != q % n; ++i) out.push_back(w[i % n]);
  return out;
}

}  // namespace

long CurveOps::intersection(const Word& u, const Word& v) {
  return kernel_.geometric_intersection(u, v);
}

long CurveOps::self_intersection(const Word& u) {
  return kernel_.self_intersection(u);
}

bool CurveOps::is_simple(const Word& u) { return kernel_.is_simple(u); }

MinimalPosition CurveOps::minimal_position(const Word& u, const Word& v) {
  if (cache_.same_class(u, v)) return self_minimal_position(u);
  MinimalPosition mp = kernel_.minimal_position(u, v);
  ChordModel cm(model(), {mp.a, mp.b});
  const auto ab = cm.crossings(0, 1);
  const auto ba = cm.crossings(1, 0);
  check_defect(ab.size() == mp.crossings.size() && ba.size() == ab.size(),
               "chord diagram and kernel disagree on the crossing count");

  // When two curves fellow-travel, the crossing may sit at any vertex of the
  // shared corridor, so the kernel's and the diagram's letter positions can
  // legitimately differ; the signed total cannot.
  long from_kernel = 0, from_chords = 0;
  for (const auto& c : mp.crossings) from_kernel += c.sign;
  for (const auto& x : ab) from_chords += x.sign;
  check_defect(from_kernel == from_chords,
               "chord diagram and kernel disagree on crossing signs");

  // The two sweeps list the same crossings; (gap_d, gap_t) is unique per
  // crossing because two chords cross at most once.
  std::map<std::pair<int, int>, int> ord_on_b;
  for (int k = 0; k < static_cast<int>(ba.size()); ++k)
    ord_on_b[{ba[k].gap_d, ba[k].gap_t}] = k;

  std::vector<Crossing> merged;
  merged.reserve(ab.size());
  for (int k = 0; k < static_cast<int>(ab.size()); ++k) {
    const auto& x = ab[k];
    auto it = ord_on_b.find({x.gap_t, x.gap_d});
    check_defect(it != ord_on_b.end(),
                 "chord crossing missing from the transposed sweep");
    check_defect(ba[it->second].sign == -x.sign,
                 "chord crossing sign does not transpose");
    merged.push_back({x.gap_d, x.gap_t, x.sign, k, it->second});
  }
  std::sort(merged.begin(), merged.end(), [](const Crossing& l, const Crossing& r) {
    return std::tie(l.pos_a, l.pos_b) < std::tie(r.pos_a, r.pos_b);
  });
  mp.crossings = std::move(merged);
  return mp;
}

MinimalPosition CurveOps::self_minimal_position(const Word& u) {
  const ConjClass& cu = cache_.analyze(u);
  if (cu.exponent != 1)
    fail_input("self minimal position needs a primitive class");
  const long si = kernel_.self_intersection(u);

  MinimalPosition mp;
  mp.a = mp.b = cu.root_geodesic;
  ChordModel cm(model(), {cu.root_geodesic});
  const auto xs = cm.self_crossings(0);
  check_defect(static_cast<long>(xs.size()) == si,
               "chord diagram and kernel disagree on self-crossings");

  // Rank every crossing end along the curve by (gap, transverse position on
  // its chord); the transposed record ranks the far end.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, bool>>> ends;
  for (int k = 0; k < static_cast<int>(xs.size()); ++k) {
    ChordModel::Crossing t{xs[k].curve_t, xs[k].gap_t,
                           xs[k].curve_d, xs[k].gap_d, -xs[k].sign};
    ends.push_back({{xs[k].gap_d, cm.along_chord_rank(xs[k])}, {k, false}});
    ends.push_back({{xs[k].gap_t, cm.along_chord_rank(t)}, {k, true}});
  }
  std::sort(ends.begin(), ends.end());
  for (std::size_t i = 1; i < ends.size(); ++i)
    check_defect(ends[i - 1].first != ends[i].first,
                 "two crossing ends share a position along the curve");

  mp.crossings.reserve(xs.size());
  for (const auto& x : xs)
    mp.crossings.push_back({x.gap_d, x.gap_t, x.sign, -1, -1});
  for (int i = 0; i < static_cast<int>(ends.size()); ++i) {
    auto [k, far] = ends[i].second;
    (far ? mp.crossings[k].ord_b : mp.crossings[k].ord_a) = i;
  }
  std::sort(mp.crossings.begin(), mp.crossings.end(),
            [](const Crossing& l, const Crossing& r) {
              return std::tie(l.pos_a, l.pos_b) < std::tie(r.pos_a, r.pos_b);
            });
  return mp;
}

Word CurveOps::neighborhood_boundary(const Word& c, const Word& d) {
  if (kernel_.self_intersection(c) != 0 || kernel_.self_intersection(d) != 0)
    fail_input("neighborhood boundary needs simple curves");
  MinimalPosition mp = minimal_position(c, d);
  if (mp.crossings.size() != 1)
    fail_input(fmt::format("neighborhood boundary needs crossing number 1, got {}",
                           mp.crossings.size()));

  const Crossing& x = mp.crossings.front();
  Word lc = rotated(mp.a, x.pos_a);
  Word ld = rotated(mp.b, x.pos_b);
  Word w = concat(concat(lc, ld), concat(inverse_word(lc), inverse_word(ld)));
  const ConjClass& out = cache_.analyze(w);

  for (int h : homology_vector(model(), out.class_key))
    check_defect(h == 0, "neighborhood boundary is not null-homologous");
  check_defect(kernel_.self_intersection(out.class_key) == 0,
               "neighborhood boundary is not simple");
  check_defect(kernel_.geometric_intersection(out.class_key, c) == 0 &&
                   kernel_.geometric_intersection(out.class_key, d) == 0,
               "neighborhood boundary meets its defining curves");
  return out.class_key;
}

std::vector<Word> CurveOps::surgery_candidates(const Word& c, const Word& d) {
  if (kernel_.self_intersection(c) != 0 || kernel_.self_intersection(d) != 0)
    fail_input("surgery needs simple curves");
  MinimalPosition mp = minimal_position(c, d);
  if (mp.crossings.empty()) fail_input("disjoint curves admit no surgery");

  const int n = static_cast<int>(mp.crossings.size());
  std::set<Word> out;
  auto offer = [&](const Word& w) {
    if (cyclic_dehn_reduce(model(), w).empty()) return;
    const Word& key = cache_.analyze(w).class_key;
    if (cache_.same_class(key, c) || cache_.same_class(key, d)) return;
    out.insert(key);
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Crossing& x = mp.crossings[i];
      const Crossing& y = mp.crossings[j];
      // Both subarcs of each curve between the two crossing points; for a
      // single crossing the subarcs degenerate to the point and the full
      // circle (either orientation).
      std::vector<Word> on_c, on_d;
      if (i == j) {
        on_c = {Word{}, rotated(mp.a, x.pos_a),
                inverse_word(rotated(mp.a, x.pos_a))};
        on_d = {Word{}, rotated(mp.b, x.pos_b),
                inverse_word(rotated(mp.b, x.pos_b))};
      } else {
        on_c = {cyclic_arc(mp.a, x.pos_a, y.pos_a),
                inverse_word(cyclic_arc(mp.a, y.pos_a, x.pos_a))};
        on_d = {cyclic_arc(mp.b, y.pos_b, x.pos_b),
                inverse_word(cyclic_arc(mp.b, x.pos_b, y.pos_b))};
      }
      for (const Word& u : on_c)
        for (const Word& v : on_d) offer(concat(u, v));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace hg
