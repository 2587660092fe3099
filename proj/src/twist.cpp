#include <fmt/format.h>

#include <vector>

#include "hg/curve_ops.h"
#include "hg/diag.h"
#include "hg/strands.h"

namespace hg {

// The image of d under the p-th power of the twist along t.  Each time d
// crosses t the image picks up a copy of t (with the sign and power folded
// into the exponent); splicing those copies into the spelling of d at the
// crossing gaps realizes the twist on the nose, not just up to homology.
Word CurveOps::dehn_twist(const Word& t, const Word& d, int power) {
  if (kernel_.self_intersection(t) != 0)
    fail_input("twists are only defined along simple curves");
  const ConjClass& cd = cache_.analyze(d);
  const ConjClass& ct = cache_.analyze(t);
  if (power == 0 || ct.root_key == cd.root_key) return cd.class_key;

  const Word& rho = cd.root_geodesic;
  const Word& wt = ct.root_geodesic;
  ChordModel cm(model(), {rho, wt});
  check_defect(cm.self_crossings(1).empty(),
               "twisting curve shows self-crossings in the chord diagram");
  const auto xs = cm.crossings(0, 1);
  if (xs.empty()) return cd.class_key;
  check_defect(static_cast<long>(xs.size()) ==
                   kernel_.geometric_intersection(rho, wt),
               "chord diagram and kernel disagree on the twist crossings");

  long total_sign = 0;
  for (const auto& x : xs) total_sign += x.sign;
  const std::vector<int> hr = homology_vector(model(), rho);
  const std::vector<int> ht = homology_vector(model(), wt);
  check_defect(total_sign == homology_pairing(model(), hr, ht),
               "crossing signs do not sum to the algebraic intersection");

  // xs is sorted along rho; splice t^{-power*sign} into each crossing gap,
  // spelling t from the gap where the crossing sits on it.
  Word out;
  std::size_t k = 0;
  for (int i = 0; i < static_cast<int>(rho.size()); ++i) {
    while (k < xs.size() && xs[k].gap_d == i) {
      out = concat(out, hg::power(rotated(wt, xs[k].gap_t), -power * xs[k].sign));
      ++k;
    }
    out.push_back(rho[i]);
  }
  check_defect(k == xs.size(), "crossing gap beyond the curve length");

  const std::vector<int> ho = homology_vector(model(), out);
  for (std::size_t i = 0; i < ho.size(); ++i)
    check_defect(ho[i] == hr[i] - power * total_sign * ht[i],
                 "twist image has the wrong homology class");

  const ConjClass& rc = cache_.analyze(hg::power(out, cd.exponent));
  check_defect(rc.exponent == cd.exponent,
               "twist image changed the primitive exponent");
  return rc.class_key;
}

}  // namespace hg
