#include "hg/kernel.h"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include <fmt/format.h>

#include "hg/diag.h"

namespace hg {
namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

std::string bytes_of(const Word& w) { return std::string(w.begin(), w.end()); }

struct Touch {
  int t = 0, s = 0;
};

// Scans one pair of lifts: the first curve's line with phase p and the second
// curve's line with phase q, both passing through the base vertex at
// parameter 0. Finds all shared vertices, decides whether this pair carries
// the canonical crossing at the base vertex, and locates the crossing.
class ConfigScan {
 public:
  ConfigScan(const SplittingModel& m, const Word& a, const Word& b, int p, int q)
      : m_(m),
        a_(a),
        b_(b),
        na_(static_cast<int>(a.size())),
        nb_(static_cast<int>(b.size())),
        p_(p),
        q_(q),
        stop_(16 * m.genus() + 8) {}

  void run() {
    touches_.push_back({0, 0});
    scan(+1, +1);
    scan(+1, -1);
    scan(-1, +1);
    scan(-1, -1);
    std::sort(touches_.begin(), touches_.end(),
              [](const Touch& u, const Touch& v) { return u.s < v.s; });
    for (std::size_t i = 0; i + 1 < touches_.size(); ++i)
      check_defect(touches_[i].s < touches_[i + 1].s, "geodesic line revisited a vertex");
    analyze();
  }

  bool counted() const { return counted_; }
  int sign() const { return side_pos_ ? +1 : -1; }
  // Crossing vertex parameters, valid when counted().
  int cross_pos_a() const { return mod(p_ + cross_.t, na_); }
  int cross_pos_b() const { return mod(q_ + cross_.s, nb_); }

 private:
  // Letter of the first line from parameter t to t+1, and same for the second.
  Letter xl(int t) const { return a_[mod(p_ + t, na_)]; }
  Letter yl(int s) const { return b_[mod(q_ + s, nb_)]; }

  void scan(int et, int es) {
    Word d;
    constexpr int kScanLimit = 4096;
    for (int u = 1; u <= kScanLimit; ++u) {
      const Letter ax = et > 0 ? xl(u - 1) : xl(-u);
      const Letter by = es > 0 ? yl(u - 1) : yl(-u);
      Word nd;
      nd.reserve(d.size() + 2);
      nd.push_back(et > 0 ? inverse(ax) : ax);
      nd.insert(nd.end(), d.begin(), d.end());
      nd.push_back(es > 0 ? by : inverse(by));
      d = dehn_reduce(m_, std::move(nd));
      if (d.empty())
        touches_.push_back({et * u, es * u});
      else if (static_cast<int>(d.size()) > stop_)
        return;
    }
    fail_defect("lift scan failed to separate; the curves may share a root");
  }

  // True iff germ y sits strictly inside the ccw-left arc of the first line
  // at a shared vertex with local germs x_out, x_in.
  bool left_of(Letter x_out, Letter x_in, Letter y) const {
    const int to_y = m_.ccw_distance(x_out, y);
    const int to_in = m_.ccw_distance(x_out, x_in);
    check_defect(to_y != 0 && to_y != to_in, "departure germ collides with the line");
    return to_y < to_in;
  }

  bool left_at(const Touch& touch, Letter y_germ) const {
    return left_of(xl(touch.t), inverse(xl(touch.t - 1)), y_germ);
  }

  // Do consecutive touches share the surface edge between them?
  bool edge_connected(const Touch& u, const Touch& v) const {
    if (v.s != u.s + 1) return false;
    if (v.t == u.t + 1) {
      check_defect(xl(u.t) == yl(u.s), "parallel edges between two vertices");
      return true;
    }
    if (v.t == u.t - 1) {
      check_defect(xl(u.t - 1) == inverse(yl(u.s)), "parallel edges between two vertices");
      return true;
    }
    return false;
  }

  void analyze() {
    bool has_negative_t = false;
    for (const Touch& t : touches_) has_negative_t |= t.t < 0;

    side_pos_ = left_at(touches_.back(), yl(touches_.back().s));
    const bool side_neg = left_at(touches_.front(), inverse(yl(touches_.front().s - 1)));
    const bool linked = side_pos_ != side_neg;
    counted_ = linked && !has_negative_t;
    if (!counted_) return;

    // Corridors: maximal runs of edge-connected touches. The second line
    // changes sides across exactly one corridor; the crossing lives there.
    std::vector<std::pair<int, int>> corridors;  // [first, last] touch indices
    corridors.emplace_back(0, 0);
    for (std::size_t i = 0; i + 1 < touches_.size(); ++i) {
      if (edge_connected(touches_[i], touches_[i + 1]))
        corridors.back().second = static_cast<int>(i) + 1;
      else
        corridors.emplace_back(static_cast<int>(i) + 1, static_cast<int>(i) + 1);
    }

    std::vector<bool> sides;  // side before corridor 0, between corridors, after
    sides.push_back(side_neg);
    for (std::size_t c = 0; c + 1 < corridors.size(); ++c) {
      const Touch& leave = touches_[corridors[c].second];
      const Touch& arrive = touches_[corridors[c + 1].first];
      const bool depart_side = left_at(leave, yl(leave.s));
      check_defect(depart_side == left_at(arrive, inverse(yl(arrive.s - 1))),
                   "gap between corridors changes sides");
      sides.push_back(depart_side);
    }
    sides.push_back(side_pos_);

    int flips = 0;
    std::size_t flip_corridor = 0;
    for (std::size_t i = 0; i + 1 < sides.size(); ++i)
      if (sides[i] != sides[i + 1]) {
        ++flips;
        flip_corridor = i;
      }
    check_defect(flips == 1, "linked lines must change sides exactly once");

    cross_ = touches_[corridors[flip_corridor].first];
    auto rank = [](const Touch& t) {
      return std::tuple(std::abs(t.t) + std::abs(t.s), std::abs(t.t - t.s),
                        std::min(t.t, t.s));
    };
    for (int i = corridors[flip_corridor].first; i <= corridors[flip_corridor].second; ++i)
      if (rank(touches_[i]) < rank(cross_)) cross_ = touches_[i];
  }

  const SplittingModel& m_;
  const Word& a_;
  const Word& b_;
  int na_, nb_, p_, q_, stop_;
  std::vector<Touch> touches_;
  bool counted_ = false;
  bool side_pos_ = false;
  Touch cross_{};
};

}  // namespace

long IntersectionKernel::primitive_pair_count(const Word& a, const Word& b) {
  const SplittingModel& m = model();
  std::string key = bytes_of(a) + '\x01' + bytes_of(b);
  if (auto it = pair_memo_.find(key); it != pair_memo_.end()) return it->second;

  long count = 0, signed_sum = 0;
  for (int p = 0; p < static_cast<int>(a.size()); ++p) {
    for (int q = 0; q < static_cast<int>(b.size()); ++q) {
      ConfigScan scan(m, a, b, p, q);
      scan.run();
      if (scan.counted()) {
        ++count;
        signed_sum += scan.sign();
      }
    }
  }
  const long alg = homology_pairing(m, homology_vector(m, a), homology_vector(m, b));
  check_defect(signed_sum == alg, "signed crossings disagree with the homology pairing");

  pair_memo_.emplace(std::move(key), count);
  return count;
}

long IntersectionKernel::primitive_self_count(const Word& a) {
  const SplittingModel& m = model();
  std::string key = bytes_of(a);
  if (auto it = self_memo_.find(key); it != self_memo_.end()) return it->second;

  long count = 0, signed_sum = 0;
  const int n = static_cast<int>(a.size());
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      ConfigScan scan(m, a, a, p, q);
      scan.run();
      if (scan.counted()) {
        ++count;
        signed_sum += scan.sign();
      }
    }
  }
  check_defect(signed_sum == 0, "self-crossing signs must cancel");
  check_defect(count % 2 == 0, "ordered self-crossing count must be even");
  count /= 2;

  self_memo_.emplace(std::move(key), count);
  return count;
}

long IntersectionKernel::self_intersection(const Word& u) {
  const ConjClass& c = classes_.analyze(u);
  const long k = c.exponent;
  const long root_si = primitive_self_count(c.root_key);
  return k * k * root_si + (k - 1);
}

long IntersectionKernel::geometric_intersection(const Word& u, const Word& v) {
  const ConjClass& cu = classes_.analyze(u);
  const ConjClass& cv = classes_.analyze(v);
  if (cu.class_key == cv.class_key) return 2 * self_intersection(u);
  const long k = cu.exponent, l = cv.exponent;
  if (cu.root_key == cv.root_key) return k * l * 2 * primitive_self_count(cu.root_key);
  const Word& a = cu.root_key <= cv.root_key ? cu.root_key : cv.root_key;
  const Word& b = cu.root_key <= cv.root_key ? cv.root_key : cu.root_key;
  return k * l * primitive_pair_count(a, b);
}

MinimalPosition IntersectionKernel::minimal_position(const Word& u, const Word& v) {
  const ConjClass& cu = classes_.analyze(u);
  const ConjClass& cv = classes_.analyze(v);
  if (cu.exponent != 1 || cv.exponent != 1)
    fail_input("minimal position requires primitive curve classes");
  if (cu.class_key == cv.class_key)
    fail_input("minimal position requires two distinct curve classes");

  const bool flip = !(cu.class_key <= cv.class_key);
  const Word& a = flip ? cv.class_key : cu.class_key;
  const Word& b = flip ? cu.class_key : cv.class_key;

  MinimalPosition out;
  out.a = a;
  out.b = b;
  for (int p = 0; p < static_cast<int>(a.size()); ++p) {
    for (int q = 0; q < static_cast<int>(b.size()); ++q) {
      ConfigScan scan(model(), a, b, p, q);
      scan.run();
      if (scan.counted())
        out.crossings.push_back({scan.cross_pos_a(), scan.cross_pos_b(), scan.sign()});
    }
  }
  check_defect(static_cast<long>(out.crossings.size()) == primitive_pair_count(a, b),
               "crossing records disagree with the intersection number");

  if (flip) {
    std::swap(out.a, out.b);
    for (Crossing& c : out.crossings) {
      std::swap(c.pos_a, c.pos_b);
      c.sign = -c.sign;
    }
  }
  std::sort(out.crossings.begin(), out.crossings.end(), [](const Crossing& x, const Crossing& y) {
    return std::tie(x.pos_a, x.pos_b) < std::tie(y.pos_a, y.pos_b);
  });
  return out;
}

}  // namespace hg
