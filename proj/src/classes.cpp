#include "hg/classes.h"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_set>

#include <fmt/format.h>

#include "hg/diag.h"

namespace hg {
namespace {

using Bytes = std::string;

Bytes bytes_of(const Word& w) { return Bytes(w.begin(), w.end()); }

// Successor/predecessor permutations along the relator cycle, per family
// (+1 reads R, -1 reads R^-1).
struct StepTables {
  std::array<Letter, kMaxLetters> succ_pos{}, succ_neg{}, pred_pos{}, pred_neg{};

  explicit StepTables(const SplittingModel& m) {
    for (int x = 0; x < m.alphabet_size(); ++x) {
      succ_pos[x] = m.relator_succ(Letter(x));
      succ_neg[x] = m.relator_inv_succ(Letter(x));
    }
    for (int x = 0; x < m.alphabet_size(); ++x) {
      pred_pos[succ_pos[x]] = Letter(x);
      pred_neg[succ_neg[x]] = Letter(x);
    }
  }

  Letter succ(int fam, Letter x) const { return fam > 0 ? succ_pos[x] : succ_neg[x]; }
  Letter pred(int fam, Letter x) const { return fam > 0 ? pred_pos[x] : pred_neg[x]; }
};

// Enumerates all single-band rewritings of a word.
//
// A band is a chain of relator faces glued along length-1 pieces (vertical
// edges). The top of the band covers a subword of w; the bottom spells the
// replacement. Reading a face's boundary from its top block onward gives a
// rotation of R or R^-1, so once a block's letters are known everything else
// about the face is forced:
//
//   cycle(face) = block . [right vertical] . inverse(bottom) . [left vertical]
//
// Adjacent faces share their vertical, giving the chaining condition
// pred(first letter of next block) == inverse(succ(last letter of previous)).
// Blocks of length >= 2 have a unique relator position (pieces have length 1),
// so enumeration branches only over block sizes and positions.
class BandEnumerator {
 public:
  BandEnumerator(const SplittingModel& m, const Word& w, bool cyclic)
      : m_(m),
        w_(w),
        n_(static_cast<int>(w.size())),
        four_g_(4 * m.genus()),
        cyclic_(cyclic),
        t_(m) {
    int g = m.genus();
    for (int s = 2 * g - 2; s <= 2 * g + 1; ++s)
      if (s >= 2) multi_sizes_.push_back(s);
  }

  std::vector<Word> run() {
    if (n_ < 2) return {};
    for (int start = 0; start < n_; ++start) {
      open_chains(start);
      if (cyclic_) closed_chains(start);
    }
    return std::move(out_);
  }

 private:
  Letter at(int i) const { return w_[((i % n_) + n_) % n_]; }

  // Relator family of the block w[i..i+len), or 0 if it is not a run.
  int block_family(int i, int len) const {
    int fam = m_.pair_family(at(i), at(i + 1));
    if (fam == 0) return 0;
    for (int k = 1; k + 1 < len; ++k)
      if (m_.pair_family(at(i + k), at(i + k + 1)) != fam) return 0;
    return fam;
  }

  struct Face {
    Letter after;   // letter following the block in its relator cycle
    Letter before;  // letter preceding the block in its relator cycle
    Word bottom;    // replacement letters, read in w's direction
  };

  Face make_face(int i, int len, int fam, bool left_vertical, bool right_vertical) const {
    Face f;
    f.before = t_.pred(fam, at(i));
    Letter last = at(i + len - 1);
    f.after = t_.succ(fam, last);
    int k = four_g_ - len - (left_vertical ? 1 : 0) - (right_vertical ? 1 : 0);
    Word cycle_rest(static_cast<std::size_t>(k));
    Letter walk = right_vertical ? f.after : last;
    for (int t = 0; t < k; ++t) {
      walk = t_.succ(fam, walk);
      cycle_rest[static_cast<std::size_t>(t)] = walk;
    }
    f.bottom = inverse_word(cycle_rest);
    return f;
  }

  void emit_open(int start, int support, Word bottom) {
    if (cyclic_) {
      Word out = std::move(bottom);
      for (int i = start + support; i < start + n_; ++i) out.push_back(at(i));
      out_.push_back(cyclic_free_reduce(std::move(out)));
    } else {
      Word out(w_.begin(), w_.begin() + start);
      out.insert(out.end(), bottom.begin(), bottom.end());
      out.insert(out.end(), w_.begin() + start + support, w_.end());
      out_.push_back(free_reduce(std::move(out)));
    }
  }

  void open_chains(int start) {
    int max_support = cyclic_ ? n_ : n_ - start;
    // Single-face bands: the half-relator swaps and all Dehn reductions.
    for (int len = 2; len <= std::min(four_g_, max_support); ++len) {
      int fam = block_family(start, len);
      if (fam == 0) continue;
      emit_open(start, len, make_face(start, len, fam, false, false).bottom);
    }
    dfs_open(start, start, max_support, Word(), Letter(0), true);
  }

  void dfs_open(int start, int pos, int max_support, const Word& acc, Letter prev_after,
                bool first) {
    for (int len : multi_sizes_) {
      if (pos + len - start > max_support) continue;
      int fam = block_family(pos, len);
      if (fam == 0) continue;
      if (!first && t_.pred(fam, at(pos)) != inverse(prev_after)) continue;
      if (!first) {
        // Close the band with this face (left vertical only).
        Face f = make_face(pos, len, fam, true, false);
        Word bottom = acc;
        bottom.insert(bottom.end(), f.bottom.begin(), f.bottom.end());
        emit_open(start, pos + len - start, std::move(bottom));
      }
      // Continue the band (this face keeps its right vertical).
      Face f = make_face(pos, len, fam, !first, true);
      Word bottom = acc;
      bottom.insert(bottom.end(), f.bottom.begin(), f.bottom.end());
      dfs_open(start, pos + len, max_support, bottom, f.after, false);
    }
  }

  // Bands wrapping the whole cyclic word, all faces carrying both verticals;
  // the first face's left vertical is the last face's right vertical.
  void closed_chains(int start) { dfs_closed(start, start, Word(), Letter(0), Letter(0), true); }

  void dfs_closed(int start, int pos, const Word& acc, Letter first_before, Letter prev_after,
                  bool first) {
    for (int len : multi_sizes_) {
      if (pos + len - start > n_) continue;
      if (four_g_ - len - 2 < 0) continue;
      int fam = block_family(pos, len);
      if (fam == 0) continue;
      Letter before = t_.pred(fam, at(pos));
      if (!first && before != inverse(prev_after)) continue;
      Face f = make_face(pos, len, fam, true, true);
      Word bottom = acc;
      bottom.insert(bottom.end(), f.bottom.begin(), f.bottom.end());
      if (pos + len - start == n_) {
        if ((first ? before : first_before) == inverse(f.after))
          out_.push_back(cyclic_free_reduce(std::move(bottom)));
      } else {
        dfs_closed(start, pos + len, bottom, first ? before : first_before, f.after, false);
      }
    }
  }

  const SplittingModel& m_;
  const Word& w_;
  int n_;
  int four_g_;
  bool cyclic_;
  StepTables t_;
  std::vector<int> multi_sizes_;
  std::vector<Word> out_;
};

// Slack over the running minimum length kept during class closure. Annular
// diagrams between minimal representatives are single-layer with every band
// length-balanced, so 0 would do in theory; 2 also admits the +2/-2 detours
// and is cheap insurance.
constexpr int kClosureSlack = 2;
constexpr std::size_t kClosureNodeCap = 4'000'000;
constexpr std::size_t kCanonicalNodeCap = 1'000'000;

struct Closure {
  std::vector<Word> minimal;  // rotation-minimized, both orientations
  int min_len = 0;
};

Closure close_class(const SplittingModel& m, const Word& geodesic) {
  Closure result;
  std::unordered_set<Bytes> visited;
  std::deque<Word> queue;
  int cur_min = static_cast<int>(geodesic.size());

  auto push = [&](Word w) {
    if (static_cast<int>(w.size()) > cur_min + kClosureSlack) return;
    check_defect(!w.empty(), "band move trivialized a nontrivial class");
    Word key = min_rotation(w);
    if (visited.insert(bytes_of(key)).second) {
      cur_min = std::min(cur_min, static_cast<int>(key.size()));
      queue.push_back(std::move(key));
    }
  };

  push(geodesic);
  push(inverse_word(geodesic));
  while (!queue.empty()) {
    if (visited.size() > kClosureNodeCap)
      fail_budget(fmt::format("class closure exceeded {} words", kClosureNodeCap));
    Word w = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(w.size()) > cur_min + kClosureSlack) continue;
    for (Word& next : BandEnumerator(m, w, /*cyclic=*/true).run()) push(std::move(next));
  }

  result.min_len = cur_min;
  for (const auto& bytes : visited)
    if (static_cast<int>(bytes.size()) == cur_min)
      result.minimal.emplace_back(bytes.begin(), bytes.end());
  std::sort(result.minimal.begin(), result.minimal.end());
  check_defect(!result.minimal.empty(), "class closure lost its minimal words");
  return result;
}

// Smallest literal cyclic period over the minimal words, with a witness root.
std::pair<int, Word> smallest_period(const Closure& c) {
  int best = c.min_len;
  Word root;
  for (const Word& w : c.minimal) {
    int n = static_cast<int>(w.size());
    for (int p = 1; p < best; ++p) {
      if (n % p != 0) continue;
      bool periodic = true;
      for (int i = p; i < n && periodic; ++i) periodic = w[i] == w[i % p];
      if (periodic) {
        best = p;
        root.assign(w.begin(), w.begin() + p);
        break;
      }
    }
  }
  return {best, root};
}

}  // namespace

std::vector<Word> band_move_targets(const SplittingModel& m, const Word& w) {
  return BandEnumerator(m, w, /*cyclic=*/true).run();
}

std::vector<Word> band_move_targets_linear(const SplittingModel& m, const Word& w) {
  return BandEnumerator(m, w, /*cyclic=*/false).run();
}

Word canonical_geodesic(const SplittingModel& m, const Word& w) {
  // Dehn reduction alone can stall above the geodesic length when swapping a
  // half-relator window would expose a longer window; whenever the closure
  // finds such a shortcut, restart from the shorter spelling.
  Word start = dehn_reduce(m, w);
restart:
  if (start.empty()) return {};
  const std::size_t target = start.size();
  std::unordered_set<Bytes> visited;
  std::deque<Word> queue;
  Word best = start;
  visited.insert(bytes_of(start));
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    if (visited.size() > kCanonicalNodeCap)
      fail_budget(fmt::format("geodesic closure exceeded {} words", kCanonicalNodeCap));
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word& next : BandEnumerator(m, cur, /*cyclic=*/false).run()) {
      if (next.size() < target) {
        start = dehn_reduce(m, std::move(next));
        goto restart;
      }
      if (next.size() != target) continue;
      if (visited.insert(bytes_of(next)).second) {
        if (next < best) best = next;
        queue.push_back(std::move(next));
      }
    }
  }
  return best;
}

const ConjClass& ClassCache::analyze(const Word& w) {
  Word geo = cyclic_dehn_reduce(m_, w);
  if (geo.empty()) fail_input("conjugacy-class query on a trivial word");
  return analyze_geodesic(geo);
}

const ConjClass& ClassCache::analyze_geodesic(const Word& geo) {
  Bytes memo_key = bytes_of(min_rotation_unoriented(geo));
  if (auto it = memo_.find(memo_key); it != memo_.end()) return *it->second;

  Closure c = close_class(m_, geo);
  auto cc = std::make_shared<ConjClass>();
  cc->min_length = c.min_len;
  cc->class_key = c.minimal.front();  // sorted: the lexmin minimal word
  cc->geodesic = cc->class_key;
  auto [period, period_root] = smallest_period(c);
  if (period < c.min_len) {
    cc->exponent = c.min_len / period;
    const ConjClass& root = analyze_geodesic(period_root);
    check_defect(root.exponent == 1, "root of a curve class is not primitive");
    cc->root_geodesic = root.geodesic;
    cc->root_key = root.class_key;
  } else {
    cc->exponent = 1;
    cc->root_geodesic = cc->geodesic;
    cc->root_key = cc->class_key;
  }

  // Every minimal word resolves to this class; memoize them all.
  for (const Word& min_word : c.minimal) memo_[bytes_of(min_rotation_unoriented(min_word))] = cc;
  const ConjClass& out = *cc;
  memo_[std::move(memo_key)] = std::move(cc);
  return out;
}

bool ClassCache::same_class(const Word& u, const Word& v) {
  return analyze(u).class_key == analyze(v).class_key;
}

}  // namespace hg
