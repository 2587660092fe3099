#include "hg/word.h"

#include <algorithm>

namespace hg {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == inverse(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_free_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == inverse(w.back())) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word rotated(const Word& w, int k) {
  if (w.empty()) return w;
  const int n = static_cast<int>(w.size());
  k = ((k % n) + n) % n;
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverse_word(w) : w;
  const int reps = k < 0 ? -k : k;
  Word out;
  out.reserve(base.size() * reps);
  for (int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word min_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (size_t k = 1; k < w.size(); ++k) {
    Word cand = rotated(w, static_cast<int>(k));
    if (cand < best) best = cand;
  }
  return best;
}

Word min_rotation_unoriented(const Word& w) {
  Word a = min_rotation(w);
  Word b = min_rotation(inverse_word(w));
  return a <= b ? a : b;
}

namespace {

// A maximal relator run in a sequence read through `at(i)`, 0 <= i < len.
// Returns {start, length, family} of the first run of length >= threshold, or
// length 0 if none. Runs chain through relator_succ/relator_inv_succ; pieces
// of length 1 make the chaining unambiguous.
struct RunHit {
  int start = 0;
  int length = 0;
  int family = 0;
};

template <typename At>
RunHit find_run(const SplittingModel& m, int len, int threshold, int cap, const At& at) {
  if (len < 2) return {};
  int run_start = 0;
  int run_len = 1;
  int run_fam = 0;
  for (int i = 1; i < len; ++i) {
    const Letter prev = at(i - 1);
    const Letter cur = at(i);
    const int fam = m.pair_family(prev, cur);
    bool extends = false;
    if (fam != 0) {
      if (run_len == 1 || fam == run_fam) {
        extends = true;
        run_fam = fam;
      }
    }
    if (extends) {
      ++run_len;
      if (run_len >= threshold && run_len >= cap) return {run_start, cap, run_fam};
    } else {
      if (run_len >= threshold) return {run_start, std::min(run_len, cap), run_fam};
      if (fam != 0) {  // the breaking pair opens a run of the other family
        run_start = i - 1;
        run_len = 2;
        run_fam = fam;
      } else {
        run_start = i;
        run_len = 1;
        run_fam = 0;
      }
    }
  }
  if (run_len >= threshold) return {run_start, std::min(run_len, cap), run_fam};
  return {};
}

// Complement replacement: the matched subword s (family +1: subword of cyclic
// R; family -1: of cyclic R^-1) satisfies s = t^-1 in the group, where t is
// the complementary arc of the relator cycle. Returns t^-1.
Word complement_inverse(const SplittingModel& m, const Word& s, int family) {
  const int n = m.alphabet_size();
  const int L = static_cast<int>(s.size());
  Word t;
  t.reserve(n - L);
  if (L == n) return t;  // full relator: empty complement
  Letter cur = s.back();
  auto step = [&](Letter x) {
    return family > 0 ? m.relator_succ(x) : m.relator_inv_succ(x);
  };
  for (int i = 0; i < n - L; ++i) {
    cur = step(cur);
    t.push_back(cur);
  }
  return inverse_word(t);
}

}  // namespace

Word dehn_reduce(const SplittingModel& m, Word w) {
  const int g = m.genus();
  const int threshold = 2 * g + 1;
  const int cap = 4 * g;
  for (;;) {
    w = free_reduce(std::move(w));
    const int len = static_cast<int>(w.size());
    RunHit hit = find_run(m, len, threshold, cap, [&](int i) { return w[i]; });
    if (hit.length == 0) return w;
    Word s(w.begin() + hit.start, w.begin() + hit.start + hit.length);
    Word repl = complement_inverse(m, s, hit.family);
    Word next(w.begin(), w.begin() + hit.start);
    next.insert(next.end(), repl.begin(), repl.end());
    next.insert(next.end(), w.begin() + hit.start + hit.length, w.end());
    w = std::move(next);
  }
}

Word cyclic_dehn_reduce(const SplittingModel& m, Word w) {
  const int g = m.genus();
  const int threshold = 2 * g + 1;
  const int cap = 4 * g;
  for (;;) {
    w = cyclic_free_reduce(std::move(w));
    const int n = static_cast<int>(w.size());
    if (n == 0) return w;
    // Scan the cyclic word with enough unrolling to see every wrapped window.
    // Runs longer than n would force relator_succ to have period n, which the
    // single 4g-cycle excludes for n not a multiple of 4g; the cap handles
    // relator-power degeneracies.
    const int len = n + std::min(n, cap) + threshold;
    RunHit hit = find_run(m, len, threshold, std::min(cap, n), [&](int i) { return w[i % n]; });
    if (hit.length == 0) return w;
    Word rot = rotated(w, hit.start % n);
    Word s(rot.begin(), rot.begin() + hit.length);
    Word repl = complement_inverse(m, s, hit.family);
    Word next = repl;
    next.insert(next.end(), rot.begin() + hit.length, rot.end());
    w = std::move(next);
  }
}

bool is_trivial_in_surface_group(const SplittingModel& m, const Word& w) {
  return dehn_reduce(m, w).empty();
}

bool is_cyclic_geodesic(const SplittingModel& m, const Word& w) {
  if (w.empty()) return false;
  if (cyclic_free_reduce(w) != w) return false;
  const int n = static_cast<int>(w.size());
  const int threshold = 2 * m.genus() + 1;
  const int len = n + threshold;
  RunHit hit = find_run(m, len, threshold, threshold, [&](int i) { return w[i % n]; });
  return hit.length == 0;
}

std::vector<int> homology_vector(const SplittingModel& m, const Word& w) {
  const int g = m.genus();
  std::vector<int> h(2 * g, 0);
  for (Letter x : w) {
    const int gi = generator_index(x);           // 0=a1, 1=b1, 2=a2, ...
    const int slot = (gi % 2 == 0) ? gi / 2 : g + gi / 2;
    h[slot] += is_inverse_letter(x) ? -1 : 1;
  }
  return h;
}

long homology_pairing(const SplittingModel& m, const std::vector<int>& x,
                      const std::vector<int>& y) {
  const int g = m.genus();
  long s = 0;
  for (int i = 0; i < g; ++i)
    s += static_cast<long>(x[i]) * y[g + i] - static_cast<long>(x[g + i]) * y[i];
  return s;
}

Word image_in_handlebody(const SplittingModel& m, const Word& w, Side side,
                         bool cyclic) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    const bool is_a = generator_index(x) % 2 == 0;
    if ((side == Side::V && is_a) || (side == Side::W && !is_a)) out.push_back(x);
  }
  return cyclic ? cyclic_free_reduce(std::move(out)) : free_reduce(std::move(out));
}

}  // namespace hg
