// Agreement suite: the combinatorial intersection kernel against the
// hyperbolic interval-arithmetic oracle. The two count crossings by entirely
// different means (vertex germ combinatorics vs certified axis geometry), so
// agreement over hand values and random classes is strong evidence for both.

#include <cstdio>
#include <random>
#include <string>

#include "doctest.h"
#include "hg/classes.h"
#include "hg/kernel.h"
#include "hg/model.h"
#include "hg/word.h"
#include "hyperbolic_oracle.h"
#include "test_util.h"

namespace {

struct Rig {
  hg::SplittingModel m;
  hg::ClassCache cache;
  hg::IntersectionKernel kernel;
  hgtest::HyperbolicOracle oracle;

  explicit Rig(int genus) : m(genus), cache(m), kernel(cache), oracle(m) {}

  hg::Word w(const std::string& s) const { return m.parse(s); }

  // Oracle value, requiring conclusiveness.
  long oi(const std::string& u, const std::string& v) {
    auto out = oracle.intersection(w(u), w(v));
    INFO("intersection(", u, ", ", v, "): ", out.note);
    REQUIRE(out.conclusive);
    return out.value;
  }
  long osi(const std::string& u) {
    auto out = oracle.self_intersection(w(u));
    INFO("self_intersection(", u, "): ", out.note);
    REQUIRE(out.conclusive);
    return out.value;
  }
};

}  // namespace

TEST_CASE("oracle reproduces hand values at genus 2") {
  Rig r(2);

  // Dual handle curves cross once; curves of different handles are disjoint.
  CHECK(r.oi("a1", "b1") == 1);
  CHECK(r.oi("a1", "a2") == 0);
  CHECK(r.oi("a1", "b2") == 0);
  CHECK(r.oi("b1", "b2") == 0);

  // Torus slopes within one handle.
  CHECK(r.oi("a1 b1", "a1") == 1);
  CHECK(r.oi("a1 b1", "b1") == 1);

  // The genus-one circle [a1,b1] misses both of its own handle curves and
  // meets a cross-handle slope twice.
  CHECK(r.oi("a1 b1 A1 B1", "a1") == 0);
  CHECK(r.oi("a1 b1 A1 B1", "b1") == 0);
  CHECK(r.oi("a1 b1 A1 B1", "a2") == 0);
  CHECK(r.oi("a1 b1 A1 B1", "a1 a2") == 2);

  // Simple classes.
  CHECK(r.osi("a1") == 0);
  CHECK(r.osi("a1 b1") == 0);
  CHECK(r.osi("a1 b1 b1") == 0);

  // The cross-handle quartet: the vertex germ order interleaves the handles,
  // so orientation of the second handle decides simplicity.
  CHECK(r.osi("a1 a2") == 0);
  CHECK(r.osi("a1 b2") == 1);
  CHECK(r.osi("a1 B2") == 0);

  // The remaining quartet member is the cheapest nontrivial self-crossing;
  // pin that the truncated quick ladder already resolves it.
  {
    auto out =
        r.oracle.self_intersection(r.w("a1 A2"), hgtest::OracleEffort::kQuick);
    CHECK(out.conclusive);
    CHECK(out.value == 1);
  }

  // A non-simple class within one handle.
  CHECK(r.osi("a1 b1 A1 b1") == 1);
}

TEST_CASE("oracle reproduces hand values at genus 3") {
  Rig r(3);

  CHECK(r.oi("a1", "b1") == 1);
  CHECK(r.oi("a2", "b2") == 1);
  CHECK(r.oi("a1", "a3") == 0);
  CHECK(r.oi("a1 b1 A1 B1", "a2 b2 A2 B2") == 0);
  CHECK(r.oi("a1 b1 A1 B1", "a1 a3") == 2);
  CHECK(r.osi("a1 b1") == 0);
}

namespace {

// Draw random essential words, reduce to primitive roots, and compare both
// engines. Same-class draws fall back to the self-intersection comparison.
void random_agreement(int genus, int pair_goal, int self_goal, unsigned seed) {
  Rig r(genus);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(4, 12);

  int pairs_done = 0, selves_done = 0, inconclusive = 0, draws = 0;
  while ((pairs_done < pair_goal || selves_done < self_goal) && draws < 600) {
    ++draws;
    hg::Word u = hgtest::random_essential_word(rng, r.m, len(rng));
    const auto& cu = r.cache.analyze(u);

    if (selves_done < self_goal) {
      std::fprintf(stderr, "[draw %d] self %s\n", draws,
                   r.m.print(cu.root_geodesic).c_str());
      auto out = r.oracle.self_intersection(cu.root_geodesic);
      if (out.conclusive) {
        INFO("self word: ", r.m.print(cu.root_geodesic));
        CHECK(out.value == r.kernel.self_intersection(cu.root_geodesic));
        ++selves_done;
      } else {
        ++inconclusive;
      }
    }

    if (pairs_done < pair_goal) {
      hg::Word v = hgtest::random_essential_word(rng, r.m, len(rng));
      const auto& cv = r.cache.analyze(v);
      if (cu.root_key == cv.root_key) continue;
      std::fprintf(stderr, "[draw %d] pair %s / %s\n", draws,
                   r.m.print(cu.root_geodesic).c_str(),
                   r.m.print(cv.root_geodesic).c_str());
      auto out = r.oracle.intersection(cu.root_geodesic, cv.root_geodesic);
      if (out.conclusive) {
        INFO("pair: ", r.m.print(cu.root_geodesic), " / ",
             r.m.print(cv.root_geodesic));
        CHECK(out.value == r.kernel.geometric_intersection(cu.root_geodesic,
                                                           cv.root_geodesic));
        ++pairs_done;
      } else {
        ++inconclusive;
      }
    }
    if (draws % 10 == 0) {
      std::fprintf(stderr,
                   "[oracle agreement] genus %d: %d/%d pairs, %d/%d selves, "
                   "%d inconclusive, %d draws\n",
                   genus, pairs_done, pair_goal, selves_done, self_goal,
                   inconclusive, draws);
    }
  }
  std::fprintf(stderr,
               "[oracle agreement] genus %d done: %d pairs, %d selves, %d "
               "inconclusive, %d draws\n",
               genus, pairs_done, selves_done, inconclusive, draws);
  INFO("inconclusive draws: ", inconclusive);
  CHECK(pairs_done >= pair_goal);
  CHECK(selves_done >= self_goal);
}

}  // namespace

TEST_CASE("oracle agrees with the kernel on random classes, genus 2") {
  random_agreement(2, 40, 20, 0xacc1u);
}

TEST_CASE("oracle agrees with the kernel on random classes, genus 3") {
  random_agreement(3, 30, 15, 0xacc2u);
}
