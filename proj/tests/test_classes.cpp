#include <functional>
#include <random>

#include "doctest.h"
#include "hg/classes.h"
#include "hg/diag.h"
#include "hg/model.h"
#include "hg/word.h"
#include "test_util.h"

using namespace hg;

namespace {

// Brute-force oriented-conjugacy witness search over all reduced conjugators
// of length <= max_len. Sound both ways within its radius.
bool finds_conjugator(const SplittingModel& m, const Word& u, const Word& v, int max_len) {
  bool found = false;
  Word x;
  std::function<void()> go = [&]() {
    if (found) return;
    Word cand = concat(concat(x, u), concat(inverse_word(x), inverse_word(v)));
    if (is_trivial_in_surface_group(m, cand)) {
      found = true;
      return;
    }
    if (static_cast<int>(x.size()) == max_len) return;
    for (int l = 0; l < m.alphabet_size() && !found; ++l) {
      if (!x.empty() && x.back() == inverse(Letter(l))) continue;
      x.push_back(Letter(l));
      go();
      x.pop_back();
    }
  };
  go();
  return found;
}

Word random_conjugate(std::mt19937& rng, const SplittingModel& m, const Word& w) {
  Word c = hgtest::random_word(rng, m, 1 + int(rng() % 4));
  return concat(concat(c, w), inverse_word(c));
}

}  // namespace

TEST_CASE("class keys are conjugation- and inversion-invariant") {
  std::mt19937 rng(90211);
  for (int g : {2, 3}) {
    SplittingModel m(g);
    ClassCache cache(m);
    const int cases = g == 2 ? 80 : 40;
    for (int t = 0; t < cases; ++t) {
      Word w = hgtest::random_essential_word(rng, m, 2 + t % 9);
      const ConjClass& base = cache.analyze(w);
      CHECK(cache.analyze(random_conjugate(rng, m, w)).class_key == base.class_key);
      CHECK(cache.analyze(inverse_word(w)).class_key == base.class_key);
      CHECK(cache.analyze(rotated(cyclic_dehn_reduce(m, w), 1 + t % 3)).class_key ==
            base.class_key);
      // The key is itself a minimal representative of the class.
      CHECK(base.class_key.size() == static_cast<std::size_t>(base.min_length));
      CHECK(static_cast<int>(cyclic_dehn_reduce(m, base.class_key).size()) == base.min_length);
    }
  }
}

TEST_CASE("same_class agrees with brute-force conjugacy on short words") {
  SplittingModel m(2);
  ClassCache cache(m);
  std::mt19937 rng(4407);
  int positives = 0, negatives = 0;
  for (int t = 0; t < 60; ++t) {
    Word u = hgtest::random_essential_word(rng, m, 2 + t % 4);
    Word v = hgtest::random_essential_word(rng, m, 2 + (t / 2) % 4);
    const bool brute = finds_conjugator(m, u, v, 4) ||
                       finds_conjugator(m, u, inverse_word(v), 4);
    if (brute) {
      CHECK(cache.same_class(u, v));
      ++positives;
    } else if (!cache.same_class(u, v)) {
      ++negatives;  // consistent; conjugators longer than 4 stay undecided
    } else {
      // same_class claims conjugacy the brute search missed: demand that the
      // class keys coincide, which carries an explicit band-move derivation.
      CHECK(cache.analyze(u).class_key == cache.analyze(v).class_key);
    }
  }
  CHECK(positives + negatives > 40);
}

TEST_CASE("relator identities merge commutator classes at genus 2 only") {
  SplittingModel m2(2);
  ClassCache c2(m2);
  // [a1,b1][a2,b2] = 1, so the two commutators are inverse to each other.
  CHECK(c2.same_class(m2.parse("a1 b1 A1 B1"), m2.parse("a2 b2 A2 B2")));
  CHECK(c2.analyze(m2.parse("a2 b2 A2 B2")).class_key == m2.parse("a1 b1 A1 B1"));

  SplittingModel m3(3);
  ClassCache c3(m3);
  CHECK(!c3.same_class(m3.parse("a1 b1 A1 B1"), m3.parse("a2 b2 A2 B2")));
  CHECK(!c3.same_class(m3.parse("a1 b1 A1 B1"), m3.parse("a3 b3 A3 B3")));
}

TEST_CASE("same_class separates words with different homology") {
  SplittingModel m(2);
  ClassCache cache(m);
  std::mt19937 rng(3314);
  int checked = 0;
  for (int t = 0; t < 120 && checked < 60; ++t) {
    Word u = hgtest::random_essential_word(rng, m, 2 + t % 8);
    Word v = hgtest::random_essential_word(rng, m, 2 + (t / 3) % 8);
    auto hu = homology_vector(m, u);
    auto hv = homology_vector(m, v);
    auto neg = hv;
    for (int& x : neg) x = -x;
    if (hu == hv || hu == neg) continue;  // unoriented classes compare up to sign
    CHECK(!cache.same_class(u, v));
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("primitive roots and exponents") {
  for (int g : {2, 3}) {
    SplittingModel m(g);
    ClassCache cache(m);

    CHECK(cache.analyze(m.parse("a1")).exponent == 1);
    CHECK(cache.analyze(m.parse("a1 a1")).exponent == 2);
    CHECK(cache.analyze(m.parse("a1 a1")).root_key == m.parse("a1"));
    CHECK(cache.analyze(m.parse("a1 b1 A1 B1")).exponent == 1);

    std::mt19937 rng(606 + g);
    for (int t = 0; t < 12; ++t) {
      Word r = hgtest::random_essential_word(rng, m, 2 + t % 5);
      const ConjClass& base = cache.analyze(r);
      if (base.exponent != 1) continue;  // rare: drawn a proper power
      for (int k : {2, 3}) {
        const ConjClass& pk = cache.analyze(power(r, k));
        CHECK(pk.exponent == k);
        CHECK(pk.root_key == base.class_key);
        CHECK(pk.min_length == k * base.min_length);
      }
    }
    // A conjugated power is still recognized.
    Word w = concat(concat(m.parse("b2 a1"), power(m.parse("a1 b2"), 3)),
                    m.parse("A1 B2"));
    const ConjClass& cc = cache.analyze(w);
    CHECK(cc.exponent == 3);
    CHECK(cc.root_key == cache.analyze(m.parse("a1 b2")).class_key);
  }
}

TEST_CASE("band moves preserve homology and conjugacy") {
  SplittingModel m(2);
  std::mt19937 rng(7718);
  for (int t = 0; t < 30; ++t) {
    Word w = hgtest::random_essential_word(rng, m, 3 + t % 5);
    Word wc = cyclic_dehn_reduce(m, w);
    for (const Word& target : band_move_targets(m, wc)) {
      CHECK(homology_vector(m, target) == homology_vector(m, wc));
      if (target.size() <= 8) {
        CHECK(finds_conjugator(m, wc, target, 5));
      }
    }
  }
}

TEST_CASE("trivial words are rejected") {
  SplittingModel m(2);
  ClassCache cache(m);
  CHECK_THROWS_AS(cache.analyze(m.parse("a1 A1")), input_error);
  CHECK_THROWS_AS(cache.analyze(m.relator()), input_error);
}
