#include <cstdlib>
#include <random>

#include "doctest.h"
#include "hg/diag.h"
#include "hg/kernel.h"
#include "test_util.h"

using namespace hg;

namespace {

struct Fixture {
  SplittingModel m;
  ClassCache cache;
  IntersectionKernel kernel;
  explicit Fixture(int g) : m(g), cache(m), kernel(cache) {}
  long i(const std::string& u, const std::string& v) {
    return kernel.geometric_intersection(m.parse(u), m.parse(v));
  }
  long si(const std::string& u) { return kernel.self_intersection(m.parse(u)); }
};

}  // namespace

TEST_CASE("standard curve pairs at genus 2") {
  Fixture f(2);
  CHECK(f.i("a1", "b1") == 1);
  CHECK(f.i("a2", "b2") == 1);
  CHECK(f.i("a1", "a2") == 0);
  CHECK(f.i("a1", "b2") == 0);
  CHECK(f.i("b1", "b2") == 0);
  CHECK(f.i("a1", "a1") == 0);  // same class: twice the self-intersection

  // Curves on the first handle behave like torus slope pairs.
  CHECK(f.i("a1 b1", "a1") == 1);
  CHECK(f.i("a1 b1", "b1") == 1);
  CHECK(f.i("a1 b1", "a2") == 0);

  // The genus-1 splitting circle is disjoint from curves of either side.
  CHECK(f.i("a1 b1 A1 B1", "a1") == 0);
  CHECK(f.i("a1 b1 A1 B1", "b1") == 0);
  CHECK(f.i("a1 b1 A1 B1", "a2") == 0);
  // ...but a curve running through both handles crosses it twice.
  CHECK(f.i("a1 b1 A1 B1", "a1 a2") == 2);
  CHECK(f.i("a1 b1 A1 B1", "b1 b2") == 2);
}

TEST_CASE("standard curve pairs at genus 3") {
  Fixture f(3);
  CHECK(f.i("a1", "b1") == 1);
  CHECK(f.i("a3", "b3") == 1);
  CHECK(f.i("a1", "b3") == 0);
  CHECK(f.i("a1 b1 A1 B1", "a2 b2 A2 B2") == 0);
  CHECK(f.i("a1 b1 A1 B1", "a3") == 0);
  CHECK(f.i("a1 b1 A1 B1", "a1 a2") == 2);
  CHECK(f.i("a1 b1 A1 B1", "a1 a3") == 2);
}

TEST_CASE("self-intersections and simplicity") {
  Fixture f(2);
  CHECK(f.si("a1") == 0);
  CHECK(f.si("b2") == 0);
  CHECK(f.si("a1 b1") == 0);
  CHECK(f.si("a1 b1 A1 B1") == 0);
  CHECK(f.si("a1 a1") == 1);
  CHECK(f.si("a1 a1 a1") == 2);
  CHECK(f.si("a1 b1 A1 b1") == 1);  // two parallel strands with one clasp
  CHECK(f.si("a1 b1 b1") == 0);     // primitive in the handle group, so simple

  // With the one-vertex octagon structure the handle germs interleave around
  // the vertex, so orientation matters for cross-handle products: one of each
  // pair below is embeddable, the other has an essential crossing.
  CHECK(f.si("a1 a2") == 0);
  CHECK(f.si("a1 A2") == 1);
  CHECK(f.si("a1 B2") == 0);
  CHECK(f.si("a1 b2") == 1);

  CHECK(f.i("a1 a1", "b1") == 2);
  CHECK(f.i("a1 a1", "a1") == 0);      // powers of one root are parallel
  CHECK(f.i("a1 a1", "a1 a1") == 2);   // i(c,c) = 2 si(c)
  CHECK(f.i("a1 b1 A1 b1", "a1 b1 A1 b1") == 2);
}

TEST_CASE("kernel respects class structure") {
  std::mt19937 rng(81202);
  for (int g : {2, 3}) {
    Fixture f(g);
    for (int t = 0; t < 25; ++t) {
      Word u = hgtest::random_essential_word(rng, f.m, 1 + t % 6);
      Word v = hgtest::random_essential_word(rng, f.m, 1 + (t / 2) % 6);
      const long base = f.kernel.geometric_intersection(u, v);

      // Symmetry and conjugation invariance.
      CHECK(f.kernel.geometric_intersection(v, u) == base);
      Word c = hgtest::random_word(rng, f.m, 2);
      Word conj = concat(concat(c, v), inverse_word(c));
      CHECK(f.kernel.geometric_intersection(u, conj) == base);
      CHECK(f.kernel.geometric_intersection(u, inverse_word(v)) == base);

      // Homology gives a lower bound.
      const long alg = homology_pairing(
          f.m, homology_vector(f.m, cyclic_dehn_reduce(f.m, u)),
          homology_vector(f.m, cyclic_dehn_reduce(f.m, v)));
      CHECK(base >= std::abs(alg));

      // Power multiplicativity (skip accidental same-root pairs).
      if (f.cache.analyze(u).root_key != f.cache.analyze(v).root_key) {
        CHECK(f.kernel.geometric_intersection(power(u, 2), v) == 2 * base);
        CHECK(f.kernel.geometric_intersection(power(u, 2), power(v, 3)) == 6 * base);
      }
    }
  }
}

TEST_CASE("minimal position crossing records") {
  Fixture f(2);
  MinimalPosition mp = f.kernel.minimal_position(f.m.parse("a1"), f.m.parse("b1"));
  REQUIRE(mp.crossings.size() == 1);
  CHECK(mp.a == f.m.parse("a1"));
  CHECK(mp.b == f.m.parse("b1"));
  CHECK(mp.crossings[0].pos_a == 0);
  CHECK(mp.crossings[0].pos_b == 0);
  CHECK(mp.crossings[0].sign == 1);

  MinimalPosition tp = f.kernel.minimal_position(f.m.parse("b1"), f.m.parse("a1"));
  REQUIRE(tp.crossings.size() == 1);
  CHECK(tp.crossings[0].sign == -1);

  std::mt19937 rng(5150);
  for (int t = 0; t < 15; ++t) {
    Word u = hgtest::random_essential_word(rng, f.m, 1 + t % 5);
    Word v = hgtest::random_essential_word(rng, f.m, 1 + (t / 3) % 5);
    const ConjClass& cu = f.cache.analyze(u);
    const ConjClass& cv = f.cache.analyze(v);
    if (cu.exponent != 1 || cv.exponent != 1 || cu.class_key == cv.class_key) continue;
    MinimalPosition ab = f.kernel.minimal_position(u, v);
    MinimalPosition ba = f.kernel.minimal_position(v, u);
    CHECK(ab.crossings.size() ==
          static_cast<std::size_t>(f.kernel.geometric_intersection(u, v)));
    CHECK(ab.crossings.size() == ba.crossings.size());
    long signs = 0;
    for (const Crossing& c : ab.crossings) {
      signs += c.sign;
      CHECK(c.pos_a >= 0);
      CHECK(c.pos_a < static_cast<int>(ab.a.size()));
      CHECK(c.pos_b >= 0);
      CHECK(c.pos_b < static_cast<int>(ab.b.size()));
    }
    CHECK(signs == homology_pairing(f.m, homology_vector(f.m, ab.a),
                                    homology_vector(f.m, ab.b)));
  }

  CHECK_THROWS_AS(f.kernel.minimal_position(f.m.parse("a1"), f.m.parse("a1")), input_error);
  CHECK_THROWS_AS(f.kernel.minimal_position(f.m.parse("a1 a1"), f.m.parse("b1")), input_error);
}
