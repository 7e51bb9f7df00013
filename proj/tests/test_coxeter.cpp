#include <random>

#include "doctest.h"
#include "gridforge/coxeter.hpp"
#include "gridforge/error.hpp"
#include "gridforge/lattice.hpp"

using namespace gridforge;
using coxeter::CosetKey;
using coxeter::CoxeterSystem;
using coxeter::GroupElem;

namespace {

std::vector<int> random_word(std::mt19937_64& rng, int rank, int len) {
  std::vector<int> w(len);
  for (auto& x : w) x = static_cast<int>(rng() % rank);
  return w;
}

// Affine reflections of the cubic honeycomb of Z^n in doubled coordinates:
// r0 is x -> 2 - x, r_i swaps axes i-1 and i, r_n negates the last axis.
// They fix the base flag (0..0) < (1,0..0) < ... < (1..1) except for one cell each.
std::vector<int> reflect(int s, int n, std::vector<int> p) {
  if (s == 0) {
    p[0] = 2 - p[0];
  } else if (s == n) {
    p[n - 1] = -p[n - 1];
  } else {
    std::swap(p[s - 1], p[s]);
  }
  return p;
}

lattice::CellKey affine_image(const std::vector<int>& word, int n, int k) {
  std::vector<int> p(n, 0);
  for (int a = 0; a < k; ++a) p[a] = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = reflect(*it, n, p);
  return lattice::CellKey(p);
}

}  // namespace

TEST_CASE("geometry of the honeycombs") {
  CHECK(CoxeterSystem::parse("{4,4}").geometry() == coxeter::Geometry::Euclidean);
  CHECK(CoxeterSystem::parse("{4,3,4}").geometry() == coxeter::Geometry::Euclidean);
  CHECK(CoxeterSystem::parse("[4,3,5]").geometry() == coxeter::Geometry::Hyperbolic);
  CHECK(CoxeterSystem::parse("4,3,3,4").geometry() == coxeter::Geometry::Euclidean);
  CHECK(CoxeterSystem::parse("{4,3,3,5}").geometry() == coxeter::Geometry::Hyperbolic);
  CHECK(CoxeterSystem::parse("{4,3}").geometry() == coxeter::Geometry::Spherical);
  CHECK_THROWS_AS(CoxeterSystem::parse("{4,x}"), InvalidArgument);
  CHECK_THROWS_AS(CoxeterSystem::parse("{4,7}"), InvalidArgument);
}

TEST_CASE("generators are involutions with the right pair orders") {
  for (const char* tag : {"{4,4}", "{4,3,5}", "{4,3,3,5}"}) {
    const auto sys = CoxeterSystem::parse(tag);
    for (int i = 0; i < sys.rank(); ++i) {
      CHECK((sys.generator(i) * sys.generator(i)).is_identity());
      for (int j = i + 1; j < sys.rank(); ++j) {
        GroupElem p = sys.generator(i) * sys.generator(j), q = p;
        int order = 1;
        while (!q.is_identity() && order < 20) {
          q = q * p;
          ++order;
        }
        CHECK(order == sys.m(i, j));
      }
    }
  }
}

TEST_CASE("random words preserve the Tits form") {
  std::mt19937_64 rng(99);
  for (const char* tag : {"{4,3,5}", "{4,3,3,5}", "{4,3,4}"}) {
    const auto sys = CoxeterSystem::parse(tag);
    const auto& b = sys.gram();
    for (int t = 0; t < 1000; ++t) {
      const auto w = sys.word(random_word(rng, sys.rank(), 1 + static_cast<int>(rng() % 12)));
      REQUIRE(w.matrix().transpose() * b * w.matrix() == b);
    }
  }
}

TEST_CASE("column update agrees with matrix product, inverse is exact") {
  std::mt19937_64 rng(3);
  const auto sys = CoxeterSystem::parse("{4,3,5}");
  for (int t = 0; t < 200; ++t) {
    const auto w = sys.word(random_word(rng, 4, 10));
    const int s = static_cast<int>(rng() % 4);
    CHECK(sys.times_generator(w, s) == w * sys.generator(s));
    CHECK((w * sys.inverse(w)).is_identity());
  }
}

TEST_CASE("parabolic subgroup orders") {
  const auto s435 = CoxeterSystem::parse("{4,3,5}");
  CHECK(s435.parabolic_order(s435.cell_mask(3)) == 48);   // [4,3]
  CHECK(s435.parabolic_order(s435.cell_mask(0)) == 120);  // [3,5]
  CHECK(s435.parabolic_order(s435.cell_mask(1)) == 20);   // A1 x I2(5)
  const auto s4335 = CoxeterSystem::parse("{4,3,3,5}");
  CHECK(s4335.parabolic_order(s4335.cell_mask(4)) == 384);  // [4,3,3]
  const auto s44 = CoxeterSystem::parse("{4,4}");
  CHECK(s44.parabolic_order(s44.cell_mask(2)) == 8);
}

TEST_CASE("infinite or oversized parabolics raise") {
  const auto sys = CoxeterSystem::parse("{4,3,3,5}");
  const auto old = coxeter::enumeration_cap();
  coxeter::set_enumeration_cap(1000);
  CHECK_THROWS_AS(sys.enumerate_parabolic(sys.cell_mask(0)), EnumerationLimitError);
  coxeter::set_enumeration_cap(old);
  CHECK(sys.is_finite(sys.cell_mask(0)));
  CHECK_FALSE(sys.is_finite(sys.full_mask()));
  CHECK_THROWS_AS(sys.enumerate_parabolic(sys.full_mask()), EnumerationLimitError);
  const auto euclid = CoxeterSystem::parse("{4,3,4}");
  CHECK_FALSE(euclid.is_finite(euclid.full_mask()));
  CHECK(euclid.is_finite(euclid.cell_mask(1)));
}

TEST_CASE("coset keys induce the same partition as the lexicographic oracle") {
  std::mt19937_64 rng(17);
  for (const char* tag : {"{4,3,5}", "{4,3,4}"}) {
    const auto sys = CoxeterSystem::parse(tag);
    for (int k = 0; k < sys.rank(); ++k) {
      const auto mask = sys.cell_mask(k);
      const auto sub = sys.enumerate_parabolic(mask);
      for (int t = 0; t < 40; ++t) {
        const auto w = sys.word(random_word(rng, sys.rank(), 8));
        const auto key = sys.coset_key(w, mask);
        const auto lex = sys.lex_min_key(w, mask);
        // every element of the coset gets the same key under both rules
        for (std::size_t i = 0; i < sub->size(); i += 1 + sub->size() / 12) {
          const auto u = w * (*sub)[i];
          CHECK(sys.coset_key(u, mask) == key);
          CHECK(sys.lex_min_key(u, mask) == lex);
        }
        // the minimal representative lies in the coset
        CHECK(sys.lex_min_key(key.rep, mask) == lex);
        // and a coset through a different k-neighbour has a different key
        const auto v = sys.times_generator(w, k);
        CHECK((sys.coset_key(v, mask) == key) == (sys.lex_min_key(v, mask) == lex));
      }
    }
  }
}

TEST_CASE("{4,3,4} and {4,3,3,4} agree with the cubic lattice") {
  std::mt19937_64 rng(41);
  for (int n : {3, 4}) {
    const auto sys = CoxeterSystem::parse(n == 3 ? "{4,3,4}" : "{4,3,3,4}");
    std::map<CosetKey, lattice::CellKey> to_cell;
    std::map<lattice::CellKey, CosetKey> to_key;
    for (int t = 0; t < 400; ++t) {
      const auto word = random_word(rng, n + 1, 1 + static_cast<int>(rng() % 10));
      const auto w = sys.word(word);
      for (int k = 0; k <= n; ++k) {
        const auto key = sys.cell(k, w);
        const auto cell = affine_image(word, n, k);
        REQUIRE(lattice::cell_dim(cell) == k);
        REQUIRE(sys.cell_dim(key) == k);
        auto [it, fresh] = to_cell.emplace(key, cell);
        CHECK(it->second == cell);
        auto [jt, fresh2] = to_key.emplace(cell, key);
        CHECK(jt->second == key);
      }
      if (t >= 30) continue;
      // faces of the cube w P_n map onto lattice faces, and neighbours across them
      const auto cube = sys.cell(n, w);
      const auto lcube = affine_image(word, n, n);
      for (int d = 0; d < n; ++d) {
        const auto fs = sys.cell_faces(cube, d);
        CHECK(fs.size() == lattice::faces(lcube, d).size());
      }
      for (const auto& f : sys.cell_faces(cube, n - 1)) {
        const auto other = sys.neighbor(cube, f);
        CHECK(other != cube);
        CHECK(sys.neighbor(other, f) == cube);
        // representative words are unknown here, so compare through incidence instead
        CHECK(sys.is_incident(f, other));
      }
    }
    // neighbour oracle on cells whose word is known: w and w r_n
    for (int t = 0; t < 100; ++t) {
      auto word = random_word(rng, n + 1, 1 + static_cast<int>(rng() % 10));
      const auto w = sys.word(word);
      const auto face = sys.cell(n - 1, w);
      const auto cube = sys.cell(n, w);
      auto wn = word;
      wn.push_back(n);
      const auto lc = affine_image(word, n, n);
      const auto lf = affine_image(word, n, n - 1);
      std::vector<int> opposite(n);
      for (int a = 0; a < n; ++a) opposite[a] = 2 * lf[a] - lc[a];
      CHECK(affine_image(wn, n, n) == lattice::CellKey(opposite));
      const auto nb = sys.neighbor(cube, face);
      CHECK(nb == sys.cell(n, sys.word(wn)));
    }
  }
}

TEST_CASE("square corners are the vertices of the square in cyclic order") {
  const auto sys = CoxeterSystem::parse("{4,3,5}");
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto sq = sys.cell(2, sys.word(random_word(rng, 4, 9)));
    const auto corners = sys.square_corners(sq);
    auto sorted = corners;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == sys.cell_faces(sq, 0));
    const auto edges = sys.cell_faces(sq, 1);
    for (int i = 0; i < 4; ++i) {
      int shared = 0;
      for (const auto& e : edges) shared += sys.is_incident(corners[i], e) && sys.is_incident(corners[(i + 1) % 4], e);
      CHECK(shared == 1);
    }
  }
}

TEST_CASE("incidence counts satisfy flag double counting") {
  const auto sys = CoxeterSystem::parse("{4,3,5}");
  const auto c = sys.incidence_counts();
  CHECK(c.at({3, 0}) == 8);
  CHECK(c.at({3, 2}) == 6);
  CHECK(c.at({2, 3}) == 2);
  CHECK(c.at({0, 3}) == 20);
  // flags (v, e, C) through a vertex, counted from both ends; a cube has 3 edges and 3 squares at a vertex
  CHECK(c.at({0, 1}) * c.at({1, 3}) == c.at({0, 3}) * 3);
  CHECK(c.at({0, 2}) * c.at({2, 3}) == c.at({0, 3}) * 3);
}
