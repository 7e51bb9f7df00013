#include <random>

#include "doctest.h"
#include "gridforge/constructors.hpp"
#include "gridforge/error.hpp"
#include "gridforge/signature.hpp"
#include "gridforge/surface.hpp"
#include "oracles.hpp"

using namespace gridforge;
using lattice::CellKey;
using surface::AbstractSquareComplex;

namespace {

AbstractSquareComplex grid(int w, int h) {
  AbstractSquareComplex c;
  for (int j = 0; j <= h; ++j)
    for (int i = 0; i <= w; ++i) c.add_vertex(std::to_string(i) + "," + std::to_string(j));
  auto id = [w](int i, int j) { return j * (w + 1) + i; };
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) c.add_square({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
  return c;
}

// w x 1 strip with its ends glued after a half twist
AbstractSquareComplex moebius(int w) {
  AbstractSquareComplex c;
  for (int i = 0; i < w; ++i) {
    c.add_vertex("b" + std::to_string(i));
    c.add_vertex("t" + std::to_string(i));
  }
  for (int i = 0; i < w; ++i) {
    const int b0 = 2 * i, t0 = 2 * i + 1;
    const bool last = i + 1 == w;
    const int b1 = last ? 1 : 2 * (i + 1);
    const int t1 = last ? 0 : 2 * (i + 1) + 1;
    c.add_square({b0, b1, t1, t0});
  }
  return c;
}

}  // namespace

TEST_CASE("empty complex is a vacuous manifold") {
  const auto r = surface::validate(AbstractSquareComplex{});
  CHECK(r.is_manifold);
  CHECK(r.components == 0);
  CHECK(r.euler == 0);
}

TEST_CASE("square complex rejects degenerate and duplicate squares") {
  AbstractSquareComplex c;
  for (const char* v : {"a", "b", "c", "d"}) c.add_vertex(v);
  CHECK_THROWS_AS(c.add_square({0, 1, 1, 2}), InvalidArgument);
  c.add_square({0, 1, 2, 3});
  CHECK_THROWS_AS(c.add_square({2, 1, 0, 3}), InvalidArgument);
  CHECK(c.find_square({1, 2, 3, 0}) == 0);
  CHECK(c.find_square({0, 2, 1, 3}) == -1);
}

TEST_CASE("three squares on one edge are reported") {
  lattice::GriddedComplex t;
  t.squares = {CellKey{1, 1, 0}, CellKey{1, 0, 1}, CellKey{1, 2, 1}};
  t.squares.insert(CellKey{1, -1, 0});
  const auto r = surface::validate(surface::to_abstract(t));
  CHECK_FALSE(r.is_manifold);
  bool named = false;
  for (const auto& s : r.issues)
    named = named || (s.find("(0,0,0)") != std::string::npos && s.find("(2,0,0)") != std::string::npos && s.find("3 squares") != std::string::npos);
  CHECK(named);
  CHECK_THROWS_AS(surface::orientability(surface::to_abstract(t)), NonManifoldError);
}

TEST_CASE("two squares meeting at a vertex are not a manifold") {
  lattice::GriddedComplex t;
  t.squares = {CellKey{1, 1, 0}, CellKey{3, 3, 0}};
  const auto r = surface::validate(surface::to_abstract(t));
  CHECK_FALSE(r.is_manifold);
}

TEST_CASE("disk, annulus, Moebius band") {
  const auto disk = surface::classify_compact(grid(3, 2));
  CHECK(disk.euler == 1);
  CHECK(disk.boundary_circles == 1);
  CHECK(disk.orientable);
  CHECK(disk.class_name == "orientable genus 0, 1 boundary circle");

  const auto m = moebius(5);
  const auto mr = surface::classify_compact(m);
  CHECK(mr.euler == 0);
  CHECK_FALSE(mr.orientable);
  CHECK(mr.boundary_circles == 1);
  CHECK(mr.genus_or_crosscaps == 1);
  const auto o = surface::orientability(m);
  CHECK(o.odd_cycle.size() >= 2);
  CHECK(surface::boundary_components(m).circles.at(0).size() == 10);
}

TEST_CASE("disconnected complexes are validated but not classified") {
  auto two = constructors::sphere_cube();
  for (const auto& k : constructors::sphere_cube().squares) two.squares.insert(lattice::translate(k, {5, 0, 0}));
  const auto cx = surface::to_abstract(two);
  const auto r = surface::validate(cx);
  CHECK(r.is_manifold);
  CHECK(r.components == 2);
  CHECK(r.component_classes.size() == 2);
  CHECK_THROWS_AS(surface::classify_compact(cx), InvalidArgument);
}

TEST_CASE("class names") {
  CHECK(surface::class_name(true, 2, 0) == "orientable genus 0");
  CHECK(surface::class_name(true, -2, 0) == "orientable genus 2");
  CHECK(surface::class_name(false, 1, 0) == "nonorientable, 1 crosscap");
  CHECK(surface::class_name(false, -1, 2) == "nonorientable, 1 crosscap, 2 boundary circles");
}

TEST_CASE("embedded sum of two cubes gives 14 squares and a sphere") {
  const auto s = constructors::sphere_cube();
  const auto r = surface::connected_sum_embedded_full(s, CellKey{2, 1, 1}, s, CellKey{1, 1, 0});
  CHECK(r.result.size() == 14);
  const auto cls = surface::classify_compact(surface::to_abstract(r.result));
  CHECK(cls.euler == 2);
  CHECK(r.cube == CellKey{3, 1, 1});
}

TEST_CASE("embedded sum refuses a colliding placement") {
  auto a = constructors::sphere_cube();
  for (const auto& k : constructors::sphere_cube().squares) a.squares.insert(lattice::translate(k, {2, 0, 0}));
  const auto b = constructors::sphere_cube();
  CHECK_THROWS_AS(surface::connected_sum_embedded_full(a, CellKey{2, 1, 1}, b, CellKey{0, 1, 1}, 0, 1), PlacementError);
  CHECK_THROWS_AS(surface::connected_sum_embedded_full(a, CellKey{9, 1, 1}, b, CellKey{0, 1, 1}), InvalidArgument);
}

TEST_CASE("abstract connected sum is a tube") {
  const auto t = surface::to_abstract(constructors::torus_paper());
  const auto s = surface::connected_sum_abstract(t, 0, t, 5);
  CHECK(s.square_count() == 2 * 32 - 2 + 4);
  const auto r = surface::classify_compact(s);
  CHECK(r.genus_or_crosscaps == 2);
  CHECK(r.orientable);
}

TEST_CASE("random embedded sums obey the Euler and orientability law") {
  const std::vector<lattice::GriddedComplex> pool = {constructors::sphere_cube(), constructors::torus_paper(),
                                                     constructors::crosscap_paper_r4(), constructors::klein_bottle()};
  std::vector<surface::SurfaceReport> base;
  for (const auto& p : pool) base.push_back(surface::classify_compact(surface::to_abstract(p)));
  std::mt19937_64 rng(1234);
  int done = 0;
  while (done < 50) {
    const auto ia = rng() % pool.size(), ib = rng() % pool.size();
    const auto& a = pool[ia];
    const auto& b = pool[ib];
    const auto fa = *std::next(a.squares.begin(), static_cast<long>(rng() % a.size()));
    const auto fb = *std::next(b.squares.begin(), static_cast<long>(rng() % b.size()));
    lattice::GriddedComplex s;
    try {
      s = surface::connected_sum_embedded(a, fa, b, fb);
    } catch (const PlacementError&) {
      continue;
    }
    const auto cx = surface::to_abstract(s);
    const auto r = surface::classify_compact(cx);
    CHECK(r.euler == base[ia].euler + base[ib].euler - 2);
    CHECK(r.orientable == (base[ia].orientable && base[ib].orientable));
    // independent check through mod-2 homology
    const auto h = oracle::betti_gf2(cx);
    CHECK(h.b0 - h.b1 + h.b2 == r.euler);
    ++done;
  }
}

TEST_CASE("signatures round-trip through reports") {
  const auto r = surface::classify_compact(grid(2, 2));
  CHECK(surface::signature_of(r) == surface::SurfaceSignature::orientable(0, 1));
  CHECK(surface::matches(surface::SurfaceSignature::orientable(0, 1), r));
  CHECK_FALSE(surface::matches(surface::SurfaceSignature::orientable(1, 1), r));
  CHECK(surface::SurfaceSignature::nonorientable(3, 2).str() == "odd nonorientable, 3 crosscaps, 2 ends (2 planar, 0 nonplanar)");
  CHECK_THROWS_AS(surface::SurfaceSignature::nonorientable(0), InvalidArgument);
  surface::SurfaceSignature bad;
  bad.ends.push_back({true, false});
  CHECK_THROWS_AS(bad.check(), InvalidArgument);
  surface::SurfaceSignature inf;
  inf.genus.reset();
  CHECK_FALSE(inf.finite_type());
}
