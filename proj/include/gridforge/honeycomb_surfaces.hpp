#pragma once

#include <array>
#include <string>
#include <vector>

#include "gridforge/coxeter.hpp"
#include "gridforge/signature.hpp"
#include "gridforge/surface.hpp"

namespace gridforge::honeycomb {

using coxeter::CosetKey;
using coxeter::CoxeterComplex;
using coxeter::CoxeterSystem;
using coxeter::GroupElem;

std::shared_ptr<const CoxeterSystem> system_435();
std::shared_ptr<const CoxeterSystem> system_4335();

// ---- cell helpers shared by the constructions ----

std::vector<CosetKey> vertices_of(const CoxeterSystem& sys, const CosetKey& cell);
std::set<CosetKey> vertex_keys(const CoxeterComplex& c);
// The face of `cell` of the same dimension as `face` sharing no vertex with it.
CosetKey opposite_face(const CoxeterSystem& sys, const CosetKey& cell, const CosetKey& face);
bool share_vertex(const CoxeterSystem& sys, const CosetKey& a, const CosetKey& b);
// Squares lying on exactly one of the given 3-cells.
CoxeterComplex boundary_of_cubes(std::shared_ptr<const CoxeterSystem> sys, const std::vector<CosetKey>& cubes);
CoxeterComplex transform(const CoxeterComplex& c, const GroupElem& g);
// All isometries g of the honeycomb with g(from) = to, for two squares.
std::vector<GroupElem> square_isometries(const CoxeterSystem& sys, const CosetKey& from, const CosetKey& to);
std::string key_str(const CosetKey& k);

struct CoxeterSum {
  CoxeterComplex result;
  GroupElem motion;
  CosetKey cube;
};
// fa and the moved copy of fb become opposite faces of a cube Q through fa;
// the 4 side squares of Q form the tube. Searches the cubes through fa and
// the isometries onto the far face; PlacementError when every choice touches.
CoxeterSum connected_sum_coxeter(const CoxeterComplex& a, const CosetKey& fa, const CoxeterComplex& b,
                                 const CosetKey& fb);
// connected_sum_coxeter at the first interior square of a (in key order) that
// admits a placement of b.
CoxeterComplex attach_sum(const CoxeterComplex& a, const CoxeterComplex& b);

// ---- {4,3,5} ----

struct HyperbolicTorus {
  CoxeterComplex surface;
  CosetKey center;
  std::vector<CosetKey> parallel_edges;
  std::vector<std::vector<CosetKey>> fans;  // all cubes around each edge
  std::vector<CosetKey> cubes;
  static constexpr std::size_t kClaimedSquares = 44;
};
HyperbolicTorus hyperbolic_torus_435_full();
CoxeterComplex hyperbolic_torus_435();

// A pants in {4,3,5}: center cube with arms across two opposite faces and a
// stem across a face adjacent to both; `normal` is a face of the center
// adjacent to the stem face but to neither arm face.
struct Pants435 {
  CoxeterComplex surface;
  CosetKey center;
  std::array<CosetKey, 2> arms;
  CosetKey stem;
  std::array<CosetKey, 2> arm_faces;
  CosetKey stem_face;
  CosetKey normal_face;
  std::array<CosetKey, 3> holes;  // arm 0, arm 1, stem
};
Pants435 hyperbolic_pants_435_full();
CoxeterComplex hyperbolic_pants_435();

struct HyperbolicTree {
  CoxeterComplex surface;
  int depth = 0;
  std::vector<std::array<CosetKey, 4>> pants;  // center, arm 0, arm 1, stem
  std::vector<int> parent;                     // -1 for the root
  std::size_t collisions = 0;
};
// Throws PlacementError on a collision.
HyperbolicTree tree_of_life_435_full(int depth);
CoxeterComplex tree_of_life_435(int depth);

CoxeterComplex closed_orientable_435(int genus);

// ---- {4,3,3,5} ----

struct Torus4335 {
  CoxeterComplex surface;
  CosetKey hypercube;
  std::vector<CosetKey> ring;  // A, B, A', B' in ring order
};
Torus4335 torus_4335_full();
CoxeterComplex torus_4335();

struct Pants4335 {
  CoxeterComplex surface;
  std::array<CosetKey, 3> hypercubes;  // C1, C2, C3
  std::array<CosetKey, 3> faces;       // F1, F2, F3 (3-cells)
  std::array<CosetKey, 2> shared;      // F1 n F2, F2 n F3
  std::array<CosetKey, 3> holes;       // S1, S2, S3
};
Pants4335 pants_4335_full();
CoxeterComplex pants_4335();

// 6x6 squared disk without two opposite corner squares, boundary points
// identified with their antipodes.
surface::AbstractSquareComplex crosscap_abstract_34();

struct Surface4335 {
  bool abstract = false;  // true when crosscaps forced the abstract level
  CoxeterComplex embedded;
  surface::AbstractSquareComplex complex;
};
Surface4335 surface_4335(const surface::SurfaceSignature& sig);

}  // namespace gridforge::honeycomb
