#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridforge/coxeter.hpp"
#include "gridforge/lattice.hpp"

namespace gridforge::surface {

using Quad = std::array<int, 4>;

// Ambient-free square complex: labelled vertices and cyclically ordered squares.
class AbstractSquareComplex {
 public:
  // Returns the id of an existing vertex with this label, or adds one.
  int add_vertex(const std::string& label);
  int vertex_id(const std::string& label) const;  // -1 when absent
  // Throws InvalidArgument on repeated corners or a duplicate square
  // (equal up to rotation and reflection of the cycle).
  void add_square(const Quad& q);
  void add_square(const std::array<std::string, 4>& labels);

  const std::vector<std::string>& vertices() const { return labels_; }
  const std::vector<Quad>& squares() const { return squares_; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t square_count() const { return squares_.size(); }
  // index of the square with these corners (any rotation/reflection), or -1
  int find_square(const Quad& q) const;

  // Same complex with every cycle reversed.
  AbstractSquareComplex reversed() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Quad> squares_;
  std::set<Quad> canonical_;
};

Quad canonical_quad(const Quad& q);

using Edge = std::pair<int, int>;  // (min id, max id)
Edge make_edge(int a, int b);

// Edge -> squares containing it, in square-index order.
std::map<Edge, std::vector<int>> edge_map(const AbstractSquareComplex& c);

AbstractSquareComplex to_abstract(const lattice::GriddedComplex& c);
AbstractSquareComplex to_abstract(const coxeter::CoxeterComplex& c);

struct SurfaceReport {
  bool is_manifold = true;
  bool is_closed = true;
  int components = 0;
  long euler = 0;
  bool orientable = true;
  int boundary_circles = 0;
  int genus_or_crosscaps = 0;
  std::string class_name;

  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t squares = 0;
  // Violations, one human-readable line each (empty for a manifold).
  std::vector<std::string> issues;
  // Per-component class names when the complex is disconnected.
  std::vector<std::string> component_classes;
};

SurfaceReport validate(const AbstractSquareComplex& c);
long euler(const AbstractSquareComplex& c);

struct Orientation {
  bool orientable = true;
  // +1 keeps the stored cycle, -1 reverses it; valid when orientable.
  std::vector<int> signs;
  // When nonorientable: a closed chain of adjacent squares along which the
  // orientation flips an odd number of times.
  std::vector<int> odd_cycle;
};
// Throws NonManifoldError unless every edge lies in at most two squares.
Orientation orientability(const AbstractSquareComplex& c);

struct Boundary {
  int count = 0;
  std::vector<std::vector<int>> circles;  // vertex cycles
};
Boundary boundary_components(const AbstractSquareComplex& c);

// Full report for a connected finite manifold; throws InvalidArgument for
// disconnected input and NonManifoldError for a non-manifold.
SurfaceReport classify_compact(const AbstractSquareComplex& c);

// Vertex sets of the connected components, ordered by smallest vertex id.
std::vector<std::vector<int>> component_vertices(const AbstractSquareComplex& c);

// Removes squares sa and sb and glues their boundaries with a four-square
// tube; sa walked forward is matched to sb walked backward, starting from the
// lowest vertex id of each. Vertices of the result are relabelled v0, v1, ...
AbstractSquareComplex connected_sum_abstract(const AbstractSquareComplex& a, int sa,
                                             const AbstractSquareComplex& b, int sb);

// The rigid motion the embedded connected sum applied to b.
struct RigidMotion {
  std::vector<int> perm;     // new axis i takes old axis perm[i]
  std::vector<int> flip;     // +1 or -1 per new axis
  std::vector<int> shift;    // added to doubled coordinates afterwards
  lattice::CellKey apply(const lattice::CellKey& k) const;
};

struct EmbeddedSum {
  lattice::GriddedComplex result;
  RigidMotion motion;
  lattice::CellKey cube;  // the unit cube Q whose side faces form the tube
};

// fa in a and fb in b are moved to opposite faces of a unit cube Q lying on
// the far side of fa from a; the 4 side faces of Q form the tube. Throws
// PlacementError listing colliding vertices when the moved copy of b touches
// a anywhere else or Q's side faces are already in use.
// normal_axis/side restrict Q to fa + side * e_axis; -1/0 tries every normal
// axis in ascending order, + before -.
EmbeddedSum connected_sum_embedded_full(const lattice::GriddedComplex& a, const lattice::CellKey& fa,
                                        const lattice::GriddedComplex& b, const lattice::CellKey& fb,
                                        int normal_axis = -1, int side = 0);
lattice::GriddedComplex connected_sum_embedded(const lattice::GriddedComplex& a, const lattice::CellKey& fa,
                                               const lattice::GriddedComplex& b, const lattice::CellKey& fb);

// Human-readable class string from topological data.
std::string class_name(bool orientable, long euler, int boundary);

}  // namespace gridforge::surface
