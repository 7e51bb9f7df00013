#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "gridforge/lattice.hpp"

namespace gridforge::constructors {

using lattice::CellKey;
using lattice::GriddedComplex;

GriddedComplex sphere_cube();
GriddedComplex torus_paper();
GriddedComplex crosscap_paper_r4();
GriddedComplex klein_bottle();
// Genus `count` (orientable, in Z3) or `count` crosscaps (in Z4), built as a
// chain of embedded connected sums along +x.
GriddedComplex closed_surface(bool orientable, int count);

// Embedded sum of a and b joined along x: fa is a's first x-wall of maximal x,
// fb is b's first x-wall of minimal x.
GriddedComplex chain_sum_x(const GriddedComplex& a, const GriddedComplex& b);

// One polyline of the spiral tree, from its start node to its end node.
struct TreePath {
  std::string name;  // "init0", "init1", "gamma1_n", "gamma2_n"
  int from_node = -1;  // -1 is the origin
  int to_node = 0;
  std::vector<std::array<int, 2>> waypoints;
  std::set<CellKey> edges;
};

struct TreeEmbedding {
  std::set<CellKey> edges;               // unit edges of Z2 (doubled keys)
  std::set<CellKey> trivalent_vertices;  // degree-3 vertices
  int depth = 0;
  std::vector<TreePath> paths;           // paths[i] ends at node i
  std::vector<std::array<int, 2>> nodes; // node i sits at (i, 2i+1)
};

TreeEmbedding tree_spiral(int depth);
// Throws Error unless edges form a tree with max degree 3 whose degree-3
// vertices are exactly trivalent_vertices and whose paths are edge-disjoint.
void check_tree(const TreeEmbedding& t);

// Node ancestry of the spiral tree: children of node n are 2n+2 and 2n+3,
// the origin's children are 0 and 1.
int tree_parent(int node);

struct TreeOfLife {
  TreeEmbedding tree;
  std::set<int> pruned;         // nodes removed together with their subtrees
  std::set<CellKey> kept_edges; // lattice edges of the surviving tree
  std::vector<int> ends;        // surviving leaf nodes, ascending
  std::set<CellKey> cubes;
  GriddedComplex surface;
};

constexpr int kTreeScale = 5;

// The 5x-scaled tree in the plane z = 0 of Z3, thickened by all unit cubes
// with z in [0,1] whose closed bottom face meets it; surface = boundary.
// Pruned nodes lose their incoming path and their whole subtree.
TreeOfLife build_tree_of_life(int depth, const std::set<int>& pruned = {});
GriddedComplex tree_of_life(int depth);

enum class EndKind { Cylinder, Ladder, CrosscapChain };
struct EndDecoration {
  EndKind kind = EndKind::Cylinder;
  int truncation = 1;
};
std::string end_kind_name(EndKind k);
EndKind parse_end_kind(const std::string& s);

// Rebuild t with the extra pruned nodes, attach `handles` tori and
// `crosscaps` projective planes above the tree, then decorate the surviving
// ends in ascending order with `ends` (each decorated end keeps one open
// boundary circle). Crosscaps of either kind move everything into Z4.
GriddedComplex prune_and_decorate(const TreeOfLife& t, const std::set<int>& prune, int handles, int crosscaps,
                                  const std::vector<EndDecoration>& ends);

// Embedded sum of b onto the first horizontal square of a (ordered by z, x,
// y) that has room for a cube above it. Returns the sum and, through
// `top`, the highest horizontal square of the placed copy of b.
GriddedComplex attach_above(const GriddedComplex& a, const GriddedComplex& b, CellKey* top = nullptr,
                            const CellKey* preferred = nullptr);

}  // namespace gridforge::constructors
