#include "gridforge/constructors.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gridforge/error.hpp"
#include "gridforge/surface.hpp"

namespace gridforge::constructors {

namespace {

GriddedComplex from_keys(lattice::Ambient amb, const std::vector<std::vector<int>>& keys) {
  GriddedComplex c;
  c.ambient = amb;
  for (const auto& k : keys) {
    if (!c.squares.insert(CellKey(k)).second) throw Error("duplicate square in construction table");
  }
  lattice::check_complex(c);
  return c;
}

std::set<CellKey> vertices_of(const GriddedComplex& c) {
  std::set<CellKey> out;
  for (const auto& s : c.squares) {
    for (const auto& v : lattice::corners_cyclic(s)) out.insert(v);
  }
  return out;
}

CellKey lift(const CellKey& k, int n) {
  std::vector<int> v = k.coords();
  while (static_cast<int>(v.size()) < n) v.push_back(0);
  return CellKey(v);
}

GriddedComplex lift_to(const GriddedComplex& c, int n) {
  GriddedComplex out = c;
  while (lattice::ambient_dimension(out.ambient) < n) out = lattice::embed_higher(out);
  return out;
}

bool horizontal(const CellKey& s) { return (s[0] & 1) && (s[1] & 1) && cell_dim(s) == 2; }

// Highest horizontal square, ties broken by smallest remaining coordinates.
CellKey top_square(const std::set<CellKey>& squares) {
  const CellKey* best = nullptr;
  for (const auto& s : squares) {
    if (!horizontal(s)) continue;
    if (!best || s[2] > (*best)[2]) best = &s;
  }
  if (!best) throw Error("piece has no horizontal square");
  return *best;
}

}  // namespace

GriddedComplex sphere_cube() {
  return lattice::boundary_of_cube_union({CellKey{1, 1, 1}});
}

GriddedComplex torus_paper() {
  return from_keys(lattice::Ambient::Z3,
                   {
                       // F0, z = 0
                       {1, 1, 0}, {3, 1, 0}, {5, 1, 0}, {1, 3, 0}, {5, 3, 0}, {1, 5, 0}, {3, 5, 0}, {5, 5, 0},
                       // F1, z = 1
                       {1, 1, 2}, {3, 1, 2}, {5, 1, 2}, {1, 3, 2}, {5, 3, 2}, {1, 5, 2}, {3, 5, 2}, {5, 5, 2},
                       // F2, x = 0
                       {0, 1, 1}, {0, 3, 1}, {0, 5, 1},
                       // F3, x = 1
                       {2, 3, 1},
                       // F4, x = 2
                       {4, 3, 1},
                       // F5, x = 3
                       {6, 1, 1}, {6, 3, 1}, {6, 5, 1},
                       // F6, y = 0
                       {1, 0, 1}, {3, 0, 1}, {5, 0, 1},
                       // F7, y = 1
                       {3, 2, 1},
                       // F8, y = 2
                       {3, 4, 1},
                       // F9, y = 3
                       {1, 6, 1}, {3, 6, 1}, {5, 6, 1},
                   });
}

GriddedComplex crosscap_paper_r4() {
  return from_keys(lattice::Ambient::Z4,
                   {
                       // XY
                       {1, 1, 0, 0}, {3, 1, 0, 0}, {3, 3, 0, 0}, {1, 3, 0, 0},
                       {3, 1, 2, 0}, {1, 3, 2, 0}, {1, 1, 4, 0}, {3, 3, 4, 0},
                       // XZ
                       {1, 0, 1, 0}, {1, 0, 3, 0}, {3, 0, 1, 0}, {1, 2, 3, 0},
                       {3, 2, 3, 0}, {1, 4, 1, 0}, {3, 4, 1, 0}, {3, 4, 3, 0},
                       // YZ
                       {0, 1, 1, 0}, {0, 1, 3, 0}, {0, 3, 1, 0}, {2, 1, 3, 2},
                       {2, 3, 3, 2}, {4, 1, 1, 0}, {4, 3, 1, 0}, {4, 3, 3, 0},
                       // YW
                       {2, 1, 2, 1}, {2, 1, 4, 1}, {2, 3, 2, 1}, {2, 3, 4, 1},
                       // ZW
                       {2, 0, 3, 1}, {2, 4, 3, 1},
                   });
}

GriddedComplex chain_sum_x(const GriddedComplex& a_in, const GriddedComplex& b_in) {
  const int n = std::max(lattice::ambient_dimension(a_in.ambient), lattice::ambient_dimension(b_in.ambient));
  const GriddedComplex a = lift_to(a_in, n);
  const GriddedComplex b = lift_to(b_in, n);
  const CellKey* fa = nullptr;
  const CellKey* fb = nullptr;
  for (const auto& s : a.squares) {
    if (!(s[0] & 1) && (!fa || s[0] > (*fa)[0])) fa = &s;
  }
  for (const auto& s : b.squares) {
    if (!(s[0] & 1) && (!fb || s[0] < (*fb)[0])) fb = &s;
  }
  if (!fa || !fb) throw InvalidArgument("chain sum needs squares normal to the x-axis");
  return surface::connected_sum_embedded_full(a, *fa, b, *fb, 0, 1).result;
}

GriddedComplex klein_bottle() { return chain_sum_x(crosscap_paper_r4(), crosscap_paper_r4()); }

GriddedComplex closed_surface(bool orientable, int count) {
  if (count < 0) throw InvalidArgument("count must be non-negative");
  if (!orientable && count == 0) throw InvalidArgument("a nonorientable closed surface needs at least one crosscap");
  if (orientable && count == 0) return sphere_cube();
  const GriddedComplex piece = orientable ? torus_paper() : crosscap_paper_r4();
  GriddedComplex out = piece;
  for (int i = 1; i < count; ++i) out = chain_sum_x(out, piece);
  return out;
}

namespace {

CellKey vertex2(int x, int y) { return CellKey{2 * x, 2 * y}; }

std::set<CellKey> polyline_edges(const std::vector<std::array<int, 2>>& w) {
  std::set<CellKey> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto [x, y] = w[i];
    const auto [x1, y1] = w[i + 1];
    if (x != x1 && y != y1) throw Error("spiral waypoints must be axis-aligned");
    const int dx = (x1 > x) - (x1 < x);
    const int dy = (y1 > y) - (y1 < y);
    while (x != x1 || y != y1) {
      out.insert(CellKey{2 * x + dx, 2 * y + dy});
      x += dx;
      y += dy;
    }
  }
  return out;
}

}  // namespace

int tree_parent(int node) {
  if (node < 0) throw InvalidArgument("node index must be non-negative");
  return node < 2 ? -1 : (node - 2) / 2;
}

TreeEmbedding tree_spiral(int depth) {
  if (depth < 0) throw InvalidArgument("depth must be non-negative");
  TreeEmbedding t;
  t.depth = depth;
  const int node_count = 2 * depth + 2;
  t.paths.resize(node_count);
  for (int i = 0; i < node_count; ++i) t.nodes.push_back({i, 2 * i + 1});
  t.paths[0] = {"init0", -1, 0, {{0, 0}, {0, 1}}, {}};
  t.paths[1] = {"init1", -1, 1, {{0, 0}, {1, 0}, {1, 3}}, {}};
  for (int n = 0; n < depth; ++n) {
    t.paths[2 * n + 2] = {"gamma1_" + std::to_string(n),
                          n,
                          2 * n + 2,
                          {{n, 2 * n + 1},
                           {-2 * n - 1, 2 * n + 1},
                           {-2 * n - 1, -2 * n - 1},
                           {2 * n + 2, -2 * n - 1},
                           {2 * n + 2, 4 * n + 5}},
                          {}};
    t.paths[2 * n + 3] = {"gamma2_" + std::to_string(n),
                          n,
                          2 * n + 3,
                          {{n, 2 * n + 1},
                           {n, 2 * n + 2},
                           {-2 * n - 2, 2 * n + 2},
                           {-2 * n - 2, -2 * n - 2},
                           {2 * n + 3, -2 * n - 2},
                           {2 * n + 3, 4 * n + 7}},
                          {}};
  }
  for (auto& p : t.paths) {
    p.edges = polyline_edges(p.waypoints);
    t.edges.insert(p.edges.begin(), p.edges.end());
  }
  std::map<CellKey, int> degree;
  for (const auto& e : t.edges) {
    for (const auto& v : lattice::faces(e, 0)) ++degree[v];
  }
  for (const auto& [v, d] : degree) {
    if (d == 3) t.trivalent_vertices.insert(v);
  }
  return t;
}

void check_tree(const TreeEmbedding& t) {
  std::size_t total = 0;
  for (const auto& p : t.paths) total += p.edges.size();
  if (total != t.edges.size()) throw Error("spiral paths overlap in an edge");
  std::map<CellKey, std::vector<CellKey>> adj;
  for (const auto& e : t.edges) {
    const auto ends = lattice::faces(e, 0);
    const CellKey a = *ends.begin();
    const CellKey b = *ends.rbegin();
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (t.edges.empty()) return;
  if (adj.size() != t.edges.size() + 1) throw Error("spiral edges do not form a tree (V != E + 1)");
  std::set<CellKey> seen{adj.begin()->first};
  std::vector<CellKey> stack{adj.begin()->first};
  while (!stack.empty()) {
    const CellKey v = stack.back();
    stack.pop_back();
    for (const auto& u : adj[v]) {
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  if (seen.size() != adj.size()) throw Error("spiral edges are disconnected");
  std::set<CellKey> tri;
  for (const auto& [v, nb] : adj) {
    if (nb.size() > 3) throw Error("vertex " + v.str() + " has degree above 3");
    if (nb.size() == 3) tri.insert(v);
  }
  if (tri != t.trivalent_vertices) throw Error("trivalent vertex set does not match the degree-3 vertices");
  for (int n = 0; n < t.depth; ++n) {
    if (!tri.count(vertex2(n, 2 * n + 1))) throw Error("branch node " + std::to_string(n) + " is not trivalent");
  }
}

namespace {

std::set<CellKey> thicken(const std::set<CellKey>& tree_edges) {
  std::set<CellKey> cubes;
  auto add_square = [&](int i, int j) { cubes.insert(CellKey{2 * i + 1, 2 * j + 1, 1}); };
  if (tree_edges.empty()) {
    for (int i : {-1, 0})
      for (int j : {-1, 0}) add_square(i, j);
    return cubes;
  }
  for (const auto& e : tree_edges) {
    // e joins (x, y) to its neighbour; scaled, it covers kTreeScale unit edges.
    const int x = e[0] / 2 - (e[0] < 0 && (e[0] & 1) ? 1 : 0);
    const int y = e[1] / 2 - (e[1] < 0 && (e[1] & 1) ? 1 : 0);
    const bool along_x = (e[0] & 1) != 0;
    for (int k = 0; k < kTreeScale; ++k) {
      const int a = kTreeScale * x + (along_x ? k : 0);
      const int b = kTreeScale * y + (along_x ? 0 : k);
      // closed unit squares meeting the unit segment starting at (a, b)
      if (along_x) {
        for (int i = a - 1; i <= a + 1; ++i)
          for (int j : {b - 1, b}) add_square(i, j);
      } else {
        for (int i : {a - 1, a})
          for (int j = b - 1; j <= b + 1; ++j) add_square(i, j);
      }
    }
  }
  return cubes;
}

std::set<int> subtree(int node, int node_count) {
  std::set<int> out;
  std::vector<int> stack{node};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v >= node_count || !out.insert(v).second) continue;
    stack.push_back(2 * v + 2);
    stack.push_back(2 * v + 3);
  }
  return out;
}

}  // namespace

TreeOfLife build_tree_of_life(int depth, const std::set<int>& pruned) {
  TreeOfLife t;
  t.tree = tree_spiral(depth);
  check_tree(t.tree);
  const int node_count = static_cast<int>(t.tree.paths.size());
  std::set<int> removed;
  for (int p : pruned) {
    if (p < 0 || p >= node_count) {
      throw InvalidArgument("cannot prune node " + std::to_string(p) + ": the depth-" + std::to_string(depth) +
                            " tree has nodes 0.." + std::to_string(node_count - 1));
    }
    t.pruned.insert(p);
    const auto sub = subtree(p, node_count);
    removed.insert(sub.begin(), sub.end());
  }
  for (int i = 0; i < node_count; ++i) {
    if (removed.count(i)) continue;
    t.kept_edges.insert(t.tree.paths[i].edges.begin(), t.tree.paths[i].edges.end());
    const bool has_child = i < depth && (!removed.count(2 * i + 2) || !removed.count(2 * i + 3));
    if (!has_child) t.ends.push_back(i);
  }
  t.cubes = thicken(t.kept_edges);
  t.surface = lattice::boundary_of_cube_union(t.cubes);
  return t;
}

GriddedComplex tree_of_life(int depth) { return build_tree_of_life(depth).surface; }

std::string end_kind_name(EndKind k) {
  switch (k) {
    case EndKind::Cylinder:
      return "cylinder";
    case EndKind::Ladder:
      return "ladder";
    case EndKind::CrosscapChain:
      return "crosscap_chain";
  }
  return "";
}

EndKind parse_end_kind(const std::string& s) {
  if (s == "cylinder") return EndKind::Cylinder;
  if (s == "ladder") return EndKind::Ladder;
  if (s == "crosscap_chain" || s == "crosscap-chain") return EndKind::CrosscapChain;
  throw InvalidArgument("unknown end decoration '" + s + "' (cylinder, ladder, crosscap_chain)");
}

namespace {

struct Placed {
  GriddedComplex result;
  CellKey top;
};

// Embedded sum with Q directly above fa; nullopt-style failure via flag.
bool try_attach(const GriddedComplex& a, const std::set<CellKey>& va, const CellKey& fa, const GriddedComplex& b,
                Placed& out, std::vector<std::string>* collision) {
  CellKey target = fa;
  target[2] += 2;
  for (const auto& v : lattice::corners_cyclic(target)) {
    if (va.count(v)) {
      if (collision && collision->empty()) collision->push_back(v.str());
      return false;
    }
  }
  const int n = lattice::ambient_dimension(a.ambient);
  const GriddedComplex bb = lift_to(b, n);
  try {
    // fb: the lowest horizontal square of b, so b can sit on top of Q
    const CellKey* fb = nullptr;
    for (const auto& s : bb.squares) {
      if (horizontal(s) && (!fb || s[2] < (*fb)[2])) fb = &s;
    }
    if (!fb) throw InvalidArgument("attached piece has no horizontal square");
    auto sum = surface::connected_sum_embedded_full(a, fa, bb, *fb, 2, 1);
    std::set<CellKey> moved;
    for (const auto& s : bb.squares) {
      const CellKey m = sum.motion.apply(s);
      if (m != target) moved.insert(m);
    }
    out.top = top_square(moved);
    out.result = std::move(sum.result);
    return true;
  } catch (const PlacementError& e) {
    if (collision && collision->empty()) *collision = e.cells();
    return false;
  }
}

Placed attach_scan(const GriddedComplex& a, const GriddedComplex& b, const CellKey* preferred) {
  const int n = std::max(lattice::ambient_dimension(a.ambient), lattice::ambient_dimension(b.ambient));
  const GriddedComplex aa = lift_to(a, n);
  const std::set<CellKey> va = vertices_of(aa);
  Placed out;
  std::vector<std::string> collision;
  if (preferred) {
    const CellKey p = lift(*preferred, n);
    if (aa.contains(p) && try_attach(aa, va, p, b, out, &collision)) return out;
  }
  std::vector<CellKey> sites;
  for (const auto& s : aa.squares) {
    if (horizontal(s)) sites.push_back(s);
  }
  std::sort(sites.begin(), sites.end(), [](const CellKey& x, const CellKey& y) {
    std::vector<int> kx = x.coords();
    std::vector<int> ky = y.coords();
    std::swap(kx[0], kx[2]);
    std::swap(ky[0], ky[2]);
    std::swap(kx[1], kx[2]);
    std::swap(ky[1], ky[2]);
    return kx < ky;  // z, then x, then y (then w)
  });
  for (const auto& s : sites) {
    if (try_attach(aa, va, s, b, out, &collision)) return out;
  }
  throw PlacementError("no collision-free site above the surface", collision);
}

// Stack of truncation copies of piece starting at site; the last copy's top
// square is removed so the stack ends in one open boundary circle.
GriddedComplex decorate_stack(GriddedComplex a, const GriddedComplex& piece, int count, const CellKey& site) {
  if (count == 0) {
    a.squares.erase(lift(site, lattice::ambient_dimension(a.ambient)));
    return a;
  }
  CellKey next = site;
  for (int i = 0; i < count; ++i) {
    Placed p = attach_scan(a, piece, &next);
    a = std::move(p.result);
    next = p.top;
  }
  a.squares.erase(next);
  return a;
}

GriddedComplex decorate_cylinder(GriddedComplex a, int length, const CellKey& site_in) {
  const int n = lattice::ambient_dimension(a.ambient);
  const CellKey site = lift(site_in, n);
  if (!a.contains(site)) throw InvalidArgument("decoration site " + site.str() + " is not on the surface");
  const std::set<CellKey> va = vertices_of(a);
  std::set<CellKey> base;
  for (const auto& v : lattice::corners_cyclic(site)) base.insert(v);
  std::vector<std::string> collide;
  std::set<CellKey> tube;
  for (int k = 0; k < length; ++k) {
    CellKey cube = site;
    cube[2] += 2 * k + 1;
    for (const auto& f : lattice::faces(cube, 2)) {
      if (!horizontal(f)) tube.insert(f);
    }
  }
  for (const auto& f : tube) {
    for (const auto& v : lattice::corners_cyclic(f)) {
      if (va.count(v) && !base.count(v)) collide.push_back(v.str());
    }
  }
  if (!collide.empty()) {
    std::sort(collide.begin(), collide.end());
    collide.erase(std::unique(collide.begin(), collide.end()), collide.end());
    throw PlacementError("cylinder decoration collides with the surface", collide);
  }
  a.squares.erase(site);
  a.squares.insert(tube.begin(), tube.end());
  return a;
}

}  // namespace

GriddedComplex attach_above(const GriddedComplex& a, const GriddedComplex& b, CellKey* top, const CellKey* preferred) {
  Placed p = attach_scan(a, b, preferred);
  if (top) *top = p.top;
  return p.result;
}

GriddedComplex prune_and_decorate(const TreeOfLife& t, const std::set<int>& prune, int handles, int crosscaps,
                                  const std::vector<EndDecoration>& ends) {
  if (handles < 0 || crosscaps < 0) throw InvalidArgument("handle and crosscap counts must be non-negative");
  std::set<int> all = t.pruned;
  all.insert(prune.begin(), prune.end());
  const TreeOfLife tree = build_tree_of_life(t.tree.depth, all);
  if (ends.size() > tree.ends.size()) {
    throw InvalidArgument(std::to_string(ends.size()) + " end decorations requested but only " +
                          std::to_string(tree.ends.size()) + " ends survive pruning");
  }
  for (const auto& d : ends) {
    if (d.truncation < 0) throw InvalidArgument("decoration truncation must be non-negative");
  }
  GriddedComplex s = tree.surface;
  bool needs_z4 = crosscaps > 0;
  for (const auto& d : ends) needs_z4 = needs_z4 || d.kind == EndKind::CrosscapChain;

  for (int i = 0; i < handles; ++i) s = attach_above(s, torus_paper());
  if (needs_z4) s = lift_to(s, 4);
  for (int i = 0; i < crosscaps; ++i) s = attach_above(s, crosscap_paper_r4());

  for (std::size_t i = 0; i < ends.size(); ++i) {
    const auto& node = tree.tree.nodes[tree.ends[i]];
    // top square whose lower corner is the scaled end node
    const CellKey site = lift(CellKey{2 * kTreeScale * node[0] + 1, 2 * kTreeScale * node[1] + 1, 2},
                              lattice::ambient_dimension(s.ambient));
    switch (ends[i].kind) {
      case EndKind::Cylinder:
        s = decorate_cylinder(std::move(s), ends[i].truncation, site);
        break;
      case EndKind::Ladder:
        s = decorate_stack(std::move(s), torus_paper(), ends[i].truncation, site);
        break;
      case EndKind::CrosscapChain:
        s = decorate_stack(std::move(s), crosscap_paper_r4(), ends[i].truncation, site);
        break;
    }
  }
  return s;
}

}  // namespace gridforge::constructors
