#include "gridforge/surface.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "gridforge/error.hpp"

namespace gridforge::surface {

Quad canonical_quad(const Quad& q) {
  Quad best = q;
  bool first = true;
  for (int dir : {1, -1}) {
    for (int start = 0; start < 4; ++start) {
      Quad c;
      for (int i = 0; i < 4; ++i) c[i] = q[((start + dir * i) % 4 + 4) % 4];
      if (first || c < best) best = c;
      first = false;
    }
  }
  return best;
}

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

int AbstractSquareComplex::add_vertex(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(labels_.size());
  labels_.push_back(label);
  index_.emplace(label, id);
  return id;
}

int AbstractSquareComplex::vertex_id(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

void AbstractSquareComplex::add_square(const Quad& q) {
  for (int i = 0; i < 4; ++i) {
    if (q[i] < 0 || q[i] >= static_cast<int>(labels_.size())) {
      throw InvalidArgument("square refers to unknown vertex id " + std::to_string(q[i]));
    }
    for (int j = 0; j < i; ++j) {
      if (q[i] == q[j]) throw InvalidArgument("square repeats vertex '" + labels_[q[i]] + "'");
    }
  }
  if (!canonical_.insert(canonical_quad(q)).second) {
    throw InvalidArgument("duplicate square (" + labels_[q[0]] + "," + labels_[q[1]] + "," + labels_[q[2]] + "," +
                          labels_[q[3]] + ")");
  }
  squares_.push_back(q);
}

void AbstractSquareComplex::add_square(const std::array<std::string, 4>& labels) {
  Quad q;
  for (int i = 0; i < 4; ++i) q[i] = add_vertex(labels[i]);
  add_square(q);
}

int AbstractSquareComplex::find_square(const Quad& q) const {
  const Quad c = canonical_quad(q);
  if (!canonical_.count(c)) return -1;
  for (std::size_t i = 0; i < squares_.size(); ++i) {
    if (canonical_quad(squares_[i]) == c) return static_cast<int>(i);
  }
  return -1;
}

AbstractSquareComplex AbstractSquareComplex::reversed() const {
  AbstractSquareComplex out;
  for (const auto& l : labels_) out.add_vertex(l);
  for (const auto& q : squares_) out.add_square(Quad{q[3], q[2], q[1], q[0]});
  return out;
}

std::map<Edge, std::vector<int>> edge_map(const AbstractSquareComplex& c) {
  std::map<Edge, std::vector<int>> out;
  const auto& sq = c.squares();
  for (std::size_t s = 0; s < sq.size(); ++s) {
    for (int i = 0; i < 4; ++i) out[make_edge(sq[s][i], sq[s][(i + 1) % 4])].push_back(static_cast<int>(s));
  }
  return out;
}

AbstractSquareComplex to_abstract(const lattice::GriddedComplex& c) {
  std::set<lattice::CellKey> verts;
  for (const auto& s : c.squares) {
    for (const auto& v : lattice::corners_cyclic(s)) verts.insert(v);
  }
  AbstractSquareComplex out;
  for (const auto& v : verts) out.add_vertex(v.str());
  for (const auto& s : c.squares) {
    const auto corners = lattice::corners_cyclic(s);
    Quad q;
    for (int i = 0; i < 4; ++i) q[i] = out.vertex_id(corners[i].str());
    out.add_square(q);
  }
  return out;
}

AbstractSquareComplex to_abstract(const coxeter::CoxeterComplex& c) {
  AbstractSquareComplex out;
  if (c.squares.empty()) return out;
  if (!c.system) throw InvalidArgument("coxeter complex without a system");
  const auto& sys = *c.system;
  std::vector<std::vector<coxeter::CosetKey>> corners;
  std::set<coxeter::CosetKey> verts;
  for (const auto& s : c.squares) {
    corners.push_back(sys.square_corners(s));
    verts.insert(corners.back().begin(), corners.back().end());
  }
  std::map<coxeter::CosetKey, int> id;
  for (const auto& v : verts) {
    const int n = static_cast<int>(id.size());
    id.emplace(v, out.add_vertex("v" + std::to_string(n)));
  }
  for (const auto& cs : corners) out.add_square(Quad{id.at(cs[0]), id.at(cs[1]), id.at(cs[2]), id.at(cs[3])});
  return out;
}

long euler(const AbstractSquareComplex& c) {
  return static_cast<long>(c.vertex_count()) - static_cast<long>(edge_map(c).size()) +
         static_cast<long>(c.square_count());
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// Position of vertex v in square q, or -1.
int position(const Quad& q, int v) {
  for (int i = 0; i < 4; ++i)
    if (q[i] == v) return i;
  return -1;
}

// Orientation of edge (u,v) inside q as stored: +1 when u is followed by v.
int edge_direction(const Quad& q, int u, int v) {
  const int i = position(q, u);
  if (q[(i + 1) % 4] == v) return 1;
  return -1;
}

std::string edge_str(const AbstractSquareComplex& c, const Edge& e) {
  return "{" + c.vertices()[e.first] + ", " + c.vertices()[e.second] + "}";
}

std::vector<std::string> manifold_issues(const AbstractSquareComplex& c,
                                         const std::map<Edge, std::vector<int>>& edges) {
  std::vector<std::string> issues;
  for (const auto& [e, sq] : edges) {
    if (sq.size() > 2) {
      issues.push_back("edge " + edge_str(c, e) + " lies in " + std::to_string(sq.size()) + " squares");
    }
  }
  // Link of each vertex: nodes are neighbouring vertices along edges, arcs are
  // the squares at the vertex joining its two incident edges.
  const int nv = static_cast<int>(c.vertex_count());
  std::vector<std::vector<std::pair<int, int>>> arcs(nv);
  const auto& squares = c.squares();
  for (const auto& q : squares) {
    for (int i = 0; i < 4; ++i) arcs[q[i]].emplace_back(q[(i + 3) % 4], q[(i + 1) % 4]);
  }
  for (int v = 0; v < nv; ++v) {
    if (arcs[v].empty()) {
      issues.push_back("vertex " + c.vertices()[v] + " is isolated");
      continue;
    }
    std::map<int, int> node;
    for (const auto& [x, y] : arcs[v]) {
      node.emplace(x, static_cast<int>(node.size()));
      node.emplace(y, static_cast<int>(node.size()));
    }
    UnionFind uf(static_cast<int>(node.size()));
    std::vector<int> degree(node.size(), 0);
    for (const auto& [x, y] : arcs[v]) {
      uf.unite(node[x], node[y]);
      ++degree[node[x]];
      ++degree[node[y]];
    }
    int roots = 0;
    int ends = 0;
    bool high = false;
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
      if (degree[i] == 1) ++ends;
      if (degree[i] > 2) high = true;
    }
    if (high) continue;  // already reported as an overfull edge
    if (roots != 1) {
      issues.push_back("vertex " + c.vertices()[v] + " has a disconnected link (" + std::to_string(roots) +
                       " pieces)");
    } else if (ends != 0 && ends != 2) {
      issues.push_back("vertex " + c.vertices()[v] + " has a link that is neither a cycle nor a path");
    }
  }
  return issues;
}

struct Propagation {
  bool orientable = true;
  std::vector<int> signs;
  std::vector<int> odd_cycle;
};

Propagation propagate(const AbstractSquareComplex& c, const std::map<Edge, std::vector<int>>& edges) {
  const auto& sq = c.squares();
  const int n = static_cast<int>(sq.size());
  Propagation out;
  out.signs.assign(n, 0);
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (out.signs[root] != 0) continue;
    out.signs[root] = 1;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      const int s = bfs.front();
      bfs.pop();
      for (int i = 0; i < 4; ++i) {
        const int u = sq[s][i];
        const int v = sq[s][(i + 1) % 4];
        for (int t : edges.at(make_edge(u, v))) {
          if (t == s) continue;
          // t must traverse u->v opposite to s.
          const int want = -out.signs[s] * edge_direction(sq[t], u, v);
          if (out.signs[t] == 0) {
            out.signs[t] = want;
            parent[t] = s;
            bfs.push(t);
          } else if (out.signs[t] != want && out.orientable) {
            out.orientable = false;
            std::vector<int> ps;
            std::vector<int> pt;
            for (int x = s; x != -1; x = parent[x]) ps.push_back(x);
            for (int x = t; x != -1; x = parent[x]) pt.push_back(x);
            while (ps.size() > 1 && pt.size() > 1 && ps[ps.size() - 2] == pt[pt.size() - 2]) {
              ps.pop_back();
              pt.pop_back();
            }
            out.odd_cycle.assign(ps.begin(), ps.end());
            // ps ends at the common ancestor; walk back down towards t.
            for (std::size_t k = pt.size() - 1; k-- > 0;) out.odd_cycle.push_back(pt[k]);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> component_vertices(const AbstractSquareComplex& c) {
  UnionFind uf(static_cast<int>(c.vertex_count()));
  for (const auto& q : c.squares()) {
    for (int i = 1; i < 4; ++i) uf.unite(q[0], q[i]);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < static_cast<int>(c.vertex_count()); ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(std::move(vs));
  return out;
}

Orientation orientability(const AbstractSquareComplex& c) {
  const auto edges = edge_map(c);
  for (const auto& [e, sq] : edges) {
    if (sq.size() > 2) throw NonManifoldError("edge " + edge_str(c, e) + " lies in more than two squares");
  }
  Propagation p = propagate(c, edges);
  Orientation o;
  o.orientable = p.orientable;
  if (p.orientable) o.signs = std::move(p.signs);
  else o.odd_cycle = std::move(p.odd_cycle);
  return o;
}

Boundary boundary_components(const AbstractSquareComplex& c) {
  const auto edges = edge_map(c);
  std::map<int, std::vector<int>> adj;
  for (const auto& [e, sq] : edges) {
    if (sq.size() > 2) throw NonManifoldError("edge " + edge_str(c, e) + " lies in more than two squares");
    if (sq.size() == 1) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) {
      throw NonManifoldError("boundary vertex " + c.vertices()[v] + " meets " + std::to_string(nb.size()) +
                             " boundary edges");
    }
  }
  Boundary out;
  std::set<int> used;
  for (const auto& [start, nb] : adj) {
    if (used.count(start)) continue;
    std::vector<int> cycle{start};
    used.insert(start);
    int prev = start;
    int cur = std::min(nb[0], nb[1]);
    while (cur != start) {
      cycle.push_back(cur);
      used.insert(cur);
      const auto& n2 = adj.at(cur);
      const int next = n2[0] == prev ? n2[1] : n2[0];
      prev = cur;
      cur = next;
    }
    out.circles.push_back(std::move(cycle));
  }
  out.count = static_cast<int>(out.circles.size());
  return out;
}

std::string class_name(bool orientable, long euler, int boundary) {
  std::string name;
  const long k = 2 - euler - boundary;
  if (orientable) {
    name = "orientable genus " + std::to_string(k / 2);
  } else {
    name = "nonorientable, " + std::to_string(k) + (k == 1 ? " crosscap" : " crosscaps");
  }
  if (boundary > 0) {
    name += ", " + std::to_string(boundary) + (boundary == 1 ? " boundary circle" : " boundary circles");
  }
  return name;
}

namespace {

// Sub-complex spanned by one vertex component.
AbstractSquareComplex restrict_to(const AbstractSquareComplex& c, const std::vector<int>& verts) {
  std::set<int> keep(verts.begin(), verts.end());
  AbstractSquareComplex out;
  for (int v : verts) out.add_vertex(c.vertices()[v]);
  for (const auto& q : c.squares()) {
    if (!keep.count(q[0])) continue;
    Quad r;
    for (int i = 0; i < 4; ++i) r[i] = out.vertex_id(c.vertices()[q[i]]);
    out.add_square(r);
  }
  return out;
}

void fill_topology(const AbstractSquareComplex& c, const std::map<Edge, std::vector<int>>& edges, SurfaceReport& r) {
  r.orientable = propagate(c, edges).orientable;
  r.boundary_circles = boundary_components(c).count;
  r.genus_or_crosscaps = static_cast<int>(r.orientable ? (2 - r.euler - r.boundary_circles) / 2
                                                       : 2 - r.euler - r.boundary_circles);
}

}  // namespace

SurfaceReport validate(const AbstractSquareComplex& c) {
  SurfaceReport r;
  const auto edges = edge_map(c);
  r.vertices = c.vertex_count();
  r.edges = edges.size();
  r.squares = c.square_count();
  r.euler = static_cast<long>(r.vertices) - static_cast<long>(r.edges) + static_cast<long>(r.squares);
  const auto comps = component_vertices(c);
  r.components = static_cast<int>(comps.size());
  r.issues = manifold_issues(c, edges);
  r.is_manifold = r.issues.empty();
  r.is_closed = r.is_manifold;
  for (const auto& [e, sq] : edges) {
    if (sq.size() != 2) r.is_closed = false;
  }
  if (!r.is_manifold) {
    r.orientable = false;
    r.genus_or_crosscaps = 0;
    r.class_name = "not a manifold";
    return r;
  }
  fill_topology(c, edges, r);
  if (r.components == 0) {
    r.class_name = "empty";
  } else if (r.components == 1) {
    r.class_name = class_name(r.orientable, r.euler, r.boundary_circles);
  } else {
    r.class_name = "disconnected, " + std::to_string(r.components) + " components";
    for (const auto& verts : comps) {
      const auto sub = restrict_to(c, verts);
      SurfaceReport s;
      const auto se = edge_map(sub);
      s.euler = euler(sub);
      fill_topology(sub, se, s);
      r.component_classes.push_back(class_name(s.orientable, s.euler, s.boundary_circles));
    }
  }
  return r;
}

SurfaceReport classify_compact(const AbstractSquareComplex& c) {
  SurfaceReport r = validate(c);
  if (!r.is_manifold) {
    throw NonManifoldError("not a manifold: " + r.issues.front());
  }
  if (r.components != 1) {
    std::string msg = "classification needs a connected surface, got " + std::to_string(r.components) + " components";
    for (const auto& s : r.component_classes) msg += "; " + s;
    throw InvalidArgument(msg);
  }
  return r;
}

AbstractSquareComplex connected_sum_abstract(const AbstractSquareComplex& a, int sa,
                                             const AbstractSquareComplex& b, int sb) {
  auto check = [](const AbstractSquareComplex& c, int s, const char* which) {
    if (s < 0 || s >= static_cast<int>(c.square_count())) {
      throw InvalidArgument(std::string("square index out of range in ") + which);
    }
    const auto r = validate(c);
    if (!r.is_manifold) throw NonManifoldError(std::string(which) + " is not a manifold: " + r.issues.front());
    const auto bd = boundary_components(c);
    std::set<int> boundary;
    for (const auto& circle : bd.circles) boundary.insert(circle.begin(), circle.end());
    for (int v : c.squares()[s]) {
      if (boundary.count(v)) {
        throw InvalidArgument(std::string("chosen square of ") + which + " touches the boundary at vertex " +
                              c.vertices()[v]);
      }
    }
  };
  check(a, sa, "first surface");
  check(b, sb, "second surface");

  AbstractSquareComplex out;
  const int na = static_cast<int>(a.vertex_count());
  for (int v = 0; v < na + static_cast<int>(b.vertex_count()); ++v) out.add_vertex("v" + std::to_string(v));
  for (int s = 0; s < static_cast<int>(a.square_count()); ++s) {
    if (s != sa) out.add_square(a.squares()[s]);
  }
  for (int s = 0; s < static_cast<int>(b.square_count()); ++s) {
    if (s == sb) continue;
    Quad q = b.squares()[s];
    for (int& v : q) v += na;
    out.add_square(q);
  }
  const Quad& qa = a.squares()[sa];
  Quad qb = b.squares()[sb];
  for (int& v : qb) v += na;
  const int i0 = static_cast<int>(std::min_element(qa.begin(), qa.end()) - qa.begin());
  const int j0 = static_cast<int>(std::min_element(qb.begin(), qb.end()) - qb.begin());
  auto A = [&](int k) { return qa[((i0 + k) % 4 + 4) % 4]; };
  auto B = [&](int k) { return qb[((j0 - k) % 4 + 4) % 4]; };
  for (int k = 0; k < 4; ++k) out.add_square(Quad{A(k), A(k + 1), B(k + 1), B(k)});
  return out;
}

lattice::CellKey RigidMotion::apply(const lattice::CellKey& k) const {
  std::vector<int> v(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) v[i] = flip[i] * k[perm[i]] + shift[i];
  return lattice::CellKey(v);
}

namespace {

std::set<lattice::CellKey> vertex_set(const lattice::GriddedComplex& c) {
  std::set<lattice::CellKey> out;
  for (const auto& s : c.squares) {
    for (const auto& v : lattice::corners_cyclic(s)) out.insert(v);
  }
  return out;
}

}  // namespace

EmbeddedSum connected_sum_embedded_full(const lattice::GriddedComplex& a_in, const lattice::CellKey& fa,
                                        const lattice::GriddedComplex& b_in, const lattice::CellKey& fb,
                                        int normal_axis, int side_only) {
  lattice::GriddedComplex a = a_in;
  lattice::GriddedComplex b = b_in;
  while (lattice::ambient_dimension(a.ambient) < lattice::ambient_dimension(b.ambient)) a = lattice::embed_higher(a);
  while (lattice::ambient_dimension(b.ambient) < lattice::ambient_dimension(a.ambient)) b = lattice::embed_higher(b);
  const int n = lattice::ambient_dimension(a.ambient);
  auto lift = [n](lattice::CellKey k) {
    std::vector<int> v = k.coords();
    while (static_cast<int>(v.size()) < n) v.push_back(0);
    return lattice::CellKey(v);
  };
  const lattice::CellKey ka = lift(fa);
  const lattice::CellKey kb = lift(fb);
  if (!a.contains(ka)) throw InvalidArgument("square " + fa.str() + " is not in the first surface");
  if (!b.contains(kb)) throw InvalidArgument("square " + fb.str() + " is not in the second surface");

  const std::set<lattice::CellKey> va = vertex_set(a);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::string> first_collision;
  if (normal_axis >= n || (normal_axis >= 0 && (ka[normal_axis] & 1))) {
    throw InvalidArgument("requested normal axis is not normal to " + fa.str());
  }
  for (int t = 0; t < n; ++t) {
    if (ka[t] & 1) continue;
    if (normal_axis >= 0 && t != normal_axis) continue;
    for (int side : {1, -1}) {
      if (side_only != 0 && side != side_only) continue;
      lattice::CellKey cube = ka;
      cube[t] += side;
      lattice::CellKey target = ka;
      target[t] += 2 * side;
      for (const auto& p : perms) {
        // the odd axes of fb must land on those of the target face
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          if (((kb[p[i]] & 1) != 0) != ((target[i] & 1) != 0)) ok = false;
        }
        if (!ok) continue;
        for (int mask = 0; mask < (1 << n); ++mask) {
          RigidMotion m;
          m.perm = p;
          m.flip.resize(n);
          m.shift.assign(n, 0);
          for (int i = 0; i < n; ++i) m.flip[i] = (mask >> i) & 1 ? -1 : 1;
          const lattice::CellKey moved = m.apply(kb);
          for (int i = 0; i < n; ++i) m.shift[i] = target[i] - moved[i];
          std::vector<std::string> collide;
          lattice::GriddedComplex moved_b;
          moved_b.ambient = a.ambient;
          for (const auto& s : b.squares) moved_b.squares.insert(m.apply(s));
          for (const auto& v : vertex_set(moved_b)) {
            if (va.count(v)) collide.push_back(v.str());
          }
          if (!collide.empty()) {
            if (first_collision.empty()) first_collision = std::move(collide);
            continue;
          }
          EmbeddedSum out;
          out.motion = m;
          out.cube = cube;
          out.result.ambient = a.ambient;
          for (const auto& s : a.squares)
            if (s != ka) out.result.squares.insert(s);
          for (const auto& s : moved_b.squares)
            if (s != target) out.result.squares.insert(s);
          for (const auto& f : lattice::faces(cube, 2)) {
            if (f != ka && f != target) out.result.squares.insert(f);
          }
          return out;
        }
      }
    }
  }
  throw PlacementError("no rigid placement of the second surface avoids the first; colliding vertices listed",
                       first_collision);
}

lattice::GriddedComplex connected_sum_embedded(const lattice::GriddedComplex& a, const lattice::CellKey& fa,
                                               const lattice::GriddedComplex& b, const lattice::CellKey& fb) {
  return connected_sum_embedded_full(a, fa, b, fb).result;
}

}  // namespace gridforge::surface
