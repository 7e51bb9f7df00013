#include "gridforge/honeycomb_surfaces.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gridforge/error.hpp"

namespace gridforge::honeycomb {

std::shared_ptr<const CoxeterSystem> system_435() { return coxeter::shared_system("{4,3,5}"); }
std::shared_ptr<const CoxeterSystem> system_4335() { return coxeter::shared_system("{4,3,3,5}"); }

std::vector<CosetKey> vertices_of(const CoxeterSystem& sys, const CosetKey& cell) {
  if (sys.cell_dim(cell) == 2) {
    auto v = sys.square_corners(cell);
    std::sort(v.begin(), v.end());
    return v;
  }
  return sys.cell_faces(cell, 0);
}

std::set<CosetKey> vertex_keys(const CoxeterComplex& c) {
  std::set<CosetKey> out;
  for (const auto& s : c.squares) {
    for (auto& v : c.system->square_corners(s)) out.insert(std::move(v));
  }
  return out;
}

bool share_vertex(const CoxeterSystem& sys, const CosetKey& a, const CosetKey& b) {
  const auto va = vertices_of(sys, a);
  const auto vb = vertices_of(sys, b);
  std::vector<CosetKey> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  return !common.empty();
}

CosetKey opposite_face(const CoxeterSystem& sys, const CosetKey& cell, const CosetKey& face) {
  for (const auto& f : sys.cell_faces(cell, sys.cell_dim(face))) {
    if (f != face && !share_vertex(sys, f, face)) return f;
  }
  throw InvalidArgument("face has no opposite face in the given cell");
}

CoxeterComplex boundary_of_cubes(std::shared_ptr<const CoxeterSystem> sys, const std::vector<CosetKey>& cubes) {
  std::map<CosetKey, int> mult;
  for (const auto& c : cubes) {
    if (sys->cell_dim(c) != 3) throw InvalidArgument("boundary_of_cubes expects 3-cells");
    for (const auto& f : sys->cell_faces(c, 2)) ++mult[f];
  }
  CoxeterComplex out;
  out.system = std::move(sys);
  for (const auto& [f, m] : mult) {
    if (m == 1) out.squares.insert(f);
  }
  return out;
}

CoxeterComplex transform(const CoxeterComplex& c, const GroupElem& g) {
  CoxeterComplex out;
  out.system = c.system;
  for (const auto& s : c.squares) out.squares.insert(c.system->coset_key(g * s.rep, s.subgroup));
  return out;
}

std::vector<GroupElem> square_isometries(const CoxeterSystem& sys, const CosetKey& from, const CosetKey& to) {
  if (sys.cell_dim(from) != 2 || sys.cell_dim(to) != 2) throw InvalidArgument("square_isometries needs squares");
  const auto stab = sys.enumerate_parabolic(sys.cell_mask(2));
  const GroupElem back = sys.inverse(from.rep);
  std::vector<GroupElem> out;
  out.reserve(stab->size());
  for (const auto& q : *stab) out.push_back(to.rep * q * back);
  return out;
}

std::string key_str(const CosetKey& k) {
  std::ostringstream os;
  os << "<mask " << k.subgroup << ": ";
  const auto& m = k.rep.matrix();
  for (int i = 0; i < m.dim(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j).str();
  }
  os << ">";
  return os.str();
}

namespace {

void require_same_system(const CoxeterComplex& a, const CoxeterComplex& b) {
  if (!a.system || !b.system || a.system->tag() != b.system->tag()) {
    throw InvalidArgument("connected sum needs two complexes in the same honeycomb");
  }
}

std::set<CosetKey> boundary_vertices(const CoxeterComplex& c) {
  std::map<std::pair<CosetKey, CosetKey>, int> edges;
  for (const auto& s : c.squares) {
    const auto v = c.system->square_corners(s);
    for (int i = 0; i < 4; ++i) {
      const CosetKey& x = v[i];
      const CosetKey& y = v[(i + 1) % 4];
      ++edges[x < y ? std::make_pair(x, y) : std::make_pair(y, x)];
    }
  }
  std::set<CosetKey> out;
  for (const auto& [e, n] : edges) {
    if (n == 1) {
      out.insert(e.first);
      out.insert(e.second);
    }
  }
  return out;
}

}  // namespace

CoxeterSum connected_sum_coxeter(const CoxeterComplex& a, const CosetKey& fa, const CoxeterComplex& b,
                                 const CosetKey& fb) {
  require_same_system(a, b);
  const CoxeterSystem& sys = *a.system;
  if (!a.contains(fa)) throw InvalidArgument("chosen square is not in the first surface");
  if (!b.contains(fb)) throw InvalidArgument("chosen square is not in the second surface");
  const std::set<CosetKey> va = vertex_keys(a);
  const std::set<CosetKey> vb = vertex_keys(b);
  const coxeter::Mask vmask = sys.cell_mask(0);
  std::vector<std::string> collision;
  for (const auto& q : sys.cell_faces(fa, 3)) {
    const CosetKey target = opposite_face(sys, q, fa);
    bool blocked = false;
    for (const auto& v : sys.square_corners(target)) {
      if (va.count(v)) {
        blocked = true;
        if (collision.empty()) collision.push_back(key_str(v));
      }
    }
    if (blocked) continue;
    for (const auto& g : square_isometries(sys, fb, target)) {
      bool clash = false;
      for (const auto& v : vb) {
        const CosetKey moved = sys.coset_key(g * v.rep, vmask);
        if (va.count(moved)) {
          clash = true;
          if (collision.empty()) collision.push_back(key_str(moved));
          break;
        }
      }
      if (clash) continue;
      CoxeterSum out;
      out.motion = g;
      out.cube = q;
      out.result.system = a.system;
      out.result.squares = a.squares;
      out.result.squares.erase(fa);
      for (const auto& s : transform(b, g).squares) {
        if (s != target) out.result.squares.insert(s);
      }
      for (const auto& f : sys.cell_faces(q, 2)) {
        if (f != fa && f != target) out.result.squares.insert(f);
      }
      return out;
    }
  }
  throw PlacementError("no isometric placement of the second surface avoids the first", collision);
}

CoxeterComplex attach_sum(const CoxeterComplex& a, const CoxeterComplex& b) {
  require_same_system(a, b);
  if (b.squares.empty()) throw InvalidArgument("cannot attach an empty surface");
  const std::set<CosetKey> bv = boundary_vertices(a);
  const CosetKey& fb = *b.squares.begin();
  std::vector<std::string> last;
  for (const auto& fa : a.squares) {
    bool interior = true;
    for (const auto& v : a.system->square_corners(fa)) interior = interior && !bv.count(v);
    if (!interior) continue;
    try {
      return connected_sum_coxeter(a, fa, b, fb).result;
    } catch (const PlacementError& e) {
      if (last.empty()) last = e.cells();
    }
  }
  throw PlacementError("no interior square admits a collision-free connected sum", last);
}

// ---- {4,3,5} ----

HyperbolicTorus hyperbolic_torus_435_full() {
  auto sys = system_435();
  HyperbolicTorus t;
  t.center = sys->base_cell(3);
  const auto edges = sys->cell_faces(t.center, 1);
  std::map<CosetKey, CosetKey> parent;
  for (const auto& e : edges) parent.emplace(e, e);
  auto find = [&](CosetKey x) {
    while (!(parent.at(x) == x)) x = parent.at(x);
    return x;
  };
  for (const auto& sq : sys->cell_faces(t.center, 2)) {
    const auto se = sys->cell_faces(sq, 1);
    for (std::size_t i = 0; i < se.size(); ++i) {
      for (std::size_t j = i + 1; j < se.size(); ++j) {
        if (share_vertex(*sys, se[i], se[j])) continue;
        CosetKey ri = find(se[i]);
        CosetKey rj = find(se[j]);
        if (!(ri == rj)) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  const CosetKey root = find(sys->base_cell(1));
  for (const auto& e : edges) {
    if (find(e) == root) t.parallel_edges.push_back(e);
  }
  if (t.parallel_edges.size() != 4) throw Error("cube edge class does not have 4 edges");
  std::set<CosetKey> ring;
  for (const auto& e : t.parallel_edges) {
    auto fan = sys->cell_faces(e, 3);
    if (fan.size() != 5 || !std::binary_search(fan.begin(), fan.end(), t.center)) {
      throw Error("edge fan does not close with 5 cubes around the center");
    }
    for (const auto& c : fan) {
      if (c != t.center) ring.insert(c);
    }
    t.fans.push_back(std::move(fan));
  }
  t.cubes.assign(ring.begin(), ring.end());
  t.surface = boundary_of_cubes(sys, t.cubes);
  return t;
}

CoxeterComplex hyperbolic_torus_435() { return hyperbolic_torus_435_full().surface; }

namespace {

struct Frame {
  CosetKey center;
  CosetKey stem_face;
  CosetKey normal_face;
};

// The other face of cube y containing the edge shared by faces n and f (f is a face of y).
CosetKey transport(const CoxeterSystem& sys, const CosetKey& n, const CosetKey& f, const CosetKey& y) {
  const auto vn = vertices_of(sys, n);
  const auto vf = vertices_of(sys, f);
  std::vector<CosetKey> edge;
  std::set_intersection(vn.begin(), vn.end(), vf.begin(), vf.end(), std::back_inserter(edge));
  if (edge.size() != 2) throw Error("transported face does not meet the crossing face in an edge");
  for (const auto& g : sys.cell_faces(y, 2)) {
    if (g == f) continue;
    const auto vg = vertices_of(sys, g);
    if (std::binary_search(vg.begin(), vg.end(), edge[0]) && std::binary_search(vg.begin(), vg.end(), edge[1])) {
      return g;
    }
  }
  throw Error("no face continues the transported face");
}

struct PantsCells {
  CosetKey center;
  std::array<CosetKey, 2> arms;
  CosetKey stem;
  std::array<CosetKey, 2> arm_faces;
  std::array<CosetKey, 2> arm_holes;
  CosetKey stem_hole;
};

PantsCells pants_at(const CoxeterSystem& sys, const Frame& fr) {
  PantsCells p;
  p.center = fr.center;
  const CosetKey opp_normal = opposite_face(sys, fr.center, fr.normal_face);
  std::vector<CosetKey> arm_faces;
  for (const auto& f : sys.cell_faces(fr.center, 2)) {
    if (f == fr.stem_face || f == fr.normal_face || f == opp_normal) continue;
    if (!share_vertex(sys, f, fr.stem_face)) continue;
    arm_faces.push_back(f);
  }
  if (arm_faces.size() != 2) throw Error("pants frame does not leave two arm faces");
  for (int i = 0; i < 2; ++i) {
    p.arm_faces[i] = arm_faces[i];
    p.arms[i] = sys.neighbor(fr.center, arm_faces[i]);
    p.arm_holes[i] = opposite_face(sys, p.arms[i], arm_faces[i]);
  }
  p.stem = sys.neighbor(fr.center, fr.stem_face);
  p.stem_hole = opposite_face(sys, p.stem, fr.stem_face);
  return p;
}

Frame root_frame(const CoxeterSystem& sys) {
  Frame fr;
  fr.center = sys.base_cell(3);
  const auto faces = sys.cell_faces(fr.center, 2);
  fr.stem_face = faces.front();
  for (const auto& f : faces) {
    if (f != fr.stem_face && share_vertex(sys, f, fr.stem_face)) {
      fr.normal_face = f;
      break;
    }
  }
  return fr;
}

}  // namespace

Pants435 hyperbolic_pants_435_full() {
  auto sys = system_435();
  const Frame fr = root_frame(*sys);
  const PantsCells c = pants_at(*sys, fr);
  Pants435 p;
  p.center = c.center;
  p.arms = c.arms;
  p.stem = c.stem;
  p.arm_faces = c.arm_faces;
  p.stem_face = fr.stem_face;
  p.normal_face = fr.normal_face;
  p.holes = {c.arm_holes[0], c.arm_holes[1], c.stem_hole};
  p.surface = boundary_of_cubes(sys, {c.center, c.arms[0], c.arms[1], c.stem});
  for (const auto& h : p.holes) {
    if (!p.surface.squares.erase(h)) throw Error("pants hole is not a boundary square");
  }
  return p;
}

CoxeterComplex hyperbolic_pants_435() { return hyperbolic_pants_435_full().surface; }

HyperbolicTree tree_of_life_435_full(int depth) {
  if (depth < 0) throw InvalidArgument("depth must be non-negative");
  auto sys = system_435();
  HyperbolicTree t;
  t.depth = depth;
  std::vector<Frame> frames{root_frame(*sys)};
  std::vector<PantsCells> cells;
  std::vector<int> level{0};
  t.parent.push_back(-1);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    cells.push_back(pants_at(*sys, frames[i]));
    const PantsCells& p = cells.back();
    t.pants.push_back({p.center, p.arms[0], p.arms[1], p.stem});
    if (level[i] == depth) continue;
    for (int k = 0; k < 2; ++k) {
      // child stem sits across the arm hole, its center one cube further on
      const CosetKey stem = sys->neighbor(p.arms[k], p.arm_holes[k]);
      const CosetKey stem_face = opposite_face(*sys, stem, p.arm_holes[k]);
      Frame child;
      child.center = sys->neighbor(stem, stem_face);
      child.stem_face = stem_face;
      const CosetKey n_arm = transport(*sys, frames[i].normal_face, p.arm_faces[k], p.arms[k]);
      const CosetKey n_stem = transport(*sys, n_arm, p.arm_holes[k], stem);
      child.normal_face = transport(*sys, n_stem, stem_face, child.center);
      frames.push_back(child);
      level.push_back(level[i] + 1);
      t.parent.push_back(static_cast<int>(i));
    }
  }
  // Children reuse the parent-side stem computed in pants_at; check that.
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const PantsCells& par = cells[t.parent[i]];
    const bool ok = cells[i].stem == sys->neighbor(par.arms[0], par.arm_holes[0]) ||
                    cells[i].stem == sys->neighbor(par.arms[1], par.arm_holes[1]);
    if (!ok) throw Error("child pants stem does not meet its parent's arm hole");
  }

  std::vector<std::string> report;
  std::map<CosetKey, int> owner;
  for (std::size_t i = 0; i < t.pants.size(); ++i) {
    for (const auto& c : t.pants[i]) {
      auto [it, fresh] = owner.emplace(c, static_cast<int>(i));
      if (!fresh) {
        ++t.collisions;
        report.push_back("cube " + key_str(c) + " used by pants " + std::to_string(it->second) + " and " +
                         std::to_string(i));
      }
    }
  }
  std::vector<std::set<CosetKey>> verts(t.pants.size());
  for (std::size_t i = 0; i < t.pants.size(); ++i) {
    for (const auto& c : t.pants[i]) {
      for (auto& v : sys->cell_faces(c, 0)) verts[i].insert(std::move(v));
    }
  }
  for (std::size_t i = 0; i < t.pants.size(); ++i) {
    for (std::size_t j = i + 1; j < t.pants.size(); ++j) {
      std::set<CosetKey> allowed;
      if (t.parent[j] == static_cast<int>(i)) {
        const PantsCells& par = cells[i];
        const int k = cells[j].stem == sys->neighbor(par.arms[0], par.arm_holes[0]) ? 0 : 1;
        for (auto& v : sys->square_corners(par.arm_holes[k])) allowed.insert(std::move(v));
      }
      for (const auto& v : verts[i]) {
        if (verts[j].count(v) && !allowed.count(v)) {
          ++t.collisions;
          report.push_back("pants " + std::to_string(i) + " and " + std::to_string(j) + " touch at vertex " +
                           key_str(v));
          break;
        }
      }
    }
  }
  if (t.collisions) {
    throw PlacementError("hyperbolic tree of depth " + std::to_string(depth) + " has " +
                             std::to_string(t.collisions) + " collisions",
                         report);
  }
  std::vector<CosetKey> cubes;
  for (const auto& p : t.pants) cubes.insert(cubes.end(), p.begin(), p.end());
  t.surface = boundary_of_cubes(sys, cubes);
  return t;
}

CoxeterComplex tree_of_life_435(int depth) { return tree_of_life_435_full(depth).surface; }

CoxeterComplex closed_orientable_435(int genus) {
  if (genus < 0) throw InvalidArgument("genus must be non-negative");
  auto sys = system_435();
  if (genus == 0) return boundary_of_cubes(sys, {sys->base_cell(3)});
  const CoxeterComplex torus = hyperbolic_torus_435();
  CoxeterComplex out = torus;
  for (int i = 1; i < genus; ++i) out = attach_sum(out, torus);
  return out;
}

// ---- {4,3,3,5} ----

Torus4335 torus_4335_full() {
  auto sys = system_4335();
  Torus4335 t;
  t.hypercube = sys->base_cell(4);
  const auto cubes = sys->cell_faces(t.hypercube, 3);
  const CosetKey a = cubes.front();
  const CosetKey a2 = opposite_face(*sys, t.hypercube, a);
  CosetKey b;
  bool found = false;
  for (const auto& c : cubes) {
    if (c != a && c != a2) {
      b = c;
      found = true;
      break;
    }
  }
  if (!found) throw Error("hypercube has too few cubes");
  const CosetKey b2 = opposite_face(*sys, t.hypercube, b);
  t.ring = {a, b, a2, b2};
  t.surface = boundary_of_cubes(sys, t.ring);
  return t;
}

CoxeterComplex torus_4335() { return torus_4335_full().surface; }

namespace {

CosetKey common_face(const CoxeterSystem& sys, const CosetKey& x, const CosetKey& y, int dim) {
  const auto fx = sys.cell_faces(x, dim);
  const auto fy = sys.cell_faces(y, dim);
  std::vector<CosetKey> common;
  std::set_intersection(fx.begin(), fx.end(), fy.begin(), fy.end(), std::back_inserter(common));
  if (common.size() != 1) throw Error("cells do not meet in a single common face");
  return common.front();
}

// The 3-cell of hypercube h containing square s, other than `not_this`.
CosetKey other_cube_through(const CoxeterSystem& sys, const CosetKey& h, const CosetKey& s, const CosetKey& not_this) {
  for (const auto& c : sys.cell_faces(h, 3)) {
    if (c == not_this) continue;
    const auto f = sys.cell_faces(c, 2);
    if (std::binary_search(f.begin(), f.end(), s)) return c;
  }
  throw Error("no second cube through the square inside the hypercube");
}

}  // namespace

Pants4335 pants_4335_full() {
  auto sys = system_4335();
  Pants4335 p;
  const CosetKey c2 = sys->base_cell(4);
  const auto cubes = sys->cell_faces(c2, 3);
  const CosetKey k1 = cubes.front();
  const CosetKey k1b = opposite_face(*sys, c2, k1);
  const CosetKey c1 = sys->neighbor(c2, k1);
  const CosetKey c3 = sys->neighbor(c2, k1b);
  CosetKey f2;
  for (const auto& c : cubes) {
    if (c != k1 && c != k1b) {
      f2 = c;
      break;
    }
  }
  const CosetKey s12 = common_face(*sys, f2, k1, 2);
  const CosetKey s23 = common_face(*sys, f2, k1b, 2);
  const CosetKey f1 = other_cube_through(*sys, c1, s12, k1);
  const CosetKey f3 = other_cube_through(*sys, c3, s23, k1b);
  p.hypercubes = {c1, c2, c3};
  p.faces = {f1, f2, f3};
  p.shared = {s12, s23};
  p.surface.system = sys;
  for (const auto& f : {f1, f2, f3}) {
    for (const auto& s : sys->cell_faces(f, 2)) p.surface.squares.insert(s);
  }
  p.surface.squares.erase(s12);
  p.surface.squares.erase(s23);
  const CosetKey h1 = opposite_face(*sys, f1, s12);
  const CosetKey h3 = opposite_face(*sys, f3, s23);
  CosetKey h2;
  for (const auto& s : sys->cell_faces(f2, 2)) {
    if (s != s12 && s != s23) {
      h2 = s;
      break;
    }
  }
  p.holes = {h1, h2, h3};
  for (const auto& h : p.holes) {
    if (!p.surface.squares.erase(h)) throw Error("pants hole is not on the surface");
  }
  return p;
}

CoxeterComplex pants_4335() { return pants_4335_full().surface; }

surface::AbstractSquareComplex crosscap_abstract_34() {
  constexpr int n = 6;
  auto on_boundary = [](int i, int j) {
    if (i == 0 || j == 0 || i == n || j == n) return true;
    return (i == 1 && j == 1) || (i == n - 1 && j == n - 1);
  };
  auto label = [&](int i, int j) {
    if (on_boundary(i, j)) {
      // central symmetry pairs each boundary point with its antipode
      const int ii = n - i;
      const int jj = n - j;
      if (std::make_pair(ii, jj) < std::make_pair(i, j)) {
        i = ii;
        j = jj;
      }
    }
    return std::to_string(i) + "," + std::to_string(j);
  };
  surface::AbstractSquareComplex c;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((i == 0 && j == 0) || (i == n - 1 && j == n - 1)) continue;
      c.add_square(std::array<std::string, 4>{label(i, j), label(i + 1, j), label(i + 1, j + 1), label(i, j + 1)});
    }
  }
  return c;
}

namespace {

// Glue pants copy `piece` (hole hp) onto the hole h of `base` by an isometry
// that fixes h and keeps the copy away from the rest of base.
bool glue_at_hole(CoxeterComplex& base, std::vector<CosetKey>& holes, std::size_t which, const Pants4335& piece,
                  std::size_t piece_hole) {
  const CoxeterSystem& sys = *base.system;
  const CosetKey h = holes[which];
  const std::set<CosetKey> vb = vertex_keys(base);
  const auto corners = sys.square_corners(h);
  const std::set<CosetKey> rim(corners.begin(), corners.end());
  for (const auto& g : square_isometries(sys, piece.holes[piece_hole], h)) {
    const CoxeterComplex moved = transform(piece.surface, g);
    bool ok = true;
    for (const auto& v : vertex_keys(moved)) {
      if (vb.count(v) && !rim.count(v)) {
        ok = false;
        break;
      }
    }
    for (const auto& s : moved.squares) ok = ok && !base.contains(s);
    if (!ok) continue;
    base.squares.insert(moved.squares.begin(), moved.squares.end());
    holes.erase(holes.begin() + static_cast<long>(which));
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != piece_hole) holes.push_back(sys.coset_key(g * piece.holes[k].rep, piece.holes[k].subgroup));
    }
    return true;
  }
  return false;
}

}  // namespace

Surface4335 surface_4335(const surface::SurfaceSignature& sig) {
  sig.check();
  if (!sig.finite_type()) {
    throw InvalidArgument("unsupported signature: only finite-type surfaces (finite genus, planar ends) can be built");
  }
  const int ends = static_cast<int>(sig.ends.size());
  const int handles = *sig.genus;
  const int crosscaps = sig.crosscaps;
  const Pants4335 pants = pants_4335_full();
  CoxeterComplex s = pants.surface;
  std::vector<CosetKey> holes(pants.holes.begin(), pants.holes.end());
  while (static_cast<int>(holes.size()) < ends) {
    bool glued = false;
    for (std::size_t h = 0; h < holes.size() && !glued; ++h) {
      for (std::size_t k = 0; k < 3 && !glued; ++k) glued = glue_at_hole(s, holes, h, pants, k);
    }
    if (!glued) throw PlacementError("no collision-free pants placement for the requested ends", {});
  }
  while (static_cast<int>(holes.size()) > ends) {
    s.squares.insert(holes.back());
    holes.pop_back();
  }
  const CoxeterComplex torus = torus_4335();
  for (int i = 0; i < handles; ++i) s = attach_sum(s, torus);

  Surface4335 out;
  out.embedded = s;
  out.complex = surface::to_abstract(s);
  if (crosscaps > 0) {
    out.abstract = true;
    const surface::AbstractSquareComplex cap = crosscap_abstract_34();
    for (int i = 0; i < crosscaps; ++i) {
      const auto bd = surface::boundary_components(out.complex);
      std::set<int> rim;
      for (const auto& circle : bd.circles) rim.insert(circle.begin(), circle.end());
      int sa = -1;
      for (int q = 0; q < static_cast<int>(out.complex.square_count()) && sa < 0; ++q) {
        bool interior = true;
        for (int v : out.complex.squares()[q]) interior = interior && !rim.count(v);
        if (interior) sa = q;
      }
      if (sa < 0) throw Error("no interior square left for a crosscap");
      out.complex = surface::connected_sum_abstract(out.complex, sa, cap, 0);
    }
    out.embedded = CoxeterComplex{};
  }
  const auto report = surface::classify_compact(out.complex);
  if (!surface::matches(sig, report)) {
    throw Error("built surface '" + report.class_name + "' does not match the signature '" + sig.str() + "'");
  }
  return out;
}

}  // namespace gridforge::honeycomb
