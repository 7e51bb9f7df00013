#include "gridforge/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "gridforge/constructors.hpp"
#include "gridforge/export.hpp"
#include "gridforge/honeycomb_surfaces.hpp"
#include "gridforge/parallel.hpp"
#include "gridforge/signature.hpp"

namespace gridforge::cli {

namespace {

using io::AnyComplex;
using io::Json;

const char* cell_name(int d) {
  static const char* names[] = {"vertex", "edge", "square", "cube", "hypercube"};
  return d >= 0 && d < 5 ? names[d] : "cell";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("bad " + what + " '" + s + "'");
  }
}

std::set<int> parse_prune(const std::string& s) {
  std::set<int> out;
  for (const auto& t : split(s, ',')) out.insert(parse_int(t, "node id"));
  return out;
}

std::vector<constructors::EndDecoration> parse_ends(const std::string& s) {
  std::vector<constructors::EndDecoration> out;
  for (const auto& item : split(s, ',')) {
    const auto colon = item.find(':');
    constructors::EndDecoration d;
    d.kind = constructors::parse_end_kind(item.substr(0, colon));
    if (colon != std::string::npos) d.truncation = parse_int(item.substr(colon + 1), "truncation");
    if (d.truncation < 0) throw InvalidArgument("truncation must be >= 0");
    out.push_back(d);
  }
  return out;
}

Json keys_json(const std::vector<coxeter::CosetKey>& keys) {
  Json a = Json::array();
  for (const auto& k : keys) a.push_back(honeycomb::key_str(k));
  return a;
}

void need_nonneg(int v, const char* what) {
  if (v < 0) throw InvalidArgument(std::string(what) + " must be >= 0");
}

std::string report_text(const surface::SurfaceReport& r) { return io::report_json(r).dump(2) + "\n"; }

// "#k" picks the k-th square in stored order; otherwise a lattice key "2,1,1".
std::size_t pick_square(const AnyComplex& c, const std::string& spec) {
  const std::size_t n = c.square_count();
  if (!spec.empty() && spec[0] == '#') {
    const int k = parse_int(spec.substr(1), "square index");
    if (k < 0 || static_cast<std::size_t>(k) >= n) {
      throw InvalidArgument("square index " + spec + " out of range (complex has " + std::to_string(n) + ")");
    }
    return static_cast<std::size_t>(k);
  }
  if (c.kind != io::Kind::Lattice) throw InvalidArgument("squares of non-lattice complexes are picked as #index");
  std::vector<int> v;
  for (const auto& t : split(spec, ',')) v.push_back(parse_int(t, "coordinate"));
  const lattice::CellKey key(v);
  auto it = c.lattice.squares.find(key);
  if (it == c.lattice.squares.end()) throw InvalidArgument("square " + key.str() + " is not in the complex");
  return static_cast<std::size_t>(std::distance(c.lattice.squares.begin(), it));
}

template <class Set>
typename Set::value_type nth(const Set& s, std::size_t i) {
  return *std::next(s.begin(), static_cast<std::ptrdiff_t>(i));
}

AnyComplex sum(const AnyComplex& a, const std::string& sa, const AnyComplex& b, const std::string& sb) {
  if (a.kind != b.kind) throw InvalidArgument("both summands must use the same kind of ambient");
  const std::size_t ia = pick_square(a, sa);
  const std::size_t ib = pick_square(b, sb);
  switch (a.kind) {
    case io::Kind::Lattice: {
      auto r = surface::connected_sum_embedded_full(a.lattice, nth(a.lattice.squares, ia), b.lattice,
                                                    nth(b.lattice.squares, ib));
      AnyComplex out = AnyComplex::of(std::move(r.result));
      out.meta["tube_cube"] = r.cube.str();
      return out;
    }
    case io::Kind::Coxeter: {
      if (a.coxeter.system->tag() != b.coxeter.system->tag()) throw InvalidArgument("summands live in different honeycombs");
      auto r = honeycomb::connected_sum_coxeter(a.coxeter, nth(a.coxeter.squares, ia), b.coxeter,
                                                nth(b.coxeter.squares, ib));
      AnyComplex out = AnyComplex::of(std::move(r.result));
      out.meta["tube_cube"] = honeycomb::key_str(r.cube);
      return out;
    }
    case io::Kind::Abstract:
      return AnyComplex::of(surface::connected_sum_abstract(a.abstract, static_cast<int>(ia), b.abstract,
                                                            static_cast<int>(ib)));
  }
  return {};
}

}  // namespace

const std::vector<std::string>& build_names() {
  static const std::vector<std::string> names = {
      "sphere",   "torus-paper", "tree-spiral", "crosscap-r4", "klein-bottle", "closed-surface", "tree-of-life",
      "pruned-tree", "hyp-torus", "hyp-pants", "hyp-tree",     "hyp-closed",     "h4-torus",
      "h4-pants", "h4-crosscap", "h4-surface"};
  return names;
}

AnyComplex build(const std::string& name, const BuildParams& p) {
  AnyComplex out;
  if (name == "sphere") {
    out = AnyComplex::of(constructors::sphere_cube());
  } else if (name == "torus-paper") {
    out = AnyComplex::of(constructors::torus_paper());
  } else if (name == "crosscap-r4") {
    out = AnyComplex::of(constructors::crosscap_paper_r4());
  } else if (name == "klein-bottle") {
    out = AnyComplex::of(constructors::klein_bottle());
  } else if (name == "closed-surface") {
    need_nonneg(p.genus, "genus");
    need_nonneg(p.crosscaps, "crosscaps");
    if (p.genus > 0 && p.crosscaps > 0) throw InvalidArgument("closed-surface takes --genus or --crosscaps, not both");
    const bool orientable = p.crosscaps == 0;
    out = AnyComplex::of(constructors::closed_surface(orientable, orientable ? p.genus : p.crosscaps));
    out.meta["orientable"] = orientable;
    out.meta[orientable ? "genus" : "crosscaps"] = orientable ? p.genus : p.crosscaps;
  } else if (name == "tree-of-life") {
    need_nonneg(p.depth, "depth");
    out = AnyComplex::of(constructors::tree_of_life(p.depth));
    out.meta["depth"] = p.depth;
  } else if (name == "pruned-tree") {
    need_nonneg(p.depth, "depth");
    need_nonneg(p.genus, "genus");
    need_nonneg(p.crosscaps, "crosscaps");
    const auto t = constructors::build_tree_of_life(p.depth);
    const auto prune = parse_prune(p.prune);
    const auto ends = parse_ends(p.ends);
    out = AnyComplex::of(constructors::prune_and_decorate(t, prune, p.genus, p.crosscaps, ends));
    out.meta["depth"] = p.depth;
    out.meta["pruned"] = prune;
    out.meta["handles"] = p.genus;
    out.meta["crosscaps"] = p.crosscaps;
    Json e = Json::array();
    for (const auto& d : ends) e.push_back(constructors::end_kind_name(d.kind) + ":" + std::to_string(d.truncation));
    out.meta["ends"] = std::move(e);
  } else if (name == "hyp-torus") {
    auto t = honeycomb::hyperbolic_torus_435_full();
    const std::size_t n = t.surface.size();
    out = AnyComplex::of(std::move(t.surface));
    out.meta["cubes"] = t.cubes.size();
    out.meta["claimed_squares"] = honeycomb::HyperbolicTorus::kClaimedSquares;
    out.meta["computed_squares"] = n;
    out.meta["parallel_edges"] = keys_json(t.parallel_edges);
  } else if (name == "hyp-pants") {
    auto pt = honeycomb::hyperbolic_pants_435_full();
    out = AnyComplex::of(std::move(pt.surface));
    out.meta["center"] = honeycomb::key_str(pt.center);
    out.meta["stem_face"] = honeycomb::key_str(pt.stem_face);
    out.meta["normal_face"] = honeycomb::key_str(pt.normal_face);
    out.meta["arm_faces"] = keys_json({pt.arm_faces[0], pt.arm_faces[1]});
  } else if (name == "hyp-tree") {
    need_nonneg(p.depth, "depth");
    auto t = honeycomb::tree_of_life_435_full(p.depth);
    out = AnyComplex::of(std::move(t.surface));
    out.meta["depth"] = p.depth;
    out.meta["pants"] = t.pants.size();
    out.meta["collisions"] = t.collisions;
  } else if (name == "hyp-closed") {
    need_nonneg(p.genus, "genus");
    out = AnyComplex::of(honeycomb::closed_orientable_435(p.genus));
    out.meta["genus"] = p.genus;
  } else if (name == "h4-torus") {
    out = AnyComplex::of(honeycomb::torus_4335());
  } else if (name == "h4-pants") {
    auto pt = honeycomb::pants_4335_full();
    out = AnyComplex::of(std::move(pt.surface));
    out.meta["hypercubes"] = keys_json({pt.hypercubes.begin(), pt.hypercubes.end()});
  } else if (name == "h4-crosscap") {
    out = AnyComplex::of(honeycomb::crosscap_abstract_34());
    out.meta["abstract"] = true;
  } else if (name == "h4-surface") {
    need_nonneg(p.genus, "genus");
    need_nonneg(p.crosscaps, "crosscaps");
    if (p.genus > 0 && p.crosscaps > 0) throw InvalidArgument("h4-surface takes --genus or --crosscaps, not both");
    const int ends = p.ends.empty() ? 0 : parse_int(p.ends, "end count");
    need_nonneg(ends, "ends");
    const auto sig = p.crosscaps > 0 ? surface::SurfaceSignature::nonorientable(p.crosscaps, ends)
                                     : surface::SurfaceSignature::orientable(p.genus, ends);
    auto s = honeycomb::surface_4335(sig);
    out = s.abstract ? AnyComplex::of(std::move(s.complex)) : AnyComplex::of(std::move(s.embedded));
    out.meta["signature"] = sig.str();
    out.meta["abstract"] = s.abstract;
  } else {
    throw InvalidArgument("unknown construction '" + name + "'");
  }
  out.meta["construction"] = name;
  return out;
}

std::map<std::pair<int, int>, std::size_t> published_incidences(const std::string& tag) {
  if (tag == "{4,3,4}") return {{{0, 1}, 6}, {{0, 2}, 12}, {{0, 3}, 8}, {{1, 2}, 4}, {{1, 3}, 4}};
  if (tag == "{4,3,5}") return {{{0, 1}, 12}, {{0, 2}, 30}, {{0, 3}, 20}, {{1, 2}, 5}, {{1, 3}, 5}};
  if (tag == "{4,3,3,4}") {
    return {{{0, 1}, 8},  {{0, 2}, 24}, {{0, 3}, 32}, {{0, 4}, 16}, {{1, 2}, 6},
            {{1, 3}, 32}, {{1, 4}, 16}, {{2, 3}, 4},  {{2, 4}, 4}};
  }
  if (tag == "{4,3,3,5}") {
    return {{{0, 1}, 120}, {{0, 2}, 720}, {{0, 3}, 1200}, {{0, 4}, 600}, {{1, 2}, 6},
            {{1, 3}, 32},  {{1, 4}, 16},  {{2, 3}, 5},    {{2, 4}, 5}};
  }
  return {};
}

std::vector<StatsRow> stats_rows(const std::string& schlafli) {
  const auto sys = coxeter::shared_system(schlafli);
  const auto published = published_incidences(sys->tag());
  const auto counts = sys->incidence_counts();
  const int n = sys->top_dim();
  const bool euclid = sys->geometry() == coxeter::Geometry::Euclidean;
  // Z^n is {4,3,...,3,4}
  const auto& sch = sys->schlafli();
  const bool cubic = sch.front() == 4 && sch.back() == 4 &&
                     std::all_of(sch.begin() + 1, sch.end() - 1, [](int m) { return m == 3; });
  std::vector<StatsRow> rows;
  for (const auto& [ij, c] : counts) {
    StatsRow r;
    r.cell = ij.first;
    r.around = ij.second;
    r.computed = c;
    r.enumerated = sys->cell_faces(sys->base_cell(r.cell), r.around).size();
    if (euclid && cubic) {
      std::vector<int> key(n, 0);
      for (int a = 0; a < r.cell; ++a) key[a] = 1;
      const lattice::CellKey cell(key);
      if (r.around > r.cell) {
        r.lattice = static_cast<std::size_t>(lattice::star_counts(n, cell).at(r.around));
      } else {
        r.lattice = lattice::faces(cell, r.around).size();
      }
    }
    if (auto it = published.find(ij); it != published.end()) r.published = it->second;
    rows.push_back(r);
  }
  return rows;
}

std::string stats_table(const std::string& schlafli) {
  const auto sys = coxeter::shared_system(schlafli);
  std::ostringstream os;
  os << "honeycomb " << sys->tag() << " (" << coxeter::geometry_name(sys->geometry()) << ")\n";
  os << std::left << std::setw(11) << "cell" << std::setw(11) << "around" << std::setw(10) << "computed"
     << std::setw(12) << "enumerated" << std::setw(9) << "lattice" << std::setw(11) << "published" << "status\n";
  for (const auto& r : stats_rows(schlafli)) {
    const std::string word = r.around == 0 ? "vertices" : std::string(cell_name(r.around)) + "s";
    os << std::setw(11) << cell_name(r.cell) << std::setw(11) << word << std::setw(10) << r.computed
       << std::setw(12) << r.enumerated << std::setw(9) << (r.lattice ? std::to_string(*r.lattice) : "-")
       << std::setw(11) << (r.published ? std::to_string(*r.published) : "-");
    os << (!r.published ? "-" : r.diff() ? "DIFF" : "ok") << "\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gridded surfaces in cubical honeycombs", "gridforge"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads for internal parallelism (0 = default)");

  std::string out_path;
  auto add_out = [&out_path](CLI::App* sub) { sub->add_option("--out,-o", out_path, "output file (default stdout)"); };

  BuildParams params;
  std::string build_name;
  auto* b = app.add_subcommand("build", "build a named construction");
  b->add_option("name", build_name, "construction name")->required()->check(CLI::IsMember(build_names()));
  b->add_option("--depth", params.depth, "tree depth");
  b->add_option("--genus", params.genus, "handles");
  b->add_option("--crosscaps", params.crosscaps, "crosscaps");
  b->add_option("--ends", params.ends, "end decorations (pruned-tree: kind:len,...) or end count (h4-surface)");
  b->add_option("--prune", params.prune, "comma-separated tree nodes to prune");
  add_out(b);

  std::string file, file_b, sq_a, sq_b, format;
  auto* v = app.add_subcommand("validate", "report manifold and topology data");
  v->add_option("file", file)->required();
  auto* c = app.add_subcommand("classify", "classify a connected compact surface");
  c->add_option("file", file)->required();
  auto* s = app.add_subcommand("sum", "gridded connected sum of two surfaces");
  s->add_option("a", file)->required();
  s->add_option("b", file_b)->required();
  s->add_option("square_a", sq_a, "square of a: lattice key like 2,1,1 or #index")->required();
  s->add_option("square_b", sq_b, "square of b")->required();
  add_out(s);
  std::string schlafli;
  auto* st = app.add_subcommand("stats", "incidence table of a honeycomb");
  st->add_option("schlafli", schlafli, "e.g. {4,3,5}")->required();
  auto* ex = app.add_subcommand("export", "write OFF, OBJ or JSON");
  ex->add_option("file", file)->required();
  ex->add_option("--format,-f", format, "off, obj or json")->required();
  add_out(ex);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const std::string& data) {
    if (out_path.empty()) {
      out << data;
    } else {
      io::write_file(out_path, data);
    }
  };

  try {
    if (threads > 0) set_thread_count(threads);
    if (b->parsed() && build_name == "tree-spiral") {
      need_nonneg(params.depth, "depth");
      const auto t = constructors::tree_spiral(params.depth);
      constructors::check_tree(t);
      emit(io::dump_tree(t));
      return 0;
    }
    if (b->parsed()) {
      const auto cx = build(build_name, params);
      emit(io::dump(cx));
      if (cx.meta.contains("collisions") && cx.meta["collisions"].get<std::size_t>() > 0) {
        err << "error: " << cx.meta["collisions"].get<std::size_t>() << " coset-key collisions\n";
        return 1;
      }
      return 0;
    }
    if (v->parsed()) {
      const auto r = surface::validate(io::to_abstract(io::load_file(file)));
      out << report_text(r);
      return r.is_manifold ? 0 : 1;
    }
    if (c->parsed()) {
      const auto cx = io::to_abstract(io::load_file(file));
      const auto r = surface::validate(cx);
      if (!r.is_manifold) {
        out << report_text(r);
        return 1;
      }
      if (r.components != 1) {
        out << report_text(r);
        err << "error: classify needs a connected surface (" << r.components << " components)\n";
        return 1;
      }
      out << report_text(surface::classify_compact(cx));
      return 0;
    }
    if (s->parsed()) {
      emit(io::dump(sum(io::load_file(file), sq_a, io::load_file(file_b), sq_b)));
      return 0;
    }
    if (st->parsed()) {
      out << stats_table(schlafli);
      return 0;
    }
    if (ex->parsed()) {
      emit(exporter::export_complex(io::load_file(file), format));
      return 0;
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PlacementError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& cell : e.cells()) err << "  " << cell << "\n";
    return 1;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace gridforge::cli
