#include "gridforge/io.hpp"

#include <fstream>
#include <sstream>

namespace gridforge::io {

AnyComplex AnyComplex::of(lattice::GriddedComplex c) {
  AnyComplex a;
  a.kind = Kind::Lattice;
  a.lattice = std::move(c);
  return a;
}

AnyComplex AnyComplex::of(coxeter::CoxeterComplex c) {
  AnyComplex a;
  a.kind = Kind::Coxeter;
  a.coxeter = std::move(c);
  return a;
}

AnyComplex AnyComplex::of(surface::AbstractSquareComplex c) {
  AnyComplex a;
  a.kind = Kind::Abstract;
  a.abstract = std::move(c);
  return a;
}

std::size_t AnyComplex::square_count() const {
  switch (kind) {
    case Kind::Lattice:
      return lattice.size();
    case Kind::Coxeter:
      return coxeter.size();
    case Kind::Abstract:
      return abstract.square_count();
  }
  return 0;
}

surface::AbstractSquareComplex to_abstract(const AnyComplex& c) {
  switch (c.kind) {
    case Kind::Lattice:
      return surface::to_abstract(c.lattice);
    case Kind::Coxeter:
      return surface::to_abstract(c.coxeter);
    case Kind::Abstract:
      return c.abstract;
  }
  return {};
}

Json key_json(const coxeter::CosetKey& k) {
  Json rep = Json::array();
  const auto& m = k.rep.matrix();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) {
      Json e = Json::array();
      for (int q = 0; q < 4; ++q) e.push_back(m(i, j).coeff(q).str());
      row.push_back(std::move(e));
    }
    rep.push_back(std::move(row));
  }
  Json out = Json::object();
  out["subgroup"] = k.subgroup;
  out["rep"] = std::move(rep);
  return out;
}

coxeter::CosetKey key_from_json(const coxeter::CoxeterSystem& sys, const Json& j) {
  if (!j.is_object() || !j.contains("subgroup") || !j.contains("rep")) {
    throw ParseError("coset key needs \"subgroup\" and \"rep\"", 0);
  }
  if (!j["subgroup"].is_number_unsigned()) throw ParseError("coset key subgroup must be a bitmask", 0);
  const auto mask = j["subgroup"].get<std::uint64_t>();
  if (mask > sys.full_mask()) throw ParseError("coset key subgroup has bits beyond the rank", 0);
  const Json& rep = j["rep"];
  const int n = sys.rank();
  if (!rep.is_array() || static_cast<int>(rep.size()) != n) {
    throw ParseError("coset key rep must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix", 0);
  }
  coxeter::Matrix m(n);
  for (int r = 0; r < n; ++r) {
    if (!rep[r].is_array() || static_cast<int>(rep[r].size()) != n) throw ParseError("malformed matrix row", 0);
    for (int c = 0; c < n; ++c) {
      const Json& e = rep[r][c];
      if (!e.is_array() || e.size() != 4) throw ParseError("matrix entries are [a, b, c, d] quadruples", 0);
      std::array<Rational, 4> q;
      for (int t = 0; t < 4; ++t) {
        if (!e[t].is_string()) throw ParseError("field coefficients are rational strings", 0);
        try {
          q[t] = Rational::parse(e[t].get<std::string>());
        } catch (const InvalidArgument& ex) {
          throw ParseError(ex.what(), 0);
        }
      }
      m(r, c) = FieldElem(q[0], q[1], q[2], q[3]);
    }
  }
  if (!(m.transpose() * sys.gram() * m == sys.gram())) {
    throw ParseError("coset key rep does not preserve the Tits form of " + sys.tag(), 0);
  }
  return sys.coset_key(coxeter::GroupElem(std::move(m)), static_cast<coxeter::Mask>(mask));
}

std::string dump(const AnyComplex& c) {
  std::ostringstream os;
  os << "{\n";
  auto list = [&os](const std::vector<std::string>& items) {
    os << "[";
    for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ",\n    " : "\n    ") << items[i];
    os << (items.empty() ? "]" : "\n  ]");
  };
  std::vector<std::string> items;
  switch (c.kind) {
    case Kind::Lattice: {
      os << "  \"ambient\": " << Json(lattice::ambient_tag(c.lattice.ambient)).dump() << ",\n";
      for (const auto& s : c.lattice.squares) items.push_back(Json(s.coords()).dump());
      os << "  \"squares\": ";
      list(items);
      break;
    }
    case Kind::Coxeter: {
      const std::string tag = c.coxeter.system ? c.coxeter.system->tag() : "{4,3,5}";
      os << "  \"ambient\": " << Json("coxeter" + tag).dump() << ",\n";
      for (const auto& s : c.coxeter.squares) items.push_back(key_json(s).dump());
      os << "  \"squares\": ";
      list(items);
      break;
    }
    case Kind::Abstract: {
      os << "  \"vertices\": " << Json(c.abstract.vertices()).dump() << ",\n";
      for (const auto& q : c.abstract.squares()) {
        Json sq = Json::array();
        for (int v : q) sq.push_back(c.abstract.vertices()[v]);
        items.push_back(sq.dump());
      }
      os << "  \"squares\": ";
      list(items);
      break;
    }
  }
  if (!c.meta.empty()) os << ",\n  \"meta\": " << c.meta.dump();
  os << "\n}\n";
  return os.str();
}

AnyComplex parse_complex(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object", 0);
  if (!j.contains("squares") || !j["squares"].is_array()) throw ParseError("missing \"squares\" array", 0);
  AnyComplex out;
  if (j.contains("meta")) out.meta = j["meta"];
  const Json& squares = j["squares"];
  try {
    if (j.contains("vertices")) {
      out.kind = Kind::Abstract;
      if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array", 0);
      for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex ids must be strings", 0);
        out.abstract.add_vertex(v.get<std::string>());
      }
      for (const auto& s : squares) {
        if (!s.is_array() || s.size() != 4) throw ParseError("each square lists 4 vertex ids", 0);
        surface::Quad q;
        for (int i = 0; i < 4; ++i) {
          if (!s[i].is_string()) throw ParseError("vertex ids must be strings", 0);
          q[i] = out.abstract.vertex_id(s[i].get<std::string>());
          if (q[i] < 0) throw ParseError("square uses undeclared vertex '" + s[i].get<std::string>() + "'", 0);
        }
        out.abstract.add_square(q);
      }
      return out;
    }
    if (!j.contains("ambient") || !j["ambient"].is_string()) throw ParseError("missing \"ambient\" tag", 0);
    const std::string amb = j["ambient"].get<std::string>();
    if (amb.rfind("coxeter", 0) == 0) {
      out.kind = Kind::Coxeter;
      out.coxeter.system = coxeter::shared_system(amb.substr(7));
      for (const auto& s : squares) {
        auto key = key_from_json(*out.coxeter.system, s);
        if (out.coxeter.system->cell_dim(key) != 2) throw ParseError("coset key is not a square", 0);
        if (!out.coxeter.squares.insert(std::move(key)).second) throw ParseError("duplicate square", 0);
      }
      return out;
    }
    out.kind = Kind::Lattice;
    out.lattice.ambient = lattice::parse_ambient(amb);
    const int n = lattice::ambient_dimension(out.lattice.ambient);
    for (const auto& s : squares) {
      if (!s.is_array() || static_cast<int>(s.size()) != n) {
        throw ParseError("each square needs " + std::to_string(n) + " integer coordinates", 0);
      }
      std::vector<int> v;
      for (const auto& x : s) {
        if (!x.is_number_integer()) throw ParseError("coordinates must be integers", 0);
        v.push_back(x.get<int>());
      }
      lattice::CellKey k(v);
      if (lattice::cell_dim(k) != 2) throw ParseError("cell " + k.str() + " is not a square", 0);
      if (!out.lattice.squares.insert(k).second) throw ParseError("duplicate square " + k.str(), 0);
    }
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << data;
}

AnyComplex load_file(const std::string& path) { return parse_complex(read_file(path)); }

Json report_json(const surface::SurfaceReport& r) {
  Json j = Json::object();
  j["is_manifold"] = r.is_manifold;
  j["is_closed"] = r.is_closed;
  j["components"] = r.components;
  j["euler"] = r.euler;
  j["orientable"] = r.orientable;
  j["boundary_circles"] = r.boundary_circles;
  j["genus_or_crosscaps"] = r.genus_or_crosscaps;
  j["class_name"] = r.class_name;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["squares"] = r.squares;
  j["issues"] = r.issues;
  if (!r.component_classes.empty()) j["component_classes"] = r.component_classes;
  return j;
}

Json tree_json(const constructors::TreeEmbedding& t) {
  Json j = Json::object();
  j["ambient"] = "Z2";
  j["depth"] = t.depth;
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(e.coords());
  j["edges"] = std::move(edges);
  Json tri = Json::array();
  for (const auto& v : t.trivalent_vertices) tri.push_back(v.coords());
  j["trivalent"] = std::move(tri);
  Json paths = Json::array();
  for (const auto& p : t.paths) {
    Json pj = Json::object();
    pj["name"] = p.name;
    pj["from"] = p.from_node;
    pj["to"] = p.to_node;
    Json w = Json::array();
    for (const auto& [x, y] : p.waypoints) w.push_back({x, y});
    pj["waypoints"] = std::move(w);
    paths.push_back(std::move(pj));
  }
  j["paths"] = std::move(paths);
  return j;
}

std::string dump_tree(const constructors::TreeEmbedding& t) {
  const Json j = tree_json(t);
  std::ostringstream os;
  os << "{\n";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    os << (first ? "" : ",\n") << "  " << Json(k).dump() << ": ";
    first = false;
    if (!v.is_array() || v.empty()) {
      os << v.dump();
      continue;
    }
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ",\n    " : "\n    ") << v[i].dump();
    os << "\n  ]";
  }
  os << "\n}\n";
  return os.str();
}

}  // namespace gridforge::io
