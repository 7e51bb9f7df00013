#pragma once

#include <string>

#include "json.hpp"

#include "gridforge/constructors.hpp"
#include "gridforge/coxeter.hpp"
#include "gridforge/error.hpp"
#include "gridforge/surface.hpp"

namespace gridforge::io {

using Json = nlohmann::ordered_json;

// Malformed input; offset is the byte position reported by the parser (or 0).
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t offset) : InvalidArgument(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class Kind { Lattice, Coxeter, Abstract };

// Any square complex the tool reads or writes, plus free-form metadata that
// is carried through but ignored by the loaders.
struct AnyComplex {
  Kind kind = Kind::Lattice;
  lattice::GriddedComplex lattice;
  coxeter::CoxeterComplex coxeter;
  surface::AbstractSquareComplex abstract;
  Json meta = Json::object();

  static AnyComplex of(lattice::GriddedComplex c);
  static AnyComplex of(coxeter::CoxeterComplex c);
  static AnyComplex of(surface::AbstractSquareComplex c);
  std::size_t square_count() const;
};

surface::AbstractSquareComplex to_abstract(const AnyComplex& c);

// One square per line, deterministic.
std::string dump(const AnyComplex& c);
AnyComplex parse_complex(const std::string& text);
AnyComplex load_file(const std::string& path);

Json key_json(const coxeter::CosetKey& k);
coxeter::CosetKey key_from_json(const coxeter::CoxeterSystem& sys, const Json& j);

Json report_json(const surface::SurfaceReport& r);
Json tree_json(const constructors::TreeEmbedding& t);
// tree_json laid out with one path or edge per line.
std::string dump_tree(const constructors::TreeEmbedding& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace gridforge::io
