#pragma once

#include <string>
#include <vector>

#include "gridforge/io.hpp"

namespace gridforge::exporter {

// Polygon mesh with one quadrilateral per square, vertices in dim-space.
struct Mesh {
  int dim = 3;
  std::vector<std::vector<double>> points;
  std::vector<surface::Quad> faces;
};

// Lattice: halved barycenter coordinates. Coxeter: Klein model of the
// hyperbolic space the Tits form lives on. Abstract complexes have no
// coordinates and are rejected.
Mesh mesh_of(const io::AnyComplex& c);

// Klein-model point of the vertex coset w P_0.
std::vector<double> klein_point(const coxeter::CoxeterSystem& sys, const coxeter::GroupElem& w);

std::string to_off(const Mesh& m);
// OBJ is 3D only; 4D meshes go through the oblique map (x + w/2, y + w/4, z + w/8).
std::string to_obj(const Mesh& m);

// format is "off", "obj" or "json".
std::string export_complex(const io::AnyComplex& c, const std::string& format);

}  // namespace gridforge::exporter
