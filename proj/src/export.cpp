#include "gridforge/export.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>

#include <Eigen/Dense>

namespace gridforge::exporter {

namespace {

std::string num(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

// Eigen-frame of the Tits form plus the base vertex vector, per system.
struct KleinFrame {
  Eigen::MatrixXd basis;  // columns: eigenvectors scaled by sqrt|lambda|
  int time_axis = 0;
  Eigen::VectorXd v0;
};

KleinFrame make_frame(const coxeter::CoxeterSystem& sys) {
  const int n = sys.rank();
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = static_cast<double>(sys.gram()(i, j).to_long_double());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
  KleinFrame f;
  f.basis = es.eigenvectors();
  int negatives = 0;
  for (int i = 0; i < n; ++i) {
    const double lam = es.eigenvalues()(i);
    if (std::abs(lam) < 1e-12) throw InvalidArgument("Tits form of " + sys.tag() + " is degenerate; no Klein model");
    if (lam < 0) {
      ++negatives;
      f.time_axis = i;
    }
    f.basis.col(i) *= std::sqrt(std::abs(lam));
  }
  if (negatives != 1) throw InvalidArgument(sys.tag() + " is not hyperbolic; no Klein model");
  const auto inv = sys.gram().inverse();
  f.v0.resize(n);
  for (int i = 0; i < n; ++i) f.v0(i) = static_cast<double>(inv(i, 0).to_long_double());
  return f;
}

const KleinFrame& frame_for(const coxeter::CoxeterSystem& sys) {
  static std::mutex mu;
  static std::map<std::string, KleinFrame> frames;
  std::lock_guard<std::mutex> lock(mu);
  auto it = frames.find(sys.tag());
  if (it == frames.end()) it = frames.emplace(sys.tag(), make_frame(sys)).first;
  return it->second;
}

}  // namespace

std::vector<double> klein_point(const coxeter::CoxeterSystem& sys, const coxeter::GroupElem& w) {
  const KleinFrame& f = frame_for(sys);
  const int n = sys.rank();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(w.matrix()(i, j).to_long_double());
  const Eigen::VectorXd y = f.basis.transpose() * (m * f.v0);
  const double t = y(f.time_axis);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    if (i != f.time_axis) out.push_back(y(i) / t);
  }
  return out;
}

Mesh mesh_of(const io::AnyComplex& c) {
  Mesh m;
  switch (c.kind) {
    case io::Kind::Lattice: {
      const int n = lattice::ambient_dimension(c.lattice.ambient);
      m.dim = n < 3 ? 3 : n;
      std::map<lattice::CellKey, int> id;
      for (const auto& s : c.lattice.squares) {
        for (const auto& v : lattice::corners_cyclic(s)) id.emplace(v, 0);
      }
      for (auto& [v, i] : id) {
        i = static_cast<int>(m.points.size());
        std::vector<double> p(m.dim, 0.0);
        for (int a = 0; a < n; ++a) p[a] = v[a] / 2.0;
        m.points.push_back(std::move(p));
      }
      for (const auto& s : c.lattice.squares) {
        const auto cs = lattice::corners_cyclic(s);
        m.faces.push_back({id.at(cs[0]), id.at(cs[1]), id.at(cs[2]), id.at(cs[3])});
      }
      return m;
    }
    case io::Kind::Coxeter: {
      if (c.coxeter.squares.empty()) return m;
      const auto& sys = *c.coxeter.system;
      if (sys.geometry() != coxeter::Geometry::Hyperbolic) {
        throw InvalidArgument("export of " + sys.tag() + " complexes is not supported; only hyperbolic honeycombs have a Klein model");
      }
      m.dim = sys.rank() - 1;
      std::vector<std::vector<coxeter::CosetKey>> corners;
      std::map<coxeter::CosetKey, int> id;
      for (const auto& s : c.coxeter.squares) {
        corners.push_back(sys.square_corners(s));
        for (const auto& v : corners.back()) id.emplace(v, 0);
      }
      for (auto& [v, i] : id) {
        i = static_cast<int>(m.points.size());
        m.points.push_back(klein_point(sys, v.rep));
      }
      for (const auto& cs : corners) m.faces.push_back({id.at(cs[0]), id.at(cs[1]), id.at(cs[2]), id.at(cs[3])});
      return m;
    }
    case io::Kind::Abstract:
      throw InvalidArgument("abstract complexes have no coordinates to export");
  }
  return m;
}

std::string to_off(const Mesh& m) {
  std::ostringstream os;
  os << (m.dim == 3 ? "OFF" : std::to_string(m.dim) + "OFF") << "\n";
  os << m.points.size() << " " << m.faces.size() << " 0\n";
  for (const auto& p : m.points) {
    for (std::size_t a = 0; a < p.size(); ++a) os << (a ? " " : "") << num(p[a]);
    os << "\n";
  }
  for (const auto& f : m.faces) os << "4 " << f[0] << " " << f[1] << " " << f[2] << " " << f[3] << "\n";
  return os.str();
}

std::string to_obj(const Mesh& m) {
  std::ostringstream os;
  if (m.dim > 4) throw InvalidArgument("OBJ export supports at most 4 dimensions");
  for (const auto& p : m.points) {
    double x = p[0], y = p[1], z = p[2];
    if (m.dim == 4) {
      x += p[3] / 2;
      y += p[3] / 4;
      z += p[3] / 8;
    }
    os << "v " << num(x) << " " << num(y) << " " << num(z) << "\n";
  }
  for (const auto& f : m.faces) os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << " " << f[3] + 1 << "\n";
  return os.str();
}

std::string export_complex(const io::AnyComplex& c, const std::string& format) {
  if (format == "json") return io::dump(c);
  if (format == "off") return to_off(mesh_of(c));
  if (format == "obj") return to_obj(mesh_of(c));
  throw InvalidArgument("unknown export format '" + format + "' (expected off, obj or json)");
}

}  // namespace gridforge::exporter
