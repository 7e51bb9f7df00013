#include "gridforge/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "gridforge/error.hpp"

namespace gridforge::lattice {

CellKey::CellKey(std::initializer_list<int> coords) : CellKey(std::vector<int>(coords)) {}

CellKey::CellKey(const std::vector<int>& coords) {
  if (coords.empty() || coords.size() > kMaxDim) {
    throw InvalidArgument("cell key needs between 1 and 4 coordinates");
  }
  n_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

std::vector<int> CellKey::odd_axes() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (c_[i] & 1) out.push_back(i);
  }
  return out;
}

std::string CellKey::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

int ambient_dimension(Ambient a) {
  switch (a) {
    case Ambient::Z2:
      return 2;
    case Ambient::Z3:
      return 3;
    case Ambient::Z4:
      return 4;
  }
  return 0;
}

Ambient ambient_of_dimension(int n) {
  switch (n) {
    case 2:
      return Ambient::Z2;
    case 3:
      return Ambient::Z3;
    case 4:
      return Ambient::Z4;
    default:
      throw InvalidArgument("lattice ambient dimension must be 2, 3 or 4, got " + std::to_string(n));
  }
}

std::string ambient_tag(Ambient a) { return "Z" + std::to_string(ambient_dimension(a)); }

std::string ambient_schlafli(Ambient a) {
  switch (a) {
    case Ambient::Z2:
      return "{4,4}";
    case Ambient::Z3:
      return "{4,3,4}";
    case Ambient::Z4:
      return "{4,3,3,4}";
  }
  return "";
}

Ambient parse_ambient(const std::string& tag) {
  for (Ambient a : {Ambient::Z2, Ambient::Z3, Ambient::Z4}) {
    if (tag == ambient_tag(a) || tag == ambient_schlafli(a)) return a;
  }
  throw InvalidArgument("unknown lattice ambient '" + tag + "'");
}

void check_complex(const GriddedComplex& c) {
  const int n = ambient_dimension(c.ambient);
  for (const auto& s : c.squares) {
    if (s.ambient_dim() != n) {
      throw InvalidArgument("square " + s.str() + " does not live in " + ambient_tag(c.ambient));
    }
    if (cell_dim(s) != 2) throw InvalidArgument("cell " + s.str() + " is not a square");
  }
}

int cell_dim(const CellKey& key) { return static_cast<int>(key.odd_axes().size()); }

std::set<CellKey> faces(const CellKey& key, int k) {
  const std::vector<int> odd = key.odd_axes();
  const int d = static_cast<int>(odd.size());
  if (k < 0 || k > d) {
    throw InvalidArgument("face dimension " + std::to_string(k) + " out of range for " + key.str());
  }
  std::set<CellKey> out;
  // Each odd axis keeps its value (stays spanned) or moves by -1/+1 (collapses).
  int total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    CellKey f = key;
    int kept = 0;
    int c = code;
    for (int i = 0; i < d; ++i, c /= 3) {
      int choice = c % 3;
      if (choice == 0) ++kept;
      else f[odd[i]] += choice == 1 ? -1 : 1;
    }
    if (kept == k) out.insert(f);
  }
  return out;
}

std::array<CellKey, 4> corners_cyclic(const CellKey& square) {
  const std::vector<int> odd = square.odd_axes();
  if (odd.size() != 2) throw InvalidArgument(square.str() + " is not a square");
  static constexpr int kWalk[4][2] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  std::array<CellKey, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = square;
    out[i][odd[0]] += kWalk[i][0];
    out[i][odd[1]] += kWalk[i][1];
  }
  return out;
}

bool is_face_of(const CellKey& a, const CellKey& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (int i = 0; i < a.ambient_dim(); ++i) {
    const int diff = a[i] - b[i];
    if (b[i] % 2 == 0) {
      if (diff != 0) return false;
    } else if (diff < -1 || diff > 1) {
      return false;
    }
  }
  return true;
}

std::map<int, int> star_counts(int n, const CellKey& cell) {
  if (cell.ambient_dim() != n) throw InvalidArgument("cell does not live in Z^" + std::to_string(n));
  const int d = cell_dim(cell);
  std::map<int, int> out;
  for (int k = d + 1; k <= n; ++k) out[k] = 0;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    CellKey y = cell;
    int c = code;
    for (int i = 0; i < n; ++i, c /= 3) y[i] += c % 3 - 1;
    const int k = cell_dim(y);
    if (k > d && is_face_of(cell, y)) ++out[k];
  }
  return out;
}

GriddedComplex boundary_of_cube_union(const std::set<CellKey>& cubes) {
  GriddedComplex out;
  if (cubes.empty()) return out;
  const int n = cubes.begin()->ambient_dim();
  out.ambient = ambient_of_dimension(n);
  std::map<CellKey, int> multiplicity;
  for (const auto& cube : cubes) {
    if (cube.ambient_dim() != n || cell_dim(cube) != 3) {
      throw InvalidArgument(cube.str() + " is not a 3-cube of Z^" + std::to_string(n));
    }
    for (const auto& f : faces(cube, 2)) ++multiplicity[f];
  }
  for (const auto& [sq, m] : multiplicity) {
    if (m == 1) out.squares.insert(sq);
  }
  return out;
}

GriddedComplex embed_higher(const GriddedComplex& c) {
  const int n = ambient_dimension(c.ambient);
  if (n >= CellKey::kMaxDim) throw InvalidArgument("cannot embed Z4 into a higher lattice");
  GriddedComplex out;
  out.ambient = ambient_of_dimension(n + 1);
  for (const auto& s : c.squares) {
    std::vector<int> v = s.coords();
    v.push_back(0);
    out.squares.insert(CellKey(v));
  }
  return out;
}

GriddedComplex drop_last(const GriddedComplex& c) {
  const int n = ambient_dimension(c.ambient);
  if (n <= 2) throw InvalidArgument("cannot project below Z2");
  GriddedComplex out;
  out.ambient = ambient_of_dimension(n - 1);
  for (const auto& s : c.squares) {
    if (s[n - 1] != 0) throw InvalidArgument(s.str() + " is not in the hyperplane x_n = 0");
    std::vector<int> v = s.coords();
    v.pop_back();
    out.squares.insert(CellKey(v));
  }
  return out;
}

CellKey translate(const CellKey& k, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != k.ambient_dim()) {
    throw InvalidArgument("translation vector has " + std::to_string(v.size()) +
                          " entries, cell lives in Z^" + std::to_string(k.ambient_dim()));
  }
  CellKey out = k;
  for (int i = 0; i < k.ambient_dim(); ++i) out[i] += 2 * v[i];
  return out;
}

GriddedComplex translate(const GriddedComplex& c, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != ambient_dimension(c.ambient)) {
    throw InvalidArgument("translation vector dimension does not match ambient " + ambient_tag(c.ambient));
  }
  GriddedComplex out;
  out.ambient = c.ambient;
  for (const auto& s : c.squares) out.squares.insert(translate(s, v));
  return out;
}

}  // namespace gridforge::lattice
