#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gridforge::lattice {

// A cell of the cubic honeycomb of Z^n (n = 2, 3, 4), stored as twice its
// barycenter. Odd coordinates are the axes the cell spans, so the cell's
// dimension is the number of odd entries and the even entries locate it.
class CellKey {
 public:
  static constexpr int kMaxDim = 4;

  CellKey() = default;
  CellKey(std::initializer_list<int> coords);
  explicit CellKey(const std::vector<int>& coords);

  int ambient_dim() const { return n_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::vector<int> coords() const { return {c_.begin(), c_.begin() + n_}; }
  // Axes along which the cell extends (odd coordinates), ascending.
  std::vector<int> odd_axes() const;

  std::string str() const;

  friend bool operator==(const CellKey&, const CellKey&) = default;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<int, kMaxDim> c_{};
};

enum class Ambient { Z2, Z3, Z4 };

int ambient_dimension(Ambient a);
Ambient ambient_of_dimension(int n);
// "Z3" etc. The Schlafli names are accepted by parse_ambient as aliases.
std::string ambient_tag(Ambient a);
std::string ambient_schlafli(Ambient a);
Ambient parse_ambient(const std::string& tag);

// A finite duplicate-free set of unit squares of the honeycomb of Z^n.
struct GriddedComplex {
  Ambient ambient = Ambient::Z3;
  std::set<CellKey> squares;

  std::size_t size() const { return squares.size(); }
  bool contains(const CellKey& k) const { return squares.count(k) != 0; }
  friend bool operator==(const GriddedComplex&, const GriddedComplex&) = default;
};

// Checks the GriddedComplex invariant: every member is a square of the ambient.
void check_complex(const GriddedComplex& c);

int cell_dim(const CellKey& key);

// All k-dimensional faces of key (including key itself when k = cell_dim).
std::set<CellKey> faces(const CellKey& key, int k);

// Corners of a square walked (-,-), (+,-), (+,+), (-,+) over its two odd axes.
std::array<CellKey, 4> corners_cyclic(const CellKey& square);

// Number of k-cells of Z^n containing the given cell, for each k above its
// dimension, counted by enumerating the radius-1 neighbourhood.
std::map<int, int> star_counts(int n, const CellKey& cell);

// True when a is a face of b (a <= b in the face order).
bool is_face_of(const CellKey& a, const CellKey& b);

// Squares lying on exactly one of the given 3-cubes.
GriddedComplex boundary_of_cube_union(const std::set<CellKey>& cubes);

// Appends a zero coordinate: Z^n -> Z^(n+1).
GriddedComplex embed_higher(const GriddedComplex& c);
// Inverse of embed_higher; throws if some square leaves the hyperplane.
GriddedComplex drop_last(const GriddedComplex& c);

// Shift by an integer vector given in lattice units (keys move by 2v).
GriddedComplex translate(const GriddedComplex& c, const std::vector<int>& v);
CellKey translate(const CellKey& k, const std::vector<int>& v);

}  // namespace gridforge::lattice
