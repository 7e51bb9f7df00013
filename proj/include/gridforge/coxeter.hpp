#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gridforge/field.hpp"

namespace gridforge::coxeter {

// Square matrix over Q(sqrt2, sqrt5), row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n);
  static Matrix identity(int n);

  int dim() const { return n_; }
  const FieldElem& operator()(int i, int j) const { return a_[i * n_ + j]; }
  FieldElem& operator()(int i, int j) { return a_[i * n_ + j]; }

  Matrix transpose() const;
  FieldElem determinant() const;
  // Gauss-Jordan; throws InvalidArgument on a singular matrix.
  Matrix inverse() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix&, const Matrix&) = default;
  // Entry-lexicographic order, each entry ordered by its coefficients.
  friend std::strong_ordering operator<=>(const Matrix& x, const Matrix& y);
  std::size_t hash() const;

 private:
  int n_ = 0;
  std::vector<FieldElem> a_;
};

// An element of a Coxeter group, held as its exact Tits-representation matrix.
// The representation is faithful, so matrix equality is group equality.
class GroupElem {
 public:
  GroupElem() = default;
  explicit GroupElem(Matrix m) : m_(std::move(m)) {}

  const Matrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  bool is_identity() const { return m_.is_identity(); }

  friend GroupElem operator*(const GroupElem& x, const GroupElem& y) { return GroupElem(x.m_ * y.m_); }
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend std::strong_ordering operator<=>(const GroupElem& x, const GroupElem& y) { return x.m_ <=> y.m_; }
  std::size_t hash() const { return m_.hash(); }

 private:
  Matrix m_;
};

using Mask = std::uint32_t;

struct CosetKey {
  Mask subgroup = 0;
  GroupElem rep;

  friend bool operator==(const CosetKey&, const CosetKey&) = default;
  friend std::strong_ordering operator<=>(const CosetKey& x, const CosetKey& y) {
    if (auto c = x.subgroup <=> y.subgroup; c != 0) return c;
    return x.rep <=> y.rep;
  }
  std::size_t hash() const { return rep.hash() * 31u + subgroup; }
};

struct CosetKeyHash {
  std::size_t operator()(const CosetKey& k) const { return k.hash(); }
};
struct GroupElemHash {
  std::size_t operator()(const GroupElem& g) const { return g.hash(); }
};

enum class Geometry { Spherical, Euclidean, Hyperbolic, Other };

// Enumeration cap: GRIDFORGE_ENUM_CAP if set, else 2,000,000 elements.
std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);

// Coxeter system of a linear Schlafli symbol {p, q, ...} with its Tits
// representation. Generator i is the reflection r_i of the diagram chain;
// the k-cells of the honeycomb are the cosets of P_k = <S \ {r_k}>.
class CoxeterSystem {
 public:
  static CoxeterSystem build(const std::vector<int>& schlafli);
  // Accepts "{4,3,5}", "[4,3,5]" or "4,3,5".
  static CoxeterSystem parse(const std::string& text);

  int rank() const { return rank_; }
  const std::vector<int>& schlafli() const { return schlafli_; }
  std::string tag() const;
  int m(int i, int j) const { return m_[i][j]; }
  const Matrix& gram() const { return gram_; }
  const GroupElem& generator(int i) const { return gens_[i]; }
  Geometry geometry() const { return geometry_; }

  GroupElem identity() const;
  GroupElem word(const std::vector<int>& letters) const;
  // w * r_s, computed as a column update.
  GroupElem times_generator(const GroupElem& w, int s) const;
  GroupElem inverse(const GroupElem& w) const;

  Mask full_mask() const { return (Mask{1} << rank_) - 1; }
  Mask cell_mask(int k) const;
  Mask range_mask(int lo, int hi) const;  // generators lo..hi-1
  int top_dim() const { return rank_ - 1; }
  int cell_dim(const CosetKey& key) const;

  // Exact test: <gens> is finite iff the Tits form restricted to it is positive definite.
  bool is_finite(Mask gens) const;
  // All elements of <gens>, sorted, cached. Throws EnumerationLimitError when
  // the subgroup is infinite or exceeds the cap.
  std::shared_ptr<const std::vector<GroupElem>> enumerate_parabolic(Mask gens) const;
  std::size_t parabolic_order(Mask gens) const;

  // Canonical key of w<gens>: the minimal-length representative of the coset.
  CosetKey coset_key(const GroupElem& w, Mask gens) const;
  // Independent canonical form: entry-lexicographic minimum over w<gens>.
  CosetKey lex_min_key(const GroupElem& w, Mask gens) const;

  CosetKey cell(int k, const GroupElem& w) const { return coset_key(w, cell_mask(k)); }
  CosetKey base_cell(int k) const { return cell(k, identity()); }

  // Cells of dimension dim incident to cell (faces below, cofaces above), sorted.
  std::vector<CosetKey> cell_faces(const CosetKey& cell, int dim) const;
  bool is_incident(const CosetKey& a, const CosetKey& b) const;
  // The other top cell through a codimension-1 face of top cell `cube`.
  CosetKey neighbor(const CosetKey& cube, const CosetKey& face) const;
  // (i, j) -> number of j-cells incident to a fixed i-cell, i != j, by
  // |P_i| / |P_i intersect P_j|.
  std::map<std::pair<int, int>, std::size_t> incidence_counts() const;

  // Corners of a square cell in cyclic order: w (r0 r1)^k P_0.
  std::vector<CosetKey> square_corners(const CosetKey& square) const;

 private:
  struct Cache;

  int rank_ = 0;
  std::vector<int> schlafli_;
  std::vector<std::vector<int>> m_;
  Matrix gram_;
  std::vector<GroupElem> gens_;
  Geometry geometry_ = Geometry::Other;
  std::shared_ptr<Cache> cache_;
};

std::string geometry_name(Geometry g);

// Process-wide shared instance per Schlafli tag, so parabolic caches are reused.
std::shared_ptr<const CoxeterSystem> shared_system(const std::string& schlafli);

// A set of square cells of a Coxeter honeycomb.
struct CoxeterComplex {
  std::shared_ptr<const CoxeterSystem> system;
  std::set<CosetKey> squares;

  std::size_t size() const { return squares.size(); }
  bool contains(const CosetKey& k) const { return squares.count(k) != 0; }
};

}  // namespace gridforge::coxeter
