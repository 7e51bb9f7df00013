#include "gridforge/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "gridforge/error.hpp"
#include "gridforge/parallel.hpp"

namespace gridforge::coxeter {

Matrix::Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FieldElem Matrix::determinant() const {
  Matrix w = *this;
  FieldElem det = 1;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (!w(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(w(pivot, j), w(col, j));
      det = -det;
    }
    det *= w(col, col);
    const FieldElem inv = w(col, col).inverse();
    for (int r = col + 1; r < n_; ++r) {
      if (w(r, col).is_zero()) continue;
      const FieldElem f = w(r, col) * inv;
      for (int j = col; j < n_; ++j) w(r, j) -= f * w(col, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  Matrix w = *this;
  Matrix out = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (!w(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw InvalidArgument("matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(w(pivot, j), w(col, j));
        std::swap(out(pivot, j), out(col, j));
      }
    }
    const FieldElem inv = w(col, col).inverse();
    for (int j = 0; j < n_; ++j) {
      w(col, j) *= inv;
      out(col, j) *= inv;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || w(r, col).is_zero()) continue;
      const FieldElem f = w(r, col);
      for (int j = 0; j < n_; ++j) {
        w(r, j) -= f * w(col, j);
        out(r, j) -= f * out(col, j);
      }
    }
  }
  return out;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const FieldElem& e = (*this)(i, j);
      if (i == j ? !(e == FieldElem(1)) : !e.is_zero()) return false;
    }
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.n_ != y.n_) throw InvalidArgument("matrix dimension mismatch");
  const int n = x.n_;
  Matrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const FieldElem& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!y(k, j).is_zero()) out(i, j) += xik * y(k, j);
      }
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Matrix& x, const Matrix& y) {
  if (auto c = x.n_ <=> y.n_; c != 0) return c;
  for (std::size_t i = 0; i < x.a_.size(); ++i) {
    if (auto c = x.a_[i] <=> y.a_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Matrix::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& e : a_) h = h * 1000003u ^ e.hash();
  return h;
}

namespace {

std::atomic<std::size_t> g_cap{0};

std::size_t default_cap() {
  if (const char* env = std::getenv("GRIDFORGE_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

int column_sign(const Matrix& m, int s) {
  for (int i = 0; i < m.dim(); ++i) {
    const int sg = m(i, s).sign();
    if (sg != 0) return sg;
  }
  return 0;
}

std::vector<int> mask_bits(Mask mask, int rank) {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i) {
    if (mask & (Mask{1} << i)) out.push_back(i);
  }
  return out;
}

bool positive_definite(const Matrix& b, const std::vector<int>& idx) {
  for (std::size_t k = 1; k <= idx.size(); ++k) {
    Matrix sub(static_cast<int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = b(idx[i], idx[j]);
    if (sub.determinant().sign() <= 0) return false;
  }
  return true;
}

}  // namespace

std::size_t enumeration_cap() {
  std::size_t c = g_cap.load();
  if (c == 0) {
    c = default_cap();
    g_cap.store(c);
  }
  return c;
}

void set_enumeration_cap(std::size_t cap) { g_cap.store(cap == 0 ? default_cap() : cap); }

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::Spherical:
      return "spherical";
    case Geometry::Euclidean:
      return "euclidean";
    case Geometry::Hyperbolic:
      return "hyperbolic";
    case Geometry::Other:
      break;
  }
  return "other";
}

struct CoxeterSystem::Cache {
  std::mutex mu;
  std::map<Mask, std::shared_ptr<const std::vector<GroupElem>>> parabolics;
};

CoxeterSystem CoxeterSystem::build(const std::vector<int>& schlafli) {
  if (schlafli.empty()) throw InvalidArgument("empty Schlafli symbol");
  for (int p : schlafli) {
    if (p < 3 || p > 5) {
      throw InvalidArgument("unsupported Schlafli entry " + std::to_string(p) + " (allowed: 3, 4, 5)");
    }
  }
  CoxeterSystem sys;
  sys.rank_ = static_cast<int>(schlafli.size()) + 1;
  if (sys.rank_ > 8) throw InvalidArgument("Schlafli symbol too long");
  sys.schlafli_ = schlafli;
  const int r = sys.rank_;
  sys.m_.assign(r, std::vector<int>(r, 2));
  for (int i = 0; i < r; ++i) sys.m_[i][i] = 1;
  for (int i = 0; i + 1 < r; ++i) sys.m_[i][i + 1] = sys.m_[i + 1][i] = schlafli[i];

  sys.gram_ = Matrix(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) sys.gram_(i, j) = -FieldElem::cos_pi_over(sys.m_[i][j]);

  for (int s = 0; s < r; ++s) {
    Matrix g = Matrix::identity(r);
    for (int j = 0; j < r; ++j) g(s, j) -= FieldElem(2) * sys.gram_(s, j);
    sys.gens_.emplace_back(std::move(g));
  }

  const Matrix& b = sys.gram_;
  for (int i = 0; i < r; ++i) {
    const Matrix& g = sys.gens_[i].matrix();
    if (!(g * g).is_identity()) throw Error("generator " + std::to_string(i) + " is not an involution");
    if (!(g.transpose() * b * g == b)) throw Error("generator " + std::to_string(i) + " does not preserve the form");
    for (int j = i + 1; j < r; ++j) {
      const Matrix prod = g * sys.gens_[j].matrix();
      Matrix pw = prod;
      int order = 1;
      while (!pw.is_identity() && order <= 12) {
        pw = pw * prod;
        ++order;
      }
      if (order != sys.m_[i][j]) {
        throw Error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") has order " +
                    std::to_string(order) + ", expected " + std::to_string(sys.m_[i][j]));
      }
    }
  }

  std::vector<int> all(r);
  for (int i = 0; i < r; ++i) all[i] = i;
  bool proper_definite = true;
  for (int drop = 0; drop < r; ++drop) {
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (i != drop) idx.push_back(i);
    proper_definite = proper_definite && positive_definite(b, idx);
  }
  const int det_sign = b.determinant().sign();
  if (det_sign > 0 && positive_definite(b, all)) sys.geometry_ = Geometry::Spherical;
  else if (det_sign == 0 && proper_definite) sys.geometry_ = Geometry::Euclidean;
  else if (det_sign < 0 && proper_definite) sys.geometry_ = Geometry::Hyperbolic;
  else sys.geometry_ = Geometry::Other;

  sys.cache_ = std::make_shared<Cache>();
  return sys;
}

CoxeterSystem CoxeterSystem::parse(const std::string& text) {
  std::string body;
  for (char c : text) {
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ' ') continue;
    body.push_back(c);
  }
  std::vector<int> entries;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3) {
      throw InvalidArgument("malformed Schlafli symbol '" + text + "'");
    }
    entries.push_back(std::stoi(item));
  }
  if (entries.empty()) throw InvalidArgument("malformed Schlafli symbol '" + text + "'");
  return build(entries);
}

std::string CoxeterSystem::tag() const {
  std::string out = "{";
  for (std::size_t i = 0; i < schlafli_.size(); ++i) out += (i ? "," : "") + std::to_string(schlafli_[i]);
  return out + "}";
}

GroupElem CoxeterSystem::identity() const { return GroupElem(Matrix::identity(rank_)); }

GroupElem CoxeterSystem::word(const std::vector<int>& letters) const {
  GroupElem w = identity();
  for (int s : letters) {
    if (s < 0 || s >= rank_) throw InvalidArgument("generator index " + std::to_string(s) + " out of range");
    w = times_generator(w, s);
  }
  return w;
}

GroupElem CoxeterSystem::times_generator(const GroupElem& w, int s) const {
  Matrix m = w.matrix();
  const Matrix& g = gens_[s].matrix();
  for (int j = 0; j < rank_; ++j) {
    if (j == s || g(s, j).is_zero()) continue;
    for (int i = 0; i < rank_; ++i) {
      if (!m(i, s).is_zero()) m(i, j) += m(i, s) * g(s, j);
    }
  }
  for (int i = 0; i < rank_; ++i) m(i, s) = -m(i, s);
  return GroupElem(std::move(m));
}

GroupElem CoxeterSystem::inverse(const GroupElem& w) const { return GroupElem(w.matrix().inverse()); }

Mask CoxeterSystem::cell_mask(int k) const {
  if (k < 0 || k >= rank_) throw InvalidArgument("cell dimension " + std::to_string(k) + " out of range");
  return full_mask() & ~(Mask{1} << k);
}

Mask CoxeterSystem::range_mask(int lo, int hi) const {
  Mask m = 0;
  for (int i = std::max(lo, 0); i < std::min(hi, rank_); ++i) m |= Mask{1} << i;
  return m;
}

int CoxeterSystem::cell_dim(const CosetKey& key) const {
  for (int k = 0; k < rank_; ++k) {
    if (key.subgroup == cell_mask(k)) return k;
  }
  throw InvalidArgument("coset key is not a cell (subgroup is not maximal parabolic)");
}

std::shared_ptr<const std::vector<GroupElem>> CoxeterSystem::enumerate_parabolic(Mask gens) const {
  gens &= full_mask();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->parabolics.find(gens);
    if (it != cache_->parabolics.end()) return it->second;
  }
  const std::size_t cap = enumeration_cap();
  if (!is_finite(gens)) {
    throw EnumerationLimitError("parabolic subgroup of " + tag() + " is infinite (its Tits form is not positive definite)",
                                cap);
  }
  const std::vector<int> letters = mask_bits(gens, rank_);
  std::vector<GroupElem> all{identity()};
  std::unordered_set<GroupElem, GroupElemHash> seen{identity()};
  std::vector<GroupElem> frontier{identity()};
  while (!frontier.empty()) {
    std::vector<GroupElem> products(frontier.size() * letters.size());
    parallel_for(frontier.size(), [&](std::size_t i) {
      for (std::size_t l = 0; l < letters.size(); ++l) {
        products[i * letters.size() + l] = times_generator(frontier[i], letters[l]);
      }
    });
    std::vector<GroupElem> next;
    for (auto& p : products) {
      if (seen.insert(p).second) {
        all.push_back(p);
        next.push_back(std::move(p));
        if (all.size() > cap) {
          throw EnumerationLimitError("parabolic subgroup of " + tag() + " is infinite or too large (cap " +
                                          std::to_string(cap) + " elements)",
                                      cap);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  auto result = std::make_shared<const std::vector<GroupElem>>(std::move(all));
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->parabolics.emplace(gens, result).first->second;
}

bool CoxeterSystem::is_finite(Mask gens) const {
  // Sylvester: every leading principal minor of the restricted form is positive
  const std::vector<int> letters = mask_bits(gens & full_mask(), rank_);
  for (std::size_t k = 1; k <= letters.size(); ++k) {
    Matrix sub(static_cast<int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(static_cast<int>(i), static_cast<int>(j)) = gram_(letters[i], letters[j]);
    if (sub.determinant().sign() <= 0) return false;
  }
  return true;
}

std::size_t CoxeterSystem::parabolic_order(Mask gens) const { return enumerate_parabolic(gens)->size(); }

CosetKey CoxeterSystem::coset_key(const GroupElem& w, Mask gens) const {
  if (w.dim() != rank_) throw InvalidArgument("group element does not belong to " + tag());
  gens &= full_mask();
  const std::vector<int> letters = mask_bits(gens, rank_);
  GroupElem rep = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : letters) {
      if (column_sign(rep.matrix(), s) < 0) {
        rep = times_generator(rep, s);
        changed = true;
      }
    }
  }
  return {gens, std::move(rep)};
}

CosetKey CoxeterSystem::lex_min_key(const GroupElem& w, Mask gens) const {
  gens &= full_mask();
  const auto elems = enumerate_parabolic(gens);
  GroupElem best = w * elems->front();
  for (const auto& p : *elems) {
    GroupElem c = w * p;
    if (c < best) best = std::move(c);
  }
  return {gens, std::move(best)};
}

std::vector<CosetKey> CoxeterSystem::cell_faces(const CosetKey& cell, int dim) const {
  const int k = cell_dim(cell);
  if (dim < 0 || dim >= rank_) throw InvalidArgument("cell dimension " + std::to_string(dim) + " out of range");
  if (dim == k) return {cell};
  // P_k splits as <r_0..r_{k-1}> x <r_{k+1}..>; the factor on the far side
  // of dim already lies in P_dim.
  const Mask factor = dim < k ? range_mask(0, k) : range_mask(k + 1, rank_);
  const auto elems = enumerate_parabolic(factor);
  const Mask target = cell_mask(dim);
  std::vector<CosetKey> keys(elems->size());
  parallel_for(elems->size(), [&](std::size_t i) { keys[i] = coset_key(cell.rep * (*elems)[i], target); });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

bool CoxeterSystem::is_incident(const CosetKey& a, const CosetKey& b) const {
  const int da = cell_dim(a);
  const int db = cell_dim(b);
  if (da == db) return a == b;
  const CosetKey& lo = da < db ? a : b;
  const CosetKey& hi = da < db ? b : a;
  const auto f = cell_faces(hi, cell_dim(lo));
  return std::binary_search(f.begin(), f.end(), lo);
}

CosetKey CoxeterSystem::neighbor(const CosetKey& cube, const CosetKey& face) const {
  const int top = top_dim();
  if (cell_dim(cube) != top) throw InvalidArgument("neighbor needs a top-dimensional cell");
  if (cell_dim(face) != top - 1) throw InvalidArgument("neighbor needs a codimension-1 face");
  CosetKey first = coset_key(face.rep, cell_mask(top));
  CosetKey second = coset_key(times_generator(face.rep, top), cell_mask(top));
  if (cube == first) return second;
  if (cube == second) return first;
  throw InvalidArgument("face is not incident to the given cell");
}

std::map<std::pair<int, int>, std::size_t> CoxeterSystem::incidence_counts() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (int i = 0; i < rank_; ++i) {
    const std::size_t pi = parabolic_order(cell_mask(i));
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      const std::size_t pij = parabolic_order(cell_mask(i) & cell_mask(j));
      out[{i, j}] = pi / pij;
    }
  }
  return out;
}

std::vector<CosetKey> CoxeterSystem::square_corners(const CosetKey& square) const {
  if (rank_ < 3 || cell_dim(square) != 2) throw InvalidArgument("square_corners needs a 2-cell");
  std::vector<CosetKey> out;
  GroupElem w = square.rep;
  for (int k = 0; k < 4; ++k) {
    out.push_back(coset_key(w, cell_mask(0)));
    w = times_generator(times_generator(w, 0), 1);
  }
  return out;
}

std::shared_ptr<const CoxeterSystem> shared_system(const std::string& schlafli) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CoxeterSystem>> registry;
  CoxeterSystem sys = CoxeterSystem::parse(schlafli);
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(sys.tag());
  if (it != registry.end()) return it->second;
  auto ptr = std::make_shared<const CoxeterSystem>(std::move(sys));
  return registry.emplace(ptr->tag(), ptr).first->second;
}

}  // namespace gridforge::coxeter
