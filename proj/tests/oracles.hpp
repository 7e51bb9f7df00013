#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gridforge/surface.hpp"

namespace oracle {

// Betti numbers of a square complex over GF(2) and over GF(p), p = 2^31 - 1,
// computed from scratch by Gaussian elimination on boundary matrices.
struct Betti {
  long b0 = 0, b1 = 0, b2 = 0;
};

inline std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::size_t cols) {
  constexpr std::int64_t p = 2147483647;
  auto power = [](std::int64_t a, std::int64_t e) {
    std::int64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t inv = power(rows[rank][c], p - 2);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::int64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

struct Chains {
  std::size_t v = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<std::pair<int, int>, 4>> square_edges;  // (edge index, sign)
};

inline Chains chains(const gridforge::surface::AbstractSquareComplex& c) {
  Chains ch;
  ch.v = c.vertex_count();
  std::map<std::pair<int, int>, int> id;
  for (const auto& q : c.squares()) {
    std::array<std::pair<int, int>, 4> se;
    for (int i = 0; i < 4; ++i) {
      const int a = q[i], b = q[(i + 1) % 4];
      const auto key = std::minmax(a, b);
      auto it = id.find(key);
      if (it == id.end()) {
        it = id.emplace(key, static_cast<int>(ch.edges.size())).first;
        ch.edges.push_back(key);
      }
      se[i] = {it->second, a < b ? 1 : -1};
    }
    ch.square_edges.push_back(se);
  }
  return ch;
}

inline Betti betti_gf2(const gridforge::surface::AbstractSquareComplex& c) {
  const Chains ch = chains(c);
  const std::size_t ve = (ch.v + 63) / 64, ee = (ch.edges.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> d1, d2;
  for (const auto& [a, b] : ch.edges) {
    std::vector<std::uint64_t> row(ve, 0);
    row[a / 64] ^= std::uint64_t{1} << (a % 64);
    row[b / 64] ^= std::uint64_t{1} << (b % 64);
    d1.push_back(std::move(row));
  }
  for (const auto& se : ch.square_edges) {
    std::vector<std::uint64_t> row(ee, 0);
    for (const auto& [e, s] : se) row[e / 64] ^= std::uint64_t{1} << (e % 64);
    d2.push_back(std::move(row));
  }
  const long r1 = static_cast<long>(rank_gf2(d1, ch.v));
  const long r2 = static_cast<long>(rank_gf2(d2, ch.edges.size()));
  Betti b;
  b.b0 = static_cast<long>(ch.v) - r1;
  b.b1 = static_cast<long>(ch.edges.size()) - r1 - r2;
  b.b2 = static_cast<long>(ch.square_edges.size()) - r2;
  return b;
}

// Top Betti number over GF(p): 1 per closed orientable component.
inline long b2_mod_p(const gridforge::surface::AbstractSquareComplex& c) {
  const Chains ch = chains(c);
  std::vector<std::vector<std::int64_t>> d2;
  // columns are squares so that rank counts boundary relations among squares
  std::vector<std::vector<std::int64_t>> rows(ch.edges.size(), std::vector<std::int64_t>(ch.square_edges.size(), 0));
  for (std::size_t s = 0; s < ch.square_edges.size(); ++s) {
    for (const auto& [e, sg] : ch.square_edges[s]) rows[e][s] = (rows[e][s] + sg + 2147483647) % 2147483647;
  }
  const long r2 = static_cast<long>(rank_mod_p(rows, ch.square_edges.size()));
  return static_cast<long>(ch.square_edges.size()) - r2;
}

}  // namespace oracle
