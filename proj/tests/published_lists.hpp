#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridforge/lattice.hpp"
#include "gridforge/rational.hpp"

namespace published {

// Square barycenters as printed, half-integers written p/2.
inline const std::vector<std::string> kTorus = {
    "1/2 1/2 0", "3/2 1/2 0", "5/2 1/2 0", "1/2 3/2 0", "5/2 3/2 0", "1/2 5/2 0", "3/2 5/2 0", "5/2 5/2 0",
    "1/2 1/2 1", "3/2 1/2 1", "5/2 1/2 1", "1/2 3/2 1", "5/2 3/2 1", "1/2 5/2 1", "3/2 5/2 1", "5/2 5/2 1",
    "0 1/2 1/2", "0 3/2 1/2", "0 5/2 1/2",
    "1 3/2 1/2",
    "2 3/2 1/2",
    "3 1/2 1/2", "3 3/2 1/2", "3 5/2 1/2",
    "1/2 0 1/2", "3/2 0 1/2", "5/2 0 1/2",
    "3/2 1 1/2",
    "3/2 2 1/2",
    "1/2 3 1/2", "3/2 3 1/2", "5/2 3 1/2",
};

inline const std::vector<std::string> kCrosscap = {
    // XY
    "1/2 1/2 0 0", "3/2 1/2 0 0", "3/2 3/2 0 0", "1/2 3/2 0 0", "3/2 1/2 1 0", "1/2 3/2 1 0", "1/2 1/2 2 0",
    "3/2 3/2 2 0",
    // XZ
    "1/2 0 1/2 0", "1/2 0 3/2 0", "3/2 0 1/2 0", "1/2 1 3/2 0", "3/2 1 3/2 0", "1/2 2 1/2 0", "3/2 2 1/2 0",
    "3/2 2 3/2 0",
    // YZ
    "0 1/2 1/2 0", "0 1/2 3/2 0", "0 3/2 1/2 0", "1 1/2 3/2 1", "1 3/2 3/2 1", "2 1/2 1/2 0", "2 3/2 1/2 0",
    "2 3/2 3/2 0",
    // YW
    "1 1/2 1 1/2", "1 1/2 2 1/2", "1 3/2 1 1/2", "1 3/2 2 1/2",
    // ZW
    "1 0 3/2 1/2", "1 2 3/2 1/2",
};

inline std::set<gridforge::lattice::CellKey> doubled(const std::vector<std::string>& rows) {
  std::set<gridforge::lattice::CellKey> out;
  for (const auto& row : rows) {
    std::istringstream in(row);
    std::string tok;
    std::vector<int> v;
    while (in >> tok) {
      const auto q = gridforge::Rational::parse(tok) * gridforge::Rational(2);
      v.push_back(static_cast<int>(q.to_long_double()));
    }
    out.insert(gridforge::lattice::CellKey(v));
  }
  return out;
}

}  // namespace published
