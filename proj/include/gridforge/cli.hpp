#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gridforge/io.hpp"

namespace gridforge::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 1 validation or placement failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Published incidence values for the honeycombs we know about, keyed by
// (cell dim, around dim). Empty for other symbols.
std::map<std::pair<int, int>, std::size_t> published_incidences(const std::string& tag);

struct StatsRow {
  int cell = 0;
  int around = 0;
  std::size_t computed = 0;                 // orbit counting
  std::size_t enumerated = 0;               // distinct cosets incident to the base cell
  std::optional<std::size_t> lattice;       // Z^n brute force, Euclidean only
  std::optional<std::size_t> published;
  bool diff() const { return published && *published != computed; }
};

std::vector<StatsRow> stats_rows(const std::string& schlafli);
std::string stats_table(const std::string& schlafli);

// Builds a named construction with its flags, as `gridforge build` does.
struct BuildParams {
  int depth = 1;
  int genus = 0;
  int crosscaps = 0;
  std::string ends;
  std::string prune;
};
io::AnyComplex build(const std::string& name, const BuildParams& p);
const std::vector<std::string>& build_names();

}  // namespace gridforge::cli
