// Acceptance run: one PASS/FAIL line per criterion. Exit code is the number of failures.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "gridforge/cli.hpp"
#include "gridforge/constructors.hpp"
#include "gridforge/error.hpp"
#include "gridforge/honeycomb_surfaces.hpp"
#include "gridforge/io.hpp"
#include "published_lists.hpp"

using namespace gridforge;
namespace fs = std::filesystem;

namespace {

// every item runs well inside these bounds on one core
constexpr double kDeskSeconds = 60.0;
constexpr double kLongSeconds = 120.0;

struct Check {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream lim;
  lim << "ran " << secs << " s, limit " << limit << " s";
  c.require(secs <= limit, lim.str());
  std::cout << (c.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << "  [" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s]";
  const auto n = c.note.str();
  if (!n.empty()) std::cout << "  " << n;
  std::cout << "\n" << std::flush;
  std::cout.unsetf(std::ios::fixed);
  std::cout.precision(6);
  if (!c.ok) ++failures;
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  if (rc != 0) throw Error("command failed (" + std::to_string(rc) + "): " + err.str());
  return out.str();
}

surface::SurfaceReport report(const io::AnyComplex& c) { return surface::validate(io::to_abstract(c)); }

lattice::CellKey base_lattice_cell(int n, int k) {
  std::vector<int> v(n, 0);
  for (int a = 0; a < k; ++a) v[a] = 1;
  return lattice::CellKey(v);
}

}  // namespace

int main() {
  std::cout << "gridforge acceptance\n";

  criterion(1, "explicit constructions: torus-paper 32 listed squares genus 1, crosscap-r4 30 listed squares chi 1",
            kDeskSeconds, [](Check& c) {
              const auto torus = io::parse_complex(run_cli({"build", "torus-paper"}));
              c.require(torus.lattice.squares == published::doubled(published::kTorus), "torus square set differs from list");
              c.require(torus.lattice.size() == 32, "torus size");
              const auto tr = report(torus);
              c.require(tr.is_manifold && tr.is_closed && tr.components == 1, "torus not a closed manifold");
              c.require(tr.orientable && tr.euler == 0 && tr.genus_or_crosscaps == 1, "torus class " + tr.class_name);
              const auto cc = io::parse_complex(run_cli({"build", "crosscap-r4"}));
              c.require(cc.lattice.squares == published::doubled(published::kCrosscap), "crosscap square set differs from list");
              c.require(cc.lattice.size() == 30, "crosscap size");
              const auto cr = report(cc);
              c.require(cr.is_manifold && cr.is_closed && cr.components == 1, "crosscap not a closed manifold");
              c.require(!cr.orientable && cr.euler == 1, "crosscap class " + cr.class_name);
              c.note << "torus " << tr.class_name << "; crosscap " << cr.class_name << " (list used as printed)";
            });

  criterion(2, "honeycomb tables reproduce published values exactly; discrepant edge rows marked DIFF", kDeskSeconds,
            [](Check& c) {
              using Key = std::pair<int, int>;
              const std::map<std::string, std::vector<Key>> must_match = {
                  {"{4,3,4}", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}},
                  {"{4,3,3,4}", {{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
                  {"{4,3,5}", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}},
                  {"{4,3,3,5}", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {2, 4}}},
              };
              const std::map<std::string, std::vector<Key>> must_diff = {
                  {"{4,3,3,4}", {{1, 3}, {1, 4}}},
                  {"{4,3,3,5}", {{1, 2}, {1, 3}, {1, 4}}},
              };
              const std::map<std::string, std::map<Key, std::size_t>> quoted = {
                  {"{4,3,4}", {{{0, 1}, 6}, {{0, 2}, 12}, {{0, 3}, 8}, {{1, 2}, 4}, {{1, 3}, 4}}},
                  {"{4,3,3,4}", {{{0, 1}, 8}, {{0, 2}, 24}, {{0, 3}, 32}, {{0, 4}, 16}}},
                  {"{4,3,5}", {{{0, 1}, 12}, {{0, 2}, 30}, {{0, 3}, 20}, {{1, 2}, 5}, {{1, 3}, 5}}},
                  {"{4,3,3,5}", {{{0, 1}, 120}, {{0, 2}, 720}, {{0, 3}, 1200}, {{0, 4}, 600}, {{2, 3}, 5}, {{2, 4}, 5}}},
              };
              int diffs = 0;
              for (const auto& [tag, keys] : must_match) {
                const auto table = run_cli({"stats", tag});
                std::map<Key, cli::StatsRow> rows;
                for (const auto& r : cli::stats_rows(tag)) rows[{r.cell, r.around}] = r;
                for (const auto& k : keys) {
                  const auto& r = rows.at(k);
                  c.require(r.computed == quoted.at(tag).at(k) && r.published && *r.published == r.computed && !r.diff(),
                            tag + " row " + std::to_string(k.first) + "/" + std::to_string(k.second));
                }
                for (const auto& [k, r] : rows) {
                  c.require(r.enumerated == r.computed, tag + " orbit count and coset enumeration disagree");
                  if (r.lattice) c.require(*r.lattice == r.computed, tag + " orbit count and lattice brute force disagree");
                  const bool expect_diff = must_diff.count(tag) &&
                                           std::count(must_diff.at(tag).begin(), must_diff.at(tag).end(), k) != 0;
                  c.require(r.diff() == expect_diff, tag + " unexpected DIFF state at " + std::to_string(k.first) + "/" +
                                                         std::to_string(k.second));
                  if (r.diff()) {
                    ++diffs;
                    c.note << tag << " " << k.first << "->" << k.second << " computed " << r.computed << " quoted "
                           << *r.published << "; ";
                  }
                }
                std::size_t marks = 0;
                for (std::size_t p = table.find("DIFF"); p != std::string::npos; p = table.find("DIFF", p + 1)) ++marks;
                c.require(marks == (must_diff.count(tag) ? must_diff.at(tag).size() : 0), tag + " DIFF markers in table");
              }
              c.require(diffs == 5, "expected 5 DIFF rows in the two edge rows");
            });

  criterion(3, "cross-engine: coxeter incidence_counts equal lattice star_counts for {4,3,4} and {4,3,3,4}",
            kDeskSeconds, [](Check& c) {
              for (const char* tag : {"{4,3,4}", "{4,3,3,4}"}) {
                const auto sys = coxeter::shared_system(tag);
                const int n = sys->top_dim();
                const auto counts = sys->incidence_counts();
                int pairs = 0;
                for (int i = 0; i <= n; ++i) {
                  const auto cell = base_lattice_cell(n, i);
                  const auto stars = lattice::star_counts(n, cell);
                  for (int j = 0; j <= n; ++j) {
                    if (i == j) continue;
                    const std::size_t brute =
                        j > i ? static_cast<std::size_t>(stars.at(j)) : lattice::faces(cell, j).size();
                    c.require(counts.at({i, j}) == brute, std::string(tag) + " pair " + std::to_string(i) + "/" +
                                                              std::to_string(j));
                    ++pairs;
                  }
                }
                c.note << tag << " " << pairs << " pairs; ";
              }
            });

  criterion(4, "connected-sum law over 50 random pairs from sphere, torus, crosscap, klein", kDeskSeconds, [](Check& c) {
    const std::vector<std::string> names = {"sphere", "torus-paper", "crosscap-r4", "klein-bottle"};
    std::vector<lattice::GriddedComplex> pool;
    std::vector<surface::SurfaceReport> base;
    for (const auto& nm : names) {
      pool.push_back(io::parse_complex(run_cli({"build", nm})).lattice);
      base.push_back(surface::classify_compact(surface::to_abstract(pool.back())));
    }
    std::mt19937_64 rng(20240611);
    int done = 0, skipped = 0;
    while (done < 50) {
      const auto ia = rng() % pool.size(), ib = rng() % pool.size();
      const auto fa = *std::next(pool[ia].squares.begin(), static_cast<long>(rng() % pool[ia].size()));
      const auto fb = *std::next(pool[ib].squares.begin(), static_cast<long>(rng() % pool[ib].size()));
      lattice::GriddedComplex s;
      try {
        s = surface::connected_sum_embedded(pool[ia], fa, pool[ib], fb);
      } catch (const PlacementError&) {
        ++skipped;
        continue;
      }
      const auto r = surface::classify_compact(surface::to_abstract(s));
      c.require(r.euler == base[ia].euler + base[ib].euler - 2, names[ia] + " # " + names[ib] + " Euler");
      c.require(r.orientable == (base[ia].orientable && base[ib].orientable), names[ia] + " # " + names[ib] + " orientability");
      ++done;
    }
    c.note << done << " sums, " << skipped << " placements refused and redrawn";
  });

  criterion(5, "closed-surface catalog: genus g and k crosscaps for g, k <= 5", kDeskSeconds, [](Check& c) {
    for (int g = 0; g <= 5; ++g) {
      const auto r = report(io::parse_complex(run_cli({"build", "closed-surface", "--genus", std::to_string(g)})));
      c.require(r.is_closed && r.components == 1 && r.orientable && r.genus_or_crosscaps == g, "genus " + std::to_string(g));
    }
    for (int k = 1; k <= 5; ++k) {
      const auto r = report(io::parse_complex(run_cli({"build", "closed-surface", "--crosscaps", std::to_string(k)})));
      c.require(r.is_closed && r.components == 1 && !r.orientable && r.genus_or_crosscaps == k,
                "crosscaps " + std::to_string(k));
    }
  });

  criterion(6, "tree of life: arms disjoint to depth 10, truncations spheres to depth 3, chi = 2 - 2h - c", kDeskSeconds,
            [](Check& c) {
              for (int d = 0; d <= 10; ++d) {
                const auto t = constructors::tree_spiral(d);
                for (std::size_t i = 0; i < t.paths.size(); ++i) {
                  for (std::size_t j = i + 1; j < t.paths.size(); ++j) {
                    const auto& a = t.paths[i].edges;
                    const auto& b = t.paths[j].edges;
                    for (const auto& e : a) c.require(b.count(e) == 0, "arms share an edge at depth " + std::to_string(d));
                    // common vertices must be endpoints of both arms
                    std::set<lattice::CellKey> va, vb;
                    for (const auto& e : a)
                      for (const auto& v : lattice::faces(e, 0)) va.insert(v);
                    for (const auto& e : b)
                      for (const auto& v : lattice::faces(e, 0)) vb.insert(v);
                    auto ends = [](const constructors::TreePath& p) {
                      std::set<lattice::CellKey> s;
                      s.insert(lattice::CellKey{2 * p.waypoints.front()[0], 2 * p.waypoints.front()[1]});
                      s.insert(lattice::CellKey{2 * p.waypoints.back()[0], 2 * p.waypoints.back()[1]});
                      return s;
                    };
                    const auto ea = ends(t.paths[i]), eb = ends(t.paths[j]);
                    for (const auto& v : va) {
                      if (vb.count(v)) c.require(ea.count(v) && eb.count(v), "arms cross at depth " + std::to_string(d));
                    }
                  }
                }
              }
              for (int d = 0; d <= 3; ++d) {
                const auto r = report(io::parse_complex(run_cli({"build", "tree-of-life", "--depth", std::to_string(d)})));
                c.require(r.is_closed && r.components == 1 && r.orientable && r.euler == 2,
                          "tree of life depth " + std::to_string(d));
              }
              int combos = 0;
              for (int h = 0; h <= 3; ++h) {
                for (int k = 0; k <= 3; ++k) {
                  const auto r = report(io::parse_complex(run_cli({"build", "pruned-tree", "--depth", "2", "--prune", "1",
                                                                   "--genus", std::to_string(h), "--crosscaps",
                                                                   std::to_string(k)})));
                  c.require(r.is_manifold && r.components == 1 && r.euler == 2 - 2 * h - k,
                            "h=" + std::to_string(h) + " c=" + std::to_string(k));
                  ++combos;
                }
              }
              c.note << combos << " decorated trees";
            });

  criterion(7, "hyperbolic torus: 12 cube keys, boundary orientable genus 1", kDeskSeconds, [](Check& c) {
    const auto t = honeycomb::hyperbolic_torus_435_full();
    c.require(std::set<coxeter::CosetKey>(t.cubes.begin(), t.cubes.end()).size() == 12, "cube keys not 12 distinct");
    bool fans = t.fans.size() == 4;
    for (const auto& f : t.fans) fans = fans && f.size() == 5;
    c.require(fans, "edge fans are not 4 x 5 cubes");
    const auto r = report(io::parse_complex(run_cli({"build", "hyp-torus"})));
    c.require(r.is_closed && r.components == 1 && r.orientable && r.genus_or_crosscaps == 1, "class " + r.class_name);
    c.note << "squares: claimed " << honeycomb::HyperbolicTorus::kClaimedSquares << ", computed " << r.squares
           << " (informational)";
  });

  criterion(8, "hyperbolic pants chi -1, 3 circles, 15 squares; tree to depth 3 with zero collisions", kLongSeconds,
            [](Check& c) {
              const auto r = report(io::parse_complex(run_cli({"build", "hyp-pants"})));
              c.require(r.euler == -1 && r.boundary_circles == 3 && r.squares == 15, "pants " + r.class_name);
              for (int d = 0; d <= 3; ++d) {
                const auto t = honeycomb::tree_of_life_435_full(d);
                c.require(t.collisions == 0, "collisions at depth " + std::to_string(d));
                const auto tr = surface::validate(surface::to_abstract(t.surface));
                c.require(tr.is_manifold && tr.components == 1, "tree depth " + std::to_string(d) + " not a surface");
              }
            });

  criterion(9, "{4,3,3,5}: torus 16 squares genus 1, pants chi -1 with 3 circles, crosscap 34 squares, |[3,3,5]| = 14400",
            kLongSeconds, [](Check& c) {
              const auto t = report(io::parse_complex(run_cli({"build", "h4-torus"})));
              c.require(t.squares == 16 && t.orientable && t.is_closed && t.genus_or_crosscaps == 1, "torus " + t.class_name);
              const auto p = report(io::parse_complex(run_cli({"build", "h4-pants"})));
              c.require(p.euler == -1 && p.boundary_circles == 3, "pants " + p.class_name);
              const auto x = report(io::parse_complex(run_cli({"build", "h4-crosscap"})));
              c.require(x.squares == 34 && x.euler == 1 && !x.orientable && x.is_closed, "crosscap " + x.class_name);
              // fresh system so the enumeration is really performed here
              const auto sys = coxeter::CoxeterSystem::parse("{4,3,3,5}");
              const auto t0 = std::chrono::steady_clock::now();
              const auto order = sys.parabolic_order(sys.cell_mask(0));
              const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
              c.require(order == 14400, "|[3,3,5]| = " + std::to_string(order));
              c.note << "|[3,3,5]| = " << order << " in " << secs << " s";
            });

  criterion(10, "determinism: every build repeated 3x with 1, 4 and 8 threads is byte-identical", 4 * kDeskSeconds,
            [](Check& c) {
              const auto dir = fs::temp_directory_path() / ("gridforge_accept_" + std::to_string(::getpid()));
              fs::create_directories(dir);
              std::map<std::string, std::vector<std::string>> params = {
                  {"closed-surface", {"--genus", "2"}},
                  {"tree-spiral", {"--depth", "4"}},
                  {"tree-of-life", {"--depth", "2"}},
                  {"pruned-tree", {"--depth", "2", "--prune", "0", "--genus", "1", "--crosscaps", "1", "--ends", "cylinder:1,ladder:1"}},
                  {"hyp-tree", {"--depth", "2"}},
                  {"hyp-closed", {"--genus", "2"}},
                  {"h4-surface", {"--genus", "1", "--ends", "2"}},
              };
              int builds = 0;
              for (const auto& name : cli::build_names()) {
                std::vector<std::string> outputs;
                for (const char* threads : {"1", "4", "8"}) {
                  const auto path = (dir / (name + "_" + threads + ".json")).string();
                  std::vector<std::string> args = {"--threads", threads, "build", name, "--out", path};
                  if (params.count(name)) args.insert(args.end(), params.at(name).begin(), params.at(name).end());
                  run_cli(args);
                  outputs.push_back(io::read_file(path));
                }
                c.require(!outputs[0].empty() && outputs[0] == outputs[1] && outputs[1] == outputs[2], name + " differs");
                ++builds;
              }
              fs::remove_all(dir);
              c.note << builds << " constructions";
            });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures;
}
