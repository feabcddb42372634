#ifndef RKH_TESTS_SUPPORT_HPP
#define RKH_TESTS_SUPPORT_HPP

#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rkh/arrow.hpp"
#include "rkh/homology.hpp"
#include "rkh/io.hpp"
#include "rkh/links.hpp"

namespace fixtures {

inline const char* const kThreeLoops = "circle: 1+ 2+ 3+ 1+ 2+ 3+";
inline const char* const kTwoVertex = "circle: 1+ 3+ 2+ 3+ ; circle: 1+ 2+";
inline const char* const kBridge = "circle: 1+ ; circle: 1+";
inline const char* const kLoop = "circle: 1+ 1+";
inline const char* const kTheta = "circle: 1+ 2+ 3+ ; circle: 3+ 2+ 1+";
inline const char* const kUnknot3 = "X[4,1,5,2] X[2,5,3,6] X[3,1,4,6]";
inline const char* const kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
inline const char* const kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

inline std::string data_path(const std::string& name) { return std::string(RKH_DATA_DIR) + "/" + name; }
inline std::string test_data_path(const std::string& name) { return std::string(RKH_TEST_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rkh::Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline rkh::RibbonGraph graph(const std::string& arrows) {
  return rkh::to_ribbon_graph(rkh::parse_arrow_presentation(arrows));
}

inline rkh::RibbonGraph all_A(const std::string& pd) {
  return rkh::to_ribbon_graph(rkh::all_A_ribbon_graph(rkh::parse_pd(pd)).presentation);
}

// free groups only: {i, j, rank}
inline rkh::BigradedGroup free_group(std::initializer_list<std::tuple<int, int, long long>> entries) {
  rkh::BigradedGroup g;
  for (const auto& [i, j, r] : entries) g.set({i, j}, rkh::GroupEntry{r, {}});
  return g;
}

inline rkh::RibbonGraph random_connected(std::mt19937_64& rng, int max_vertices, int max_edges) {
  for (;;) {
    const int v = 1 + static_cast<int>(rng() % max_vertices);
    const int lo = v - 1;
    if (lo > max_edges) continue;
    const int e = lo + static_cast<int>(rng() % (max_edges - lo + 1));
    auto g = rkh::random_ribbon_graph(v, e, rng);
    if (rkh::is_connected(g)) return g;
  }
}

// fixed graphs plus a seeded batch of random connected ones
inline std::vector<rkh::RibbonGraph> test_graphs(int random_count = 20, int max_edges = 6, std::uint64_t seed = 7) {
  std::vector<rkh::RibbonGraph> out;
  for (const char* s : {kThreeLoops, kTwoVertex, kBridge, kLoop, kTheta, "circle:", "circle: 1+ 2+ 1+ 2+",
                        "circle: 1+ 2+ ; circle: 2+ 1+", "circle: 1+ 3+ ; circle: 2+ 1+ ; circle: 3+ 2+"})
    out.push_back(graph(s));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_count; ++k) out.push_back(random_connected(rng, 4, max_edges));
  return out;
}

inline std::set<int> labels_at(const rkh::RibbonGraph& g, int v) {
  std::set<int> out;
  for (int h : g.rotation(v)) out.insert(g.label(rkh::edge_of(h)));
  return out;
}

}  // namespace fixtures

#endif
