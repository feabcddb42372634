#ifndef RKH_CHECKS_HPP
#define RKH_CHECKS_HPP

#include <random>
#include <string>
#include <vector>

#include "rkh/complex.hpp"
#include "rkh/homology.hpp"
#include "rkh/links.hpp"
#include "rkh/ribbon_graph.hpp"

namespace rkh {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, or a short summary
};

struct CheckReport {
  std::vector<CheckResult> results;
  bool passed() const;
  void add(CheckResult r) { results.push_back(std::move(r)); }
  void append(const CheckReport& o);
};

// With n = |E|:
//   rank Kh^{i,j}(G*) = rank Kh^{n-i,n-j}(G)
//   Tor Kh^{i,j}(G*) = Tor Kh^{n-i+1,n-j}(G)
// The reduced version uses the dual basepoint.
CheckResult check_duality(const RibbonGraph& g, int max_edges = kDefaultMaxEdges);
CheckResult check_reduced_duality(const RibbonGraph& g, Basepoint bp = {}, int max_edges = kDefaultMaxEdges);

// Width, loopless, adequate and span statements about reduced homology.
CheckReport check_grading_theorems(const RibbonGraph& g, Basepoint bp = {}, int max_edges = kDefaultMaxEdges);

// Kauffman circle count equals the boundary count of the matching spanning
// subgraph of the all-A graph, for every state.
CheckResult check_state_circles(const PDCode& pd);

// homology under the standard assignment and `trials` random ones
CheckResult check_assignment_independence(const RibbonGraph& g, int trials, std::mt19937_64& rng,
                                          int max_edges = kDefaultMaxEdges);

// resolution-tree leaves against the brute-force census; leaf-counter
// gradings against activity gradings under the label order and `orders`
// random orders
CheckResult check_quasi_tree_oracle(const RibbonGraph& g, int orders, std::mt19937_64& rng);

// quasi-tree polynomial against the reduced Euler characteristic
CheckResult check_euler_bridge(const RibbonGraph& g, int max_edges = kDefaultMaxEdges);
// Jones expansion against the shifted reduced Euler characteristic of the
// all-A graph
CheckResult check_jones_bridge(const PDCode& pd, int max_edges = kDefaultMaxEdges);

// everything that applies to a ribbon graph
CheckReport run_graph_checks(const RibbonGraph& g, Basepoint bp, std::mt19937_64& rng,
                             int max_edges = kDefaultMaxEdges);
// the graph checks on the all-A graph plus the link-specific ones
CheckReport run_link_checks(const PDCode& pd, std::mt19937_64& rng, int max_edges = kDefaultMaxEdges);

}  // namespace rkh

#endif
