#ifndef RKH_QUASITREE_HPP
#define RKH_QUASITREE_HPP

#include <string>
#include <utility>
#include <vector>

#include "rkh/laurent.hpp"
#include "rkh/links.hpp"
#include "rkh/ribbon_graph.hpp"

namespace rkh {

// An edge order lists edge indices e_1 < e_2 < ... < e_n.
using EdgeOrder = std::vector<int>;

// edges sorted by label
EdgeOrder label_order(const RibbonGraph& g);
// "3,1,2" by labels
EdgeOrder parse_edge_order(const RibbonGraph& g, const std::string& text);

struct ResolutionLeaf {
  EdgeSet edges_kept = 0;
  int loop_count = 0;
  int bridge_count = 0;
  int con_count = 0;
};

// Deletion / ribbon-contraction tree, resolving e_n first. Bridges and
// separating loops have a single child; other edges branch into delete
// (first) and contract.
std::vector<ResolutionLeaf> resolution_tree_leaves(const RibbonGraph& g, const EdgeOrder& order);

struct QuasiTreeRecord {
  EdgeSet edges = 0;
  int genus = 0;
  int ia = 0;
  int ea = 0;
  int i = 0;
  int j = 0;
  bool operator==(const QuasiTreeRecord&) const = default;
};

// One record per leaf; i, j from the leaf counters, ia/ea from the chord
// diagram.
std::vector<QuasiTreeRecord> quasi_trees(const RibbonGraph& g, const EdgeOrder& order);

// every edge subset with one boundary component, by brute force
std::vector<EdgeSet> quasi_tree_census(const RibbonGraph& g);

struct ChordDiagram {
  std::vector<int> word;  // edge labels in boundary order
  bool crosses(int label_a, int label_b) const;
};

// Boundary word of the quasi-tree surface read from the corner before the
// first half-edge of vertex 0. Internal edges contribute both band sides,
// external edges both attachment points.
ChordDiagram chord_diagram(const RibbonGraph& g, EdgeSet tree);

struct Activities {
  int ia = 0;
  int ea = 0;
};

// chord c is active when it meets no chord of a smaller edge
Activities activities(const RibbonGraph& g, const ChordDiagram& cd, const EdgeOrder& order, EdgeSet internal);

// i = 2g + ea - ia + |V| - 1, j = 2(g + ea - ia) + |V| - 1
std::pair<int, int> gradings_via_activities(const RibbonGraph& g, EdgeSet tree, const EdgeOrder& order);

// sum of (-1)^i q^j
LaurentPoly quasi_tree_polynomial(const std::vector<QuasiTreeRecord>& records);

// no pair of generators at (i, j) and (i+1, j)
bool is_differential_forced_zero(const std::vector<QuasiTreeRecord>& records);

// sum over quasi-trees of the all-A ribbon graph of
// (-1)^(i - n_-) q^(j + n_+ - 2 n_-)
LaurentPoly jones_expansion(const PDCode& pd);

}  // namespace rkh

#endif
