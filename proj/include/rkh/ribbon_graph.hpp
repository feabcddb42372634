#ifndef RKH_RIBBON_GRAPH_HPP
#define RKH_RIBBON_GRAPH_HPP

#include <random>
#include <string>
#include <vector>

#include "rkh/types.hpp"

namespace rkh {

// Edge k owns half-edges 2k and 2k+1.
inline int partner(int h) { return h ^ 1; }
inline int edge_of(int h) { return h >> 1; }

// Oriented ribbon graph stored as a rotation system: the half-edges around
// each vertex in counterclockwise order.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  explicit RibbonGraph(std::vector<std::vector<int>> rotations, std::vector<int> labels = {});

  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return static_cast<int>(labels_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }

  const std::vector<std::vector<int>>& rotations() const { return rotations_; }
  const std::vector<int>& rotation(int v) const { return rotations_[v]; }
  int degree(int v) const { return static_cast<int>(rotations_[v].size()); }

  int vertex_of(int h) const { return vertex_of_[h]; }
  int position_of(int h) const { return position_of_[h]; }
  // next half-edge in the rotation at h's vertex
  int next(int h) const;

  const std::vector<int>& labels() const { return labels_; }
  int label(int e) const { return labels_[e]; }
  int edge_with_label(int label) const;

  EdgeSet all_edges() const;
  bool is_loop(int e) const { return vertex_of_[2 * e] == vertex_of_[2 * e + 1]; }

  bool operator==(const RibbonGraph& o) const {
    return rotations_ == o.rotations_ && labels_ == o.labels_;
  }

 private:
  std::vector<std::vector<int>> rotations_;
  std::vector<int> labels_;
  std::vector<int> vertex_of_;
  std::vector<int> position_of_;
};

// Marked point on a vertex boundary: gap g sits just before the g-th
// half-edge of the rotation.
struct Basepoint {
  int vertex = 0;
  int gap = 0;
};

// Corners are the gaps of the vertex boundaries. Corner h is the gap after
// half-edge h; an isolated vertex v has the single corner 2n+v.
int corner_count(const RibbonGraph& g);
int basepoint_corner(const RibbonGraph& g, Basepoint bp);

struct BoundaryWalkSet {
  int count = 0;
  // walks[c] lists the present half-edges p whose following boundary arc
  // belongs to component c, in traversal order; the band crossed after p is
  // at the next present half-edge. Empty for bare vertex circles.
  std::vector<std::vector<int>> walks;
  // component of every corner, -1 for unused slots
  std::vector<int> corner_component;
};

// Boundary components of the spanning subgraph with edge set h, ordered by
// smallest corner.
BoundaryWalkSet boundary_components(const RibbonGraph& g, EdgeSet h);
int boundary_count(const RibbonGraph& g, EdgeSet h);

// face count from the cycle structure of next-in-rotation composed with partner
int face_count_by_permutation(const RibbonGraph& g);

std::vector<int> vertex_components(const RibbonGraph& g, EdgeSet h, int* count = nullptr);
int component_count(const RibbonGraph& g, EdgeSet h);
int component_count(const RibbonGraph& g);
bool is_connected(const RibbonGraph& g);

int genus(const RibbonGraph& g);
int genus(const RibbonGraph& g, EdgeSet h);

RibbonGraph dual(const RibbonGraph& g);
// corner h of g is corner partner(h) of the dual
Basepoint dual_basepoint(const RibbonGraph& g, Basepoint bp);
RibbonGraph spanning_subgraph(const RibbonGraph& g, EdgeSet h);
RibbonGraph delete_edge(const RibbonGraph& g, int e);
RibbonGraph contract_edge(const RibbonGraph& g, int e);

enum class EdgeKind { Bridge, SeparatingLoop, NonseparatingLoop, Ordinary };
EdgeKind classify_edge(const RibbonGraph& g, int e);
const char* to_string(EdgeKind k);

bool has_loop(const RibbonGraph& g);
bool is_adequate(const RibbonGraph& g);

// Orientation-preserving isomorphism invariant, ignoring edge labels.
std::vector<std::vector<int>> canonical_form(const RibbonGraph& g);
bool isomorphic(const RibbonGraph& a, const RibbonGraph& b);

RibbonGraph random_ribbon_graph(int vertices, int edges, std::mt19937_64& rng);

std::string describe(const RibbonGraph& g);

}  // namespace rkh

#endif
