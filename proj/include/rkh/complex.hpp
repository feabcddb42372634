#ifndef RKH_COMPLEX_HPP
#define RKH_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "rkh/ribbon_graph.hpp"

namespace rkh {

using Bidegree = std::pair<int, int>;  // (i, j)

constexpr int kDefaultMaxEdges = 14;

// A state together with a v+/v- label on each of its boundary components.
// Bit (F-1-c) of `labeling` is set when component c carries v-, so that
// labelings sorted numerically are in lexicographic order, v+ first.
struct StateGenerator {
  EdgeSet state = 0;
  std::uint32_t labeling = 0;
  int components = 0;

  int label(int c) const { return ((labeling >> (components - 1 - c)) & 1) ? -1 : 1; }
  int i() const { return popcount(state); }
  int j() const;
  bool operator==(const StateGenerator&) const = default;
};

// Signs on the edges of the n-cube {0,1}^n. The edge from I flipping
// coordinate k (bit k of I clear) is looked up by (I, k).
class EdgeAssignment {
 public:
  // (-1)^(number of earlier coordinates equal to 1)
  static EdgeAssignment standard(int n);
  // standard assignment times the coboundary of a random vertex sign
  static EdgeAssignment random(int n, std::mt19937_64& rng);

  int dimension() const { return n_; }
  int sign(EdgeSet from, int k) const { return signs_[from * n_ + k]; }
  // every 2-face carries an odd number of -1 signs
  bool satisfies_square_condition() const;

 private:
  int n_ = 0;
  std::vector<std::int8_t> signs_;
};

struct BigradedComplex {
  std::map<Bidegree, std::vector<StateGenerator>> generators;
  // d^{i,j}: C^{i,j} -> C^{i+1,j}; rows index the target basis
  std::map<Bidegree, IntMatrix> differentials;
  int shift_i = 0;
  int shift_j = 0;
  int edges = 0;

  int rank(Bidegree b) const;
  // differential out of b, as a zero matrix of the right shape if absent
  IntMatrix differential(Bidegree b) const;
};

BigradedComplex build_complex(const RibbonGraph& g, const EdgeAssignment& eps,
                              int max_edges = kDefaultMaxEdges);
BigradedComplex build_complex(const RibbonGraph& g, int max_edges = kDefaultMaxEdges);

// Subcomplex with v- on the component through the basepoint, shifted by {1}.
BigradedComplex build_reduced_complex(const RibbonGraph& g, Basepoint bp, const EdgeAssignment& eps,
                                      int max_edges = kDefaultMaxEdges);
BigradedComplex build_reduced_complex(const RibbonGraph& g, Basepoint bp = {},
                                      int max_edges = kDefaultMaxEdges);

bool squares_to_zero(const BigradedComplex& c);

}  // namespace rkh

#endif
