#ifndef RKH_LINKS_HPP
#define RKH_LINKS_HPP

#include <array>
#include <string>
#include <vector>

#include "rkh/arrow.hpp"

namespace rkh {

// Planar diagram code: X[a,b,c,d] lists the arcs at a crossing
// counterclockwise, starting from the incoming under-strand (a -> c).
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int size() const { return static_cast<int>(crossings.size()); }
};

PDCode parse_pd(const std::string& text);
std::string to_string(const PDCode& pd);

struct SignCount {
  int n_plus = 0;
  int n_minus = 0;
  int writhe() const { return n_plus - n_minus; }
};

// +1 when the over-strand runs d -> b, -1 when it runs b -> d. Over-strand
// directions are propagated along arcs from the under-strands; a component
// that never passes under is oriented by its arc numbering.
std::vector<int> crossing_signs(const PDCode& pd);
SignCount sign_count(const PDCode& pd);

struct AllA {
  ArrowPresentation presentation;  // arrow label k+1 is crossing k
  SignCount signs;
};

// Circles of the all-A state, marking arrows pointing b -> a on the {a,b}
// arc and d -> c on the {c,d} arc.
AllA all_A_ribbon_graph(const PDCode& pd);

struct KauffmanState {
  EdgeSet resolution = 0;  // bit k set: B-resolution at crossing k
  int circle_count = 0;
};

KauffmanState kauffman_state(const PDCode& pd, EdgeSet resolution);

}  // namespace rkh

#endif
