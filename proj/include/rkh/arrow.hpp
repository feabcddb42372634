#ifndef RKH_ARROW_HPP
#define RKH_ARROW_HPP

#include <optional>
#include <string>
#include <vector>

#include "rkh/ribbon_graph.hpp"

namespace rkh {

struct Arrow {
  int label = 0;
  int dir = 1;  // +1 points along the reading direction of its circle
  bool operator==(const Arrow&) const = default;
};

// Circles carrying paired marking arrows. Each circle is read
// counterclockwise; every label occurs on exactly two arrows.
struct ArrowPresentation {
  std::vector<std::vector<Arrow>> circles;

  int num_labels() const;
  std::vector<int> sorted_labels() const;
  bool operator==(const ArrowPresentation&) const = default;
};

// Grammar: `circle:` followed by tokens like `3+` or `12-`; `;` or a newline
// ends a circle and `#` starts a comment. Labels are compressed to 1..n
// keeping their numeric order.
ArrowPresentation parse_arrow_presentation(const std::string& text);

// Writes one `circle:` line per circle, labels compressed to 1..n.
std::string emit_arrow_presentation(const ArrowPresentation& ap);

// Raises on a label that does not occur exactly twice.
void validate(const ArrowPresentation& ap);

// Per-circle signs making every band untwisted, or nothing if some cycle of
// disks and bands is a Moebius band. First circle of each component gets +1.
std::optional<std::vector<int>> orientation_signs(const ArrowPresentation& ap);
bool check_orientable(const ArrowPresentation& ap);

// Flips the circles with sign -1 and turns every arrow to +.
ArrowPresentation normalized(const ArrowPresentation& ap, std::vector<int>* signs = nullptr);

// One vertex per circle. Edges follow the sorted labels; the rotation is the
// reading order after normalization.
RibbonGraph to_ribbon_graph(const ArrowPresentation& ap);
ArrowPresentation from_ribbon_graph(const RibbonGraph& g);

// Position of gap g of an m-arrow circle after the circle is reversed.
inline int reversed_gap(int gap, int m) { return m == 0 ? 0 : (m - gap) % m; }

}  // namespace rkh

#endif
