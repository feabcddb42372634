#ifndef RKH_MOVES_HPP
#define RKH_MOVES_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rkh/arrow.hpp"
#include "rkh/complex.hpp"
#include "rkh/homology.hpp"

namespace rkh {

enum class MoveKind { R1VertexEdge, R1DoubleArrow, R2, R3 };

// Forward sites name gaps: gap g of a circle sits just before its arrow g,
// counted in the reading order of the input. Inverse sites and R3 name labels.
struct MoveSite {
  MoveKind kind = MoveKind::R1VertexEdge;
  bool inverse = false;
  int circle = 0;
  int gap = 0;
  int circle2 = 0;  // R2 only
  int gap2 = 0;     // R2 only
  std::array<int, 3> labels{};
  bool operator==(const MoveSite&) const = default;
};

// `R1a c0 p3`, `R1b c0 p0`, `R2 c0 p1 c1 p4`, `R3 1 2 3`,
// `R1a- 4`, `R1b- 4`, `R2- 4 5`, `R3- 1 2 3`
MoveSite parse_move(const std::string& line);
std::vector<MoveSite> parse_move_script(const std::string& text);
std::string to_string(const MoveSite& site);

// Kh(after) = Kh(before)[r]{s}; inverse moves negate.
std::pair<int, int> move_shift(const MoveSite& site);

struct MoveResult {
  ArrowPresentation presentation;  // normalized, all arrows +
  // where the input basepoint lands; empty when its circle was removed or
  // it sat inside a rewritten block
  std::optional<Basepoint> basepoint;
};

// New labels are one and two above the largest label in use.
MoveResult apply_move(const ArrowPresentation& ap, const MoveSite& site, Basepoint bp);
ArrowPresentation apply_move(const ArrowPresentation& ap, const MoveSite& site);

// every applicable site, forward and inverse
std::vector<MoveSite> enumerate_sites(const ArrowPresentation& ap);

struct InvarianceReport {
  std::pair<int, int> shift;
  bool unreduced_ok = false;
  bool reduced_checked = false;
  bool reduced_ok = false;
  std::optional<Basepoint> basepoint_before, basepoint_after;
  BigradedGroup before, after;
  bool ok() const { return unreduced_ok && (!reduced_checked || reduced_ok); }
};

// Compares homology before and after the move under the move's shift. The
// reduced comparison uses the first basepoint that survives the move.
InvarianceReport check_invariance(const ArrowPresentation& ap, const MoveSite& site,
                                  int max_edges = kDefaultMaxEdges);

}  // namespace rkh

#endif
