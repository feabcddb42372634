#include "rkh/complex.hpp"

#include <string>

namespace rkh {

int StateGenerator::j() const {
  int plus = 0;
  for (int c = 0; c < components; ++c) plus += label(c);
  return i() + plus;
}

EdgeAssignment EdgeAssignment::standard(int n) {
  EdgeAssignment a;
  a.n_ = n;
  const EdgeSet states = EdgeSet{1} << n;
  a.signs_.assign(states * n, 0);
  for (EdgeSet s = 0; s < states; ++s)
    for (int k = 0; k < n; ++k) {
      if ((s >> k) & 1) continue;
      const EdgeSet below = s & ((EdgeSet{1} << k) - 1);
      a.signs_[s * n + k] = (popcount(below) % 2) ? -1 : 1;
    }
  return a;
}

EdgeAssignment EdgeAssignment::random(int n, std::mt19937_64& rng) {
  EdgeAssignment a = standard(n);
  const EdgeSet states = EdgeSet{1} << n;
  std::vector<std::int8_t> eta(states);
  for (auto& x : eta) x = (rng() & 1) ? -1 : 1;
  for (EdgeSet s = 0; s < states; ++s)
    for (int k = 0; k < n; ++k)
      if (!((s >> k) & 1)) a.signs_[s * n + k] *= eta[s] * eta[s | (EdgeSet{1} << k)];
  return a;
}

bool EdgeAssignment::satisfies_square_condition() const {
  const EdgeSet states = EdgeSet{1} << n_;
  for (EdgeSet s = 0; s < states; ++s)
    for (int k = 0; k < n_; ++k)
      for (int l = k + 1; l < n_; ++l) {
        const EdgeSet bk = EdgeSet{1} << k, bl = EdgeSet{1} << l;
        if ((s & bk) || (s & bl)) continue;
        const int prod = sign(s, k) * sign(s | bk, l) * sign(s, l) * sign(s | bl, k);
        if (prod != -1) return false;
      }
  return true;
}

int BigradedComplex::rank(Bidegree b) const {
  auto it = generators.find(b);
  return it == generators.end() ? 0 : static_cast<int>(it->second.size());
}

IntMatrix BigradedComplex::differential(Bidegree b) const {
  auto it = differentials.find(b);
  if (it != differentials.end()) return it->second;
  return IntMatrix::Zero(rank({b.first + 1, b.second}), rank(b));
}

namespace {

struct StateData {
  BoundaryWalkSet walks;
  // block index of each labeling, -1 when the labeling is excluded
  std::vector<int> index;
};

BigradedComplex build(const RibbonGraph& g, const EdgeAssignment& eps, int marked_corner, int max_edges) {
  const int n = g.num_edges();
  if (n > max_edges)
    throw Error("graph has " + std::to_string(n) + " edges, above the limit of " +
                std::to_string(max_edges) + " (raise it with --max-edges)");
  if (n > 30) throw Error("more than 30 edges is not supported");
  if (eps.dimension() != n) throw Error("edge assignment dimension does not match the graph");

  const EdgeSet states = EdgeSet{1} << n;
  std::vector<StateData> data(states);
  BigradedComplex cx;
  cx.edges = n;

  for (EdgeSet s = 0; s < states; ++s) {
    auto& d = data[s];
    d.walks = boundary_components(g, s);
    const int f = d.walks.count;
    const int marked = marked_corner >= 0 ? d.walks.corner_component[marked_corner] : -1;
    d.index.assign(std::size_t{1} << f, -1);
    for (std::uint32_t lab = 0; lab < (1u << f); ++lab) {
      StateGenerator gen{s, lab, f};
      if (marked >= 0 && gen.label(marked) != -1) continue;
      auto& block = cx.generators[{gen.i(), gen.j()}];
      d.index[lab] = static_cast<int>(block.size());
      block.push_back(gen);
    }
  }

  for (const auto& [b, gens] : cx.generators) {
    const int target = cx.rank({b.first + 1, b.second});
    if (target > 0) cx.differentials[b] = IntMatrix::Zero(target, static_cast<Eigen::Index>(gens.size()));
  }

  const int corners = corner_count(g);
  for (EdgeSet s = 0; s < states; ++s) {
    const auto& src = data[s];
    const int fs = src.walks.count;
    for (int k = 0; k < n; ++k) {
      if ((s >> k) & 1) continue;
      const EdgeSet t = s | (EdgeSet{1} << k);
      const auto& dst = data[t];
      const int ft = dst.walks.count;
      const int sign = eps.sign(s, k);
      const int i = popcount(s);

      // component correspondence through shared corners
      std::vector<int> fwd(fs, -1);
      std::vector<int> back(ft, -1);
      int merged_a = -1, merged_b = -1, split_src = -1, split_a = -1, split_b = -1;
      for (int c = 0; c < corners; ++c) {
        const int a = src.walks.corner_component[c];
        const int z = dst.walks.corner_component[c];
        if (a < 0) continue;
        fwd[a] = z;
        if (back[z] < 0) back[z] = a;
      }
      if (ft == fs - 1) {
        for (int a = 0; a < fs; ++a)
          for (int b2 = a + 1; b2 < fs; ++b2)
            if (fwd[a] == fwd[b2]) merged_a = a, merged_b = b2;
      } else if (ft == fs + 1) {
        for (int z = 0; z < ft; ++z)
          for (int z2 = z + 1; z2 < ft; ++z2)
            if (back[z] == back[z2]) split_src = back[z], split_a = z, split_b = z2;
      } else {
        throw Error("edge map neither merges nor splits; the ribbon graph is not orientable");
      }

      for (std::uint32_t lab = 0; lab < (1u << fs); ++lab) {
        const int col = src.index[lab];
        if (col < 0) continue;
        const StateGenerator gen{s, lab, fs};
        auto emit = [&](const std::vector<int>& out_labels) {
          std::uint32_t tl = 0;
          for (int z = 0; z < ft; ++z)
            if (out_labels[z] < 0) tl |= 1u << (ft - 1 - z);
          const int row = dst.index[tl];
          if (row < 0) throw Error("reduced subcomplex is not closed under the differential");
          cx.differentials.at({i, gen.j()})(row, col) += sign;
        };
        std::vector<int> out(ft, 0);
        if (merged_a >= 0) {
          const int la = gen.label(merged_a), lb = gen.label(merged_b);
          if (la < 0 && lb < 0) continue;
          for (int a = 0; a < fs; ++a) out[fwd[a]] = gen.label(a);
          out[fwd[merged_a]] = (la > 0 && lb > 0) ? 1 : -1;
          emit(out);
        } else {
          for (int z = 0; z < ft; ++z)
            if (z != split_a && z != split_b) out[z] = gen.label(back[z]);
          if (gen.label(split_src) > 0) {
            out[split_a] = 1;
            out[split_b] = -1;
            emit(out);
            out[split_a] = -1;
            out[split_b] = 1;
            emit(out);
          } else {
            out[split_a] = -1;
            out[split_b] = -1;
            emit(out);
          }
        }
      }
    }
  }
  return cx;
}

}  // namespace

BigradedComplex build_complex(const RibbonGraph& g, const EdgeAssignment& eps, int max_edges) {
  return build(g, eps, -1, max_edges);
}

BigradedComplex build_complex(const RibbonGraph& g, int max_edges) {
  if (g.num_edges() > max_edges) return build(g, EdgeAssignment{}, -1, max_edges);
  return build(g, EdgeAssignment::standard(g.num_edges()), -1, max_edges);
}

BigradedComplex build_reduced_complex(const RibbonGraph& g, Basepoint bp, const EdgeAssignment& eps,
                                      int max_edges) {
  auto cx = build(g, eps, basepoint_corner(g, bp), max_edges);
  cx.shift_j = 1;
  return cx;
}

BigradedComplex build_reduced_complex(const RibbonGraph& g, Basepoint bp, int max_edges) {
  if (g.num_edges() > max_edges) return build(g, EdgeAssignment{}, -1, max_edges);
  return build_reduced_complex(g, bp, EdgeAssignment::standard(g.num_edges()), max_edges);
}

bool squares_to_zero(const BigradedComplex& c) {
  for (const auto& [b, d] : c.differentials) {
    auto it = c.differentials.find({b.first + 1, b.second});
    if (it == c.differentials.end()) continue;
    if (!(it->second * d).isZero()) return false;
  }
  return true;
}

}  // namespace rkh
