#include "rkh/quasitree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace rkh {

EdgeOrder label_order(const RibbonGraph& g) {
  EdgeOrder order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.label(a) < g.label(b); });
  return order;
}

EdgeOrder parse_edge_order(const RibbonGraph& g, const std::string& text) {
  EdgeOrder order;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    int label = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), label);
    if (ec != std::errc{} || end != tok.data() + tok.size()) throw Error("bad edge label in order: " + tok);
    const int e = g.edge_with_label(label);
    if (e < 0) throw Error("edge order names unknown label " + tok);
    order.push_back(e);
  }
  if (static_cast<int>(order.size()) != g.num_edges() ||
      std::set<int>(order.begin(), order.end()).size() != order.size())
    throw Error("edge order must list every edge exactly once");
  return order;
}

namespace {

void check_order(const RibbonGraph& g, const EdgeOrder& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(sorted.size()) == g.num_edges();
  for (int k = 0; ok && k < g.num_edges(); ++k) ok = sorted[k] == k;
  if (!ok) throw Error("edge order is not a permutation of the edges");
}

void resolve(const RibbonGraph& h, const RibbonGraph& root, const EdgeOrder& order, int depth,
             ResolutionLeaf leaf, std::vector<ResolutionLeaf>& out) {
  const int n = static_cast<int>(order.size());
  if (depth == n) {
    out.push_back(leaf);
    return;
  }
  const int original = order[n - 1 - depth];
  const int e = h.edge_with_label(root.label(original));
  const EdgeSet bit = EdgeSet{1} << original;
  switch (classify_edge(h, e)) {
    case EdgeKind::Bridge:
      leaf.edges_kept |= bit;
      ++leaf.bridge_count;
      resolve(h, root, order, depth + 1, leaf, out);
      return;
    case EdgeKind::SeparatingLoop:
      ++leaf.loop_count;
      resolve(h, root, order, depth + 1, leaf, out);
      return;
    default: {
      resolve(delete_edge(h, e), root, order, depth + 1, leaf, out);
      leaf.edges_kept |= bit;
      ++leaf.con_count;
      resolve(contract_edge(h, e), root, order, depth + 1, leaf, out);
    }
  }
}

}  // namespace

std::vector<ResolutionLeaf> resolution_tree_leaves(const RibbonGraph& g, const EdgeOrder& order) {
  if (!is_connected(g)) throw Error("the quasi-tree expansion needs a connected ribbon graph");
  check_order(g, order);
  std::vector<ResolutionLeaf> out;
  resolve(g, g, order, 0, {}, out);
  return out;
}

std::vector<QuasiTreeRecord> quasi_trees(const RibbonGraph& g, const EdgeOrder& order) {
  std::vector<QuasiTreeRecord> out;
  for (const auto& leaf : resolution_tree_leaves(g, order)) {
    QuasiTreeRecord r;
    r.edges = leaf.edges_kept;
    r.genus = (popcount(r.edges) - g.num_vertices() + 1) / 2;
    const auto act = activities(g, chord_diagram(g, r.edges), order, r.edges);
    r.ia = act.ia;
    r.ea = act.ea;
    r.i = leaf.loop_count + leaf.con_count;
    r.j = 2 * leaf.loop_count - leaf.bridge_count + leaf.con_count;
    out.push_back(r);
  }
  return out;
}

std::vector<EdgeSet> quasi_tree_census(const RibbonGraph& g) {
  if (g.num_edges() > 30) throw Error("too many edges for a brute-force census");
  std::vector<EdgeSet> out;
  for (EdgeSet s = 0; s < (EdgeSet{1} << g.num_edges()); ++s)
    if (boundary_count(g, s) == 1) out.push_back(s);
  return out;
}

bool ChordDiagram::crosses(int a, int b) const {
  std::vector<int> pa, pb;
  for (int k = 0; k < static_cast<int>(word.size()); ++k) {
    if (word[k] == a) pa.push_back(k);
    if (word[k] == b) pb.push_back(k);
  }
  if (pa.size() != 2 || pb.size() != 2 || a == b) return false;
  const bool in0 = pa[0] < pb[0] && pb[0] < pa[1];
  const bool in1 = pa[0] < pb[1] && pb[1] < pa[1];
  return in0 != in1;
}

ChordDiagram chord_diagram(const RibbonGraph& g, EdgeSet tree) {
  ChordDiagram cd;
  const int n = g.num_edges();
  if (n == 0) return cd;
  if (g.degree(0) == 0) throw Error("vertex 0 is isolated; the edge set is not a quasi-tree");
  int v = 0, pos = 0;
  do {
    if (static_cast<int>(cd.word.size()) >= 2 * n) throw Error("edge set is not a spanning quasi-tree");
    const int h = g.rotation(v)[pos];
    cd.word.push_back(g.label(edge_of(h)));
    if ((tree >> edge_of(h)) & 1) {
      const int p = partner(h);
      v = g.vertex_of(p);
      pos = g.position_of(p);
    }
    pos = (pos + 1) % g.degree(v);
  } while (v != 0 || pos != 0);
  if (static_cast<int>(cd.word.size()) != 2 * n) throw Error("edge set is not a spanning quasi-tree");
  return cd;
}

Activities activities(const RibbonGraph& g, const ChordDiagram& cd, const EdgeOrder& order, EdgeSet internal) {
  Activities a;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int e = order[k];
    bool active = true;
    for (std::size_t l = 0; l < k && active; ++l)
      if (cd.crosses(g.label(e), g.label(order[l]))) active = false;
    if (!active) continue;
    if ((internal >> e) & 1)
      ++a.ia;
    else
      ++a.ea;
  }
  return a;
}

std::pair<int, int> gradings_via_activities(const RibbonGraph& g, EdgeSet tree, const EdgeOrder& order) {
  const int v = g.num_vertices();
  const int gen = (popcount(tree) - v + 1) / 2;
  const auto act = activities(g, chord_diagram(g, tree), order, tree);
  return {2 * gen + act.ea - act.ia + v - 1, 2 * (gen + act.ea - act.ia) + v - 1};
}

LaurentPoly quasi_tree_polynomial(const std::vector<QuasiTreeRecord>& records) {
  LaurentPoly p;
  for (const auto& r : records) p.add(r.j, r.i % 2 ? -1 : 1);
  return p;
}

bool is_differential_forced_zero(const std::vector<QuasiTreeRecord>& records) {
  std::set<std::pair<int, int>> occupied;
  for (const auto& r : records) occupied.insert({r.i, r.j});
  for (const auto& [i, j] : occupied)
    if (occupied.count({i + 1, j})) return false;
  return true;
}

LaurentPoly jones_expansion(const PDCode& pd) {
  const AllA a = all_A_ribbon_graph(pd);
  const RibbonGraph g = to_ribbon_graph(a.presentation);
  const int np = a.signs.n_plus, nm = a.signs.n_minus;
  LaurentPoly p;
  for (const auto& r : quasi_trees(g, label_order(g)))
    p.add(r.j + np - 2 * nm, ((r.i - nm) % 2) ? -1 : 1);
  return p;
}

}  // namespace rkh
